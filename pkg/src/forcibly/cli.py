"""Command-line front end.

Exit codes: 0 success, 1 negative verdict under ``--strict``, 2 usage or
input error, 3 undecided because of ``--timeout-ms``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import enumeration, forcible, kforce, sampling
from .errors import ForciblyError, SearchTimeout
from .seqcore import DegreeSequence

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parse_seq(text: str) -> DegreeSequence:
    try:
        return DegreeSequence.parse(text)
    except (ValueError, ForciblyError) as exc:
        raise UsageError(f"{exc}; grammar: INT ((,|space) INT)* or INT^INT (space INT^INT)*") from None


def _inputs(args) -> list[DegreeSequence]:
    if args.stdin:
        if args.sequence:
            raise UsageError("--stdin and a positional SEQUENCE are mutually exclusive")
        return [_parse_seq(line) for line in sys.stdin if line.strip()]
    if not args.sequence:
        raise UsageError("missing SEQUENCE (or pass --stdin)")
    return [_parse_seq(args.sequence)]


def _timeout(args) -> Optional[float]:
    return None if args.timeout_ms is None else args.timeout_ms / 1000.0


def _seq_json(d) -> list[int]:
    return list(d)


def cmd_test(args, out) -> int:
    code = EXIT_OK
    for d in _inputs(args):
        try:
            v = forcible.is_forcibly_connected(d, timeout=_timeout(args))
        except SearchTimeout:
            _emit_undecided(args, out, d)
            code = EXIT_TIMEOUT
            continue
        if args.format == "json":
            rec = {"sequence": _seq_json(d), "forcibly_connected": v.forcibly_connected,
                   "decided_by": v.decided_by.value,
                   "witness": None if v.witness is None else
                   [_seq_json(v.witness.first), _seq_json(v.witness.second)]}
            out.write(json.dumps(rec) + "\n")
        elif args.format == "csv":
            w = "" if v.witness is None else str(v.witness)
            out.write(f"\"{d}\",{str(v.forcibly_connected).lower()},{v.decided_by.value},\"{w}\"\n")
        else:
            line = f"forcibly-connected: {str(v.forcibly_connected).lower()} ({v.decided_by.value})"
            if v.witness is not None:
                line += f" witness {v.witness}"
            out.write(line + "\n")
        if args.strict and not v.forcibly_connected and code == EXIT_OK:
            code = EXIT_FALSE
    return code


def _emit_undecided(args, out, d):
    if args.format == "json":
        out.write(json.dumps({"sequence": _seq_json(d), "undecided": "timeout"}) + "\n")
    else:
        out.write("undecided (timeout)\n")


def cmd_decompose(args, out) -> int:
    d = _parse_seq(args.sequence)
    if args.all:
        decomps = list(forcible.enumerate_decompositions(d))
    else:
        v = forcible.is_forcibly_connected(d)
        decomps = [] if v.witness is None else [v.witness]
    if args.format == "json":
        out.write(json.dumps([[_seq_json(x.first), _seq_json(x.second)] for x in decomps]) + "\n")
    elif args.format == "csv":
        out.write("first,second\n")
        for x in decomps:
            out.write(f"\"{x.first}\",\"{x.second}\"\n")
    else:
        if not decomps:
            out.write("no decomposition (forcibly connected)\n")
        for x in decomps:
            out.write(f"{x}\n")
    if args.strict and decomps:
        return EXIT_FALSE
    return EXIT_OK


def cmd_kconnect(args, out) -> int:
    code = EXIT_OK
    for d in _inputs(args):
        if args.k == 1:
            try:
                result = forcible.is_forcibly_connected(d, timeout=_timeout(args)).forcibly_connected
            except SearchTimeout:
                _emit_undecided(args, out, d)
                code = EXIT_TIMEOUT
                continue
        else:
            try:
                result = kforce.is_forcibly_k_connected(d, args.k, max_length=args.max_length,
                                                        timeout=_timeout(args))
            except SearchTimeout:
                _emit_undecided(args, out, d)
                code = EXIT_TIMEOUT
                continue
        if args.format == "json":
            out.write(json.dumps({"sequence": _seq_json(d), "k": args.k, "forcibly": result}) + "\n")
        else:
            out.write(f"forcibly-{args.k}-connected: {str(result).lower()}\n")
        if args.strict and not result and code == EXIT_OK:
            code = EXIT_FALSE
    return code


def _table_json(t) -> dict:
    return {str(k): v for k, v in t.rows()}


def cmd_count_seq(args, out) -> int:
    ns = range(args.n, (args.n_to or args.n) + 1)
    results = [enumeration.count_forcibly(n, cap=args.cap, workers=args.workers) for n in ns]
    if args.format == "csv":
        out.write(enumeration.SEQUENCE_CSV_HEADER + "\n")
        for r in results:
            out.write(r.csv_row() + "\n")
        if args.itemize:
            for r in results:
                out.write(f"# C_{r.n}[N]\n" + r.potentially_by_sum.to_csv("N"))
                out.write(f"# F_{r.n}[N]\n" + r.forcibly_by_sum.to_csv("N"))
                out.write(f"# L_{r.n}[j]\n" + r.forcibly_by_largest.to_csv("j"))
    elif args.format == "json":
        for r in results:
            out.write(json.dumps({"n": r.n, "D": r.D, "Dc": r.Dc, "Df": r.Df, "ratio": round(r.ratio, 6),
                                  "C": _table_json(r.potentially_by_sum),
                                  "F": _table_json(r.forcibly_by_sum),
                                  "L": _table_json(r.forcibly_by_largest), "M": r.extreme.M_n}) + "\n")
    else:
        for r in results:
            out.write(f"n={r.n} D={r.D} Dc={r.Dc} Df={r.Df} ratio={r.ratio:.6f} M={r.extreme.M_n}\n")
    return EXIT_OK


def cmd_count_part(args, out) -> int:
    Ns = range(args.N, (args.N_to or args.N) + 1, args.step)
    results = [enumeration.count_partitions(N, cap=args.cap, workers=args.workers) for N in Ns]
    if args.format == "csv":
        out.write(enumeration.PARTITION_CSV_HEADER + "\n")
        for r in results:
            out.write(r.csv_row() + "\n")
        if args.itemize:
            for r in results:
                out.write(f"# c_{r.N}[j]\n" + r.potentially_by_parts.to_csv("j"))
                out.write(f"# f_{r.N}[j]\n" + r.forcibly_by_parts.to_csv("j"))
                out.write(f"# l_{r.N}[j]\n" + r.forcibly_by_largest.to_csv("j"))
    elif args.format == "json":
        for r in results:
            out.write(json.dumps({"N": r.N, "g": r.g, "gc": r.gc, "gf": r.gf, "ratio": round(r.ratio, 6),
                                  "c": _table_json(r.potentially_by_parts),
                                  "f": _table_json(r.forcibly_by_parts),
                                  "l": _table_json(r.forcibly_by_largest), "m": r.extreme.m_n}) + "\n")
    else:
        for r in results:
            out.write(f"N={r.N} g={r.g} gc={r.gc} gf={r.gf} ratio={r.ratio:.6f} m={r.extreme.m_n}\n")
    return EXIT_OK


def cmd_extremes(args, out) -> int:
    rows = []
    if args.kind == "seq":
        for n in range(args.start, args.stop + 1):
            rows.append((n, enumeration.minimum_largest_forcible(n, cap=args.cap)))
        key = "n,M"
    else:
        for N in range(args.start + args.start % 2, args.stop + 1, 2):
            rows.append((N, enumeration.count_partitions(N, cap=args.cap).extreme.m_n))
        key = "N,m"
    if args.format == "json":
        out.write(json.dumps({str(k): v for k, v in rows}) + "\n")
    else:
        if args.format == "csv":
            out.write(key + "\n")
        for k, v in rows:
            out.write(f"{k},{'' if v is None else v}\n")
    return EXIT_OK


def cmd_witness(args, out) -> int:
    d = enumeration.proposition1_witness(args.N, args.n)
    if args.format == "json":
        out.write(json.dumps(_seq_json(d)) + "\n")
    else:
        out.write(f"{d}\n")
    return EXIT_OK


def cmd_sample(args, out) -> int:
    import numpy as np

    rng = np.random.default_rng(args.seed)
    for _ in range(args.count):
        d = sampling.sample_sequence(args.n, args.h, args.l, rng)
        out.write((json.dumps(_seq_json(d)) if args.format == "json" else str(d)) + "\n")
    return EXIT_OK


def cmd_scan(args, out) -> int:
    if args.full_grid:
        grid = [g for g in sampling.full_grid() if not args.ph or g[0] in args.ph]
    else:
        if not args.ph or not args.pl:
            raise UsageError("scan needs --ph and --pl (or --full-grid)")
        grid = [(ph, pl) for ph in args.ph for pl in args.pl if pl < ph]
    timeout = 60.0 if args.timeout_ms is None else args.timeout_ms / 1000.0
    try:
        cfg = sampling.ScanConfig(args.n, tuple(grid), args.samples, timeout, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = sampling.run_scan(cfg, workers=args.workers)
    if args.format == "json":
        out.write(report.to_jsonl())
    elif args.format == "csv":
        out.write(report.to_csv())
    else:
        for c in report.cells:
            prop = "n/a" if c.proportion is None else f"{c.proportion:.3f}"
            out.write(f"p_h={c.p_h:g} p_l={c.p_l:g} forcibly={c.forcibly}/{c.completed} "
                      f"proportion={prop} timeouts={c.timeouts}\n")
        for ph, iv in report.transition_intervals().items():
            out.write(f"transition p_h={ph:g}: {'undetermined' if iv is None else f'{iv[0]:g} to {iv[1]:g}'}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="forcibly", description="Forcibly connected degree sequences.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        if fmt:
            sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
        sp.add_argument("--strict", action="store_true", help="exit 1 on a negative verdict")

    sp = sub.add_parser("test", help="decide forcible connectivity")
    sp.add_argument("sequence", nargs="?")
    sp.add_argument("--stdin", action="store_true", help="one sequence per line")
    sp.add_argument("--timeout-ms", type=int)
    common(sp)
    sp.set_defaults(func=cmd_test)

    sp = sub.add_parser("decompose", help="show a witness or all decompositions")
    sp.add_argument("sequence")
    sp.add_argument("--all", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("kconnect", help="decide forcible k-connectivity")
    sp.add_argument("sequence", nargs="?")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--stdin", action="store_true")
    sp.add_argument("--timeout-ms", type=int)
    sp.add_argument("--max-length", type=int, default=kforce.DEFAULT_MAX_LENGTH)
    common(sp)
    sp.set_defaults(func=cmd_kconnect)

    sp = sub.add_parser("count-seq", help="count sequences of length n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--n-to", type=int)
    sp.add_argument("--itemize", action="store_true")
    sp.add_argument("--cap", type=int)
    sp.add_argument("--workers", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_count_seq)

    sp = sub.add_parser("count-part", help="count graphical partitions of even N")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--N-to", type=int)
    sp.add_argument("--step", type=int, default=10)
    sp.add_argument("--itemize", action="store_true")
    sp.add_argument("--cap", type=int)
    sp.add_argument("--workers", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_count_part)

    sp = sub.add_parser("extremes", help="minimum largest part M(n) or m(N)")
    sp.add_argument("--kind", choices=["seq", "part"], default="seq")
    sp.add_argument("--from", dest="start", type=int, required=True)
    sp.add_argument("--to", dest="stop", type=int, required=True)
    sp.add_argument("--cap", type=int)
    common(sp)
    sp.set_defaults(func=cmd_extremes)

    sp = sub.add_parser("witness-prop1", help="forcibly connected partition of N with n parts")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("sample", help="uniform graphical sequence with fixed extremes")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("scan", help="randomized performance scan")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--ph", type=float, nargs="+")
    sp.add_argument("--pl", type=float, nargs="+")
    sp.add_argument("--full-grid", action="store_true")
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--timeout-ms", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_scan)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"forcibly {args.command}: {exc}\n")
        return EXIT_USAGE
    except (ForciblyError, ValueError) as exc:
        sys.stderr.write(f"forcibly {args.command}: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
