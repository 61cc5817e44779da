"""Exhaustive generation of graphical sequences and the counting passes.

Two generators:

* zero-free graphical degree sequences of a fixed length ``n``;
* graphical partitions of an even integer ``N``.

Both are backtracking searches over non-increasing sequences. At every
depth the admissible values for the next part form an interval derived
from the Erdős–Gallai inequality at that depth (later parts bounded above
by the current one), so the search never iterates over values that cannot
lead to a graphical sequence at that prefix. Leaves get the exact test.

The counting passes apply the potential-connectivity criterion and the
forcibly-connected test to every generated sequence. Work can be split by
the first part and the partial tables merged by addition.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .criteria import eg_sorted, is_graphical_eg
from .errors import CapExceeded, OddSum, RangeViolation
from .forcible import decide_fast
from .seqcore import DegreeSequence

SEQ_CAP_ENV = "FORCIBLY_SEQ_CAP"
PART_CAP_ENV = "FORCIBLY_PART_CAP"
DEFAULT_SEQ_CAP = 22
DEFAULT_PART_CAP = 120


def _cap(value: Optional[int], env: str, default: int) -> int:
    if value is not None:
        return value
    raw = os.environ.get(env)
    return int(raw) if raw else default


class CountTable(Counter):
    """Exact counters keyed by an integer (sum, largest part, or part count)."""

    def rows(self) -> list[tuple[int, int]]:
        return sorted((k, v) for k, v in self.items() if v)

    def to_csv(self, key_name: str = "key") -> str:
        lines = [f"{key_name},count"]
        lines += [f"{k},{v}" for k, v in self.rows()]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ExtremeRecord:
    """Minimum largest part over forcibly connected sequences (by length)
    or partitions (by sum); ``None`` when there are none."""

    M_n: Optional[int] = None
    m_n: Optional[int] = None


# --- generators -------------------------------------------------------------

def _zero_free(n: int, first: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    if n < 2:
        return
    parts = [0] * n
    last_pos = n - 1

    def rec(k, s, last):
        # k parts fixed with sum s; choose parts[k] in [lo, hi], descending
        kk = k + 1
        if kk == n:
            v = last if (last - s) % 2 == 0 else last - 1
            while v >= 1:
                parts[last_pos] = v
                if eg_sorted(parts):
                    yield tuple(parts)
                v -= 2
            return
        c = n - kk - 1
        a = s - kk * (kk - 1)
        if c > 0:
            lo = -(-a // c)
        else:
            lo = 1 if a <= 0 else last + 1
        if lo < 1:
            lo = 1
        hi = kk * (n - 1) - s
        if hi > last:
            hi = last
        for v in range(hi, lo - 1, -1):
            parts[k] = v
            yield from rec(kk, s + v, v)

    tops = [first] if first is not None else range(n - 1, 0, -1)
    for top in tops:
        if not 1 <= top <= n - 1:
            continue
        parts[0] = top
        if n == 2:
            if top == 1:
                yield (1, 1)
            continue
        yield from rec(1, top, top)


def gen_zero_free_sequences(n: int, cap: Optional[int] = None,
                            first: Optional[int] = None) -> Iterator[DegreeSequence]:
    """Zero-free graphical sequences of length ``n`` in reverse-lex order.

    ``first`` restricts the largest part, which is how work is split.
    """
    limit = _cap(cap, SEQ_CAP_ENV, DEFAULT_SEQ_CAP)
    if n < 1:
        raise ValueError("n must be positive")
    if n > limit:
        raise CapExceeded(f"n={n} exceeds cap {limit}")
    trusted = DegreeSequence._trusted
    for parts in _zero_free(n, first):
        yield trusted(parts)


def _partitions(N: int, first: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    parts: list[int] = []

    def rec(s, last):
        r = N - s
        if r == 0:
            if eg_sorted(parts):
                yield tuple(parts)
            return
        kk = len(parts) + 1
        hi = (kk * (kk - 1) + r - s) // 2
        if hi > last:
            hi = last
        if hi > r:
            hi = r
        for v in range(hi, 0, -1):
            parts.append(v)
            yield from rec(s + v, v)
            parts.pop()

    tops = [first] if first is not None else range(N // 2, 0, -1)
    for top in tops:
        if not 1 <= top <= N // 2:
            continue
        parts.append(top)
        yield from rec(top, top)
        parts.pop()


def _check_even(N: int, cap: Optional[int]) -> None:
    limit = _cap(cap, PART_CAP_ENV, DEFAULT_PART_CAP)
    if N < 2:
        raise ValueError("N must be at least 2")
    if N % 2:
        raise OddSum(f"N={N} is odd; graphical partitions have even sums")
    if N > limit:
        raise CapExceeded(f"N={N} exceeds cap {limit}")


def gen_graphical_partitions(N: int, cap: Optional[int] = None,
                             first: Optional[int] = None) -> Iterator[DegreeSequence]:
    """Graphical partitions of even ``N`` in reverse-lex order."""
    _check_even(N, cap)
    trusted = DegreeSequence._trusted
    for parts in _partitions(N, first):
        yield trusted(parts)


# --- counting ---------------------------------------------------------------

@dataclass
class SequenceCounts:
    """Counts over zero-free graphical sequences of one length ``n``."""

    n: int
    D: int = 0
    Dc: int = 0
    Df: int = 0
    potentially_by_sum: CountTable = field(default_factory=CountTable)  # C_n[N]
    forcibly_by_sum: CountTable = field(default_factory=CountTable)  # F_n[N]
    forcibly_by_largest: CountTable = field(default_factory=CountTable)  # L_n[j]
    extreme: ExtremeRecord = field(default_factory=ExtremeRecord)

    @property
    def ratio(self) -> float:
        return self.Df / self.D if self.D else 0.0

    def merge(self, other: "SequenceCounts") -> "SequenceCounts":
        return SequenceCounts(
            self.n, self.D + other.D, self.Dc + other.Dc, self.Df + other.Df,
            CountTable(self.potentially_by_sum + other.potentially_by_sum),
            CountTable(self.forcibly_by_sum + other.forcibly_by_sum),
            CountTable(self.forcibly_by_largest + other.forcibly_by_largest),
            ExtremeRecord(M_n=_min_opt(self.extreme.M_n, other.extreme.M_n)))

    def csv_row(self) -> str:
        return f"{self.n},{self.D},{self.Dc},{self.Df},{self.ratio:.6f}"


@dataclass
class PartitionCounts:
    """Counts over graphical partitions of one even integer ``N``."""

    N: int
    g: int = 0
    gc: int = 0
    gf: int = 0
    potentially_by_parts: CountTable = field(default_factory=CountTable)  # c_N[j]
    forcibly_by_parts: CountTable = field(default_factory=CountTable)  # f_N[j]
    forcibly_by_largest: CountTable = field(default_factory=CountTable)  # l_N[j]
    extreme: ExtremeRecord = field(default_factory=ExtremeRecord)

    @property
    def ratio(self) -> float:
        return self.gf / self.g if self.g else 0.0

    def merge(self, other: "PartitionCounts") -> "PartitionCounts":
        return PartitionCounts(
            self.N, self.g + other.g, self.gc + other.gc, self.gf + other.gf,
            CountTable(self.potentially_by_parts + other.potentially_by_parts),
            CountTable(self.forcibly_by_parts + other.forcibly_by_parts),
            CountTable(self.forcibly_by_largest + other.forcibly_by_largest),
            ExtremeRecord(m_n=_min_opt(self.extreme.m_n, other.extreme.m_n)))

    def csv_row(self) -> str:
        return f"{self.N},{self.g},{self.gc},{self.gf},{self.ratio:.6f}"


SEQUENCE_CSV_HEADER = "n,D,Dc,Df,ratio"
PARTITION_CSV_HEADER = "N,g,gc,gf,ratio"


def _min_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _count_sequences_slice(n: int, first: Optional[int]) -> SequenceCounts:
    D = Dc = Df = 0
    by_sum_c: dict = {}
    by_sum_f: dict = {}
    by_top: dict = {}
    threshold = 2 * n - 2
    quick_top = n - 2
    quick_low = n // 2
    for d in _zero_free(n, first):
        D += 1
        N = sum(d)
        if N < threshold:
            continue  # not potentially connected, so not forcibly either
        Dc += 1
        by_sum_c[N] = by_sum_c.get(N, 0) + 1
        top = d[0]
        if top >= quick_top or d[-1] >= quick_low or decide_fast(d):
            Df += 1
            by_sum_f[N] = by_sum_f.get(N, 0) + 1
            by_top[top] = by_top.get(top, 0) + 1
    return SequenceCounts(n, D, Dc, Df, CountTable(by_sum_c), CountTable(by_sum_f),
                          CountTable(by_top), ExtremeRecord(M_n=min(by_top) if by_top else None))


def count_forcibly(n: int, cap: Optional[int] = None, workers: int = 1) -> SequenceCounts:
    """One pass over all zero-free graphical sequences of length ``n``.

    With ``workers > 1`` the pass is split by largest part across processes;
    the merge is order-independent.
    """
    limit = _cap(cap, SEQ_CAP_ENV, DEFAULT_SEQ_CAP)
    if n > limit:
        raise CapExceeded(f"n={n} exceeds cap {limit}")
    if n < 2:
        return SequenceCounts(n)
    if workers <= 1:
        return _count_sequences_slice(n, None)
    tops = list(range(n - 1, 0, -1))
    result = SequenceCounts(n)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_count_sequences_slice, [n] * len(tops), tops):
            result = result.merge(part)
    return result


def _count_partitions_slice(N: int, first: Optional[int]) -> PartitionCounts:
    g = gc = gf = 0
    by_parts_c: dict = {}
    by_parts_f: dict = {}
    by_top: dict = {}
    for d in _partitions(N, first):
        g += 1
        n = len(d)
        if N < 2 * n - 2:
            continue
        gc += 1
        by_parts_c[n] = by_parts_c.get(n, 0) + 1
        if decide_fast(d):
            gf += 1
            by_parts_f[n] = by_parts_f.get(n, 0) + 1
            by_top[d[0]] = by_top.get(d[0], 0) + 1
    return PartitionCounts(N, g, gc, gf, CountTable(by_parts_c), CountTable(by_parts_f),
                           CountTable(by_top), ExtremeRecord(m_n=min(by_top) if by_top else None))


def count_partitions(N: int, cap: Optional[int] = None, workers: int = 1) -> PartitionCounts:
    """One pass over all graphical partitions of even ``N``."""
    _check_even(N, cap)
    if workers <= 1:
        return _count_partitions_slice(N, None)
    tops = list(range(N // 2, 0, -1))
    result = PartitionCounts(N)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_count_partitions_slice, [N] * len(tops), tops):
            result = result.merge(part)
    return result


def proposition1_witness(N: int, n: int) -> DegreeSequence:
    """A forcibly connected graphical partition of ``N`` with ``n`` parts.

    Largest part ``n - 1``; the other ``n - 1`` parts as equal as possible.
    """
    if n < 2 or not 2 * n - 2 <= N <= n * (n - 1):
        raise RangeViolation(f"N={N} outside [{2 * n - 2}, {n * (n - 1)}] for n={n}")
    if N % 2:
        raise OddSum(f"N={N} is odd")
    b = (N - n + 1) // (n - 1)
    a = N - (n - 1) * (b + 1)
    return DegreeSequence([n - 1] + [b + 1] * a + [b] * (n - 1 - a))


def minimum_largest_forcible(n: int, cap: Optional[int] = None) -> Optional[int]:
    """M(n) by scanning largest parts upward and stopping at the first hit."""
    limit = _cap(cap, SEQ_CAP_ENV, DEFAULT_SEQ_CAP)
    if n > limit:
        raise CapExceeded(f"n={n} exceeds cap {limit}")
    for top in range(1, n):
        for d in _zero_free(n, top):
            if decide_fast(d):
                return top
    return None


def support_of(table: Iterable[tuple[int, int]]) -> set[int]:
    return {k for k, v in table if v}


def check_emitted(seqs: Iterable[tuple[int, ...]]) -> bool:
    """Strict reverse-lex order and graphicality of a generated stream."""
    prev = None
    for d in seqs:
        if prev is not None and not tuple(d) < prev:
            return False
        if not is_graphical_eg(d):
            return False
        prev = tuple(d)
    return True


__all__ = [
    "CountTable", "ExtremeRecord", "SequenceCounts", "PartitionCounts",
    "gen_zero_free_sequences", "gen_graphical_partitions", "count_forcibly",
    "count_partitions", "proposition1_witness", "minimum_largest_forcible",
    "SEQUENCE_CSV_HEADER", "PARTITION_CSV_HEADER",
]
