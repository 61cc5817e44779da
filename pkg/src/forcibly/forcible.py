"""Forcibly-connectedness test with witnesses, and decomposition listing.

A zero-free graphical sequence is forcibly connected exactly when it cannot
be split into two sub-multisets that are both graphical. The decision
procedure tries cheap sufficient conditions first, then consecutive
("natural") splits, then a pruned search over sub-multisets of the small
parts, working on the run-length form so equal parts are never permuted.
"""

from __future__ import annotations

import time
from itertools import accumulate, groupby
from typing import Iterator, NamedTuple, Optional, Sequence

from .criteria import eg_runs, eg_sorted
from .errors import GraphicalityViolation, SearchTimeout, ZeroPart
from .seqcore import (DecidedBy, Decomposition, DegreeSequence, RunLengthForm,
                      Verdict, normalize)

_DEADLINE_STRIDE = 256


class CandidateSolution(NamedTuple):
    """``x[i]`` copies of the i-th tail value, ``sum(x) == length``."""

    x: tuple[int, ...]
    length: int


def _runs(d: Sequence[int]) -> tuple[list[int], list[int]]:
    values, counts = [], []
    for v, g in groupby(d):
        values.append(v)
        counts.append(sum(1 for _ in g))
    return values, counts


def bounded_compositions(bounds: Sequence[int], total: int,
                         odd: Optional[Sequence[bool]] = None) -> Iterator[tuple[int, ...]]:
    """Solutions of ``sum(x) == total`` with ``0 <= x[i] <= bounds[i]``.

    Emitted in increasing lexicographic order. When ``odd`` is given, only
    solutions whose entries at odd-flagged positions sum to an even number
    are kept.
    """
    k = len(bounds)
    if k == 0:
        if total == 0:
            yield ()
        return
    cap = list(accumulate(reversed(bounds)))[::-1] + [0]
    if cap[0] < total:
        return
    x = [0] * k
    last = k - 1

    def rec(i, remaining, parity):
        if i == last:
            if remaining > bounds[i]:
                return
            if odd is not None and (parity + (remaining if odd[i] else 0)) & 1:
                return
            x[i] = remaining
            yield tuple(x)
            return
        lo = remaining - cap[i + 1]
        if lo < 0:
            lo = 0
        hi = bounds[i] if bounds[i] < remaining else remaining
        flag = odd is not None and odd[i]
        for xi in range(lo, hi + 1):
            x[i] = xi
            yield from rec(i + 1, remaining - xi, parity + xi if flag else parity)

    yield from rec(0, total, 0)


def enumerate_candidates(tail: RunLengthForm, l: int) -> Iterator[CandidateSolution]:
    """Ways to pick ``l`` parts from ``tail`` with an even number of odd parts."""
    odd = [v & 1 == 1 for v in tail.values]
    for x in bounded_compositions(tail.counts, l, odd):
        yield CandidateSolution(x, l)


def natural_split_bound(d: Sequence[int]) -> int:
    """Largest ``s`` with ``s < n - d_{s+1}`` (1-based ``d``); 0 if none."""
    n = len(d)
    su = 0
    for s in range(1, n):
        if s < n - d[s]:
            su = s
    return su


def _regular_split(n: int, value: int) -> int:
    """Length of the first half splitting ``value^n`` into two regular graphs."""
    if n % 2:
        return (n - 1) // 2
    if n % 4 == 0 or value % 2 == 0:
        return n // 2
    return n // 2 - 1


def _decide(d: Sequence[int], deadline: Optional[float] = None):
    """Core search on a zero-free graphical non-increasing tuple.

    Returns ``(decided_by, split)`` where ``split`` is ``None`` for a positive
    verdict, otherwise ``(values, first_counts, second_counts)`` over the
    runs of ``d``.
    """
    n = len(d)
    d1 = d[0]
    dn = d[-1]
    if d1 >= n - 2 or dn >= n // 2:
        return DecidedBy.QUICK_ACCEPT, None
    if d1 == dn:
        a = _regular_split(n, d1)
        return DecidedBy.EQUAL_DEGREES, ([d1], [a], [n - a])

    values, counts = _runs(d)
    q = len(values)

    # natural splits: s in [d1+1, s_u], even prefix sums only
    su = natural_split_bound(d)
    if su >= d1 + 1:
        prefix = list(accumulate(d))
        for s in range(d1 + 1, su + 1):
            if prefix[s - 1] & 1:
                continue
            if eg_sorted(d[:s]) and eg_sorted(d[s:]):
                first = []
                left = s
                for c in counts:
                    take = c if c < left else left
                    first.append(take)
                    left -= take
                return DecidedBy.NATURAL_SPLIT, (values, first, [c - f for c, f in zip(counts, first)])

    odd = [v & 1 == 1 for v in values]
    ticks = 0
    top = min(n // 2, n - d1 - 1)
    for l in range(dn + 1, top + 1):
        if d[n - l] >= l:
            continue
        # m: first 1-based index with d_m < l
        lo, hi = 0, n
        while lo < hi:
            mid = (lo + hi) // 2
            if d[mid] < l:
                hi = mid
            else:
                lo = mid + 1
        m = lo + 1
        if l > n - m:
            continue
        # tail runs: values < l
        t0 = 0
        while values[t0] >= l:
            t0 += 1
        tail_counts = counts[t0:]
        tail_odd = odd[t0:]
        head_values = values[:t0]
        head_counts = counts[:t0]
        for x in bounded_compositions(tail_counts, l, tail_odd):
            if deadline is not None:
                ticks += 1
                if ticks % _DEADLINE_STRIDE == 0 and time.monotonic() > deadline:
                    raise SearchTimeout(f"no verdict for n={n} before deadline")
            tail_values = values[t0:]
            if not eg_runs(tail_values, x):
                continue
            rest = [c - xi for c, xi in zip(tail_counts, x)]
            if eg_runs(head_values + tail_values, head_counts + rest):
                first = [0] * t0 + list(x)
                return DecidedBy.SUBSET_SEARCH, (values, first, head_counts + rest)
    if deadline is not None and time.monotonic() > deadline:
        raise SearchTimeout(f"no verdict for n={n} before deadline")
    return DecidedBy.EXHAUSTED, None


def decide_fast(d: Sequence[int]) -> bool:
    """Boolean verdict without validation; for enumeration inner loops."""
    n = len(d)
    if d[0] >= n - 2 or d[-1] >= n // 2:
        return True
    return _decide(d)[1] is None


def _expand(values, counts):
    return [v for v, c in zip(values, counts) for _ in range(c)]


def _validate(d) -> DegreeSequence:
    if not isinstance(d, DegreeSequence):
        d = normalize(d)
    if d[-1] == 0:
        raise ZeroPart("input must be zero-free")
    if not eg_sorted(d):
        raise GraphicalityViolation(f"{tuple(d)} is not graphical")
    return d


def is_forcibly_connected(d: Sequence[int], timeout: Optional[float] = None) -> Verdict:
    """Decide whether every realization of ``d`` is connected.

    ``timeout`` is in seconds; on expiry ``SearchTimeout`` is raised. A
    negative verdict carries the first decomposition found in search order.
    """
    d = _validate(d)
    deadline = None if timeout is None else time.monotonic() + timeout
    how, split = _decide(d, deadline)
    if split is None:
        return Verdict(True, None, how)
    values, first, second = split
    witness = Decomposition.of(_expand(values, first), _expand(values, second))
    return Verdict(False, witness, how)


def enumerate_decompositions(d: Sequence[int]) -> Iterator[Decomposition]:
    """Every unordered graphical split of ``d``, each once, in canonical order.

    This is a single search over all sub-multisets rather than the phased
    decision procedure, so natural and non-natural splits are not reported
    twice.
    """
    d = _validate(d)
    n = len(d)
    values, counts = _runs(d)
    odd = [v & 1 == 1 for v in values]
    found = []
    for l in range(2, n // 2 + 1):
        for x in bounded_compositions(counts, l, odd):
            if not eg_runs(values, x):
                continue
            rest = [c - xi for c, xi in zip(counts, x)]
            if not eg_runs(values, rest):
                continue
            a = _expand(values, x)
            b = _expand(values, rest)
            if len(a) == len(b) and a > b:
                continue  # the mirrored pick is reported instead
            found.append(Decomposition(DegreeSequence._trusted(a), DegreeSequence._trusted(b)))
    found.sort(key=Decomposition.sort_key)
    yield from found
