"""Graphicality tests and the potential k-connectivity criterion.

All functions accept any iterable of non-negative integers; zeros are
dropped because isolated vertices never affect graphicality. The
``*_sorted`` and ``*_runs`` variants skip the sort and are meant for inner
loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from math import comb
from typing import Iterable, Sequence

from .errors import KTooLarge


@dataclass(frozen=True)
class ConjugatePartition:
    parts: tuple[int, ...]
    durfee: int


def _clean(d: Iterable[int]) -> list[int]:
    out = sorted((x for x in d if x), reverse=True)
    if out and out[-1] < 0:
        raise ValueError("negative degree")
    return out


def durfee_side(d: Sequence[int]) -> int:
    """Largest ``s`` with ``d[s-1] >= s`` for non-increasing ``d``."""
    s = 0
    for i, x in enumerate(d, 1):
        if x < i:
            break
        s = i
    return s


def conjugate(d: Iterable[int]) -> ConjugatePartition:
    d = _clean(d)
    if not d:
        return ConjugatePartition((), 0)
    parts = []
    j = len(d)
    for level in range(1, d[0] + 1):
        while d[j - 1] < level:
            j -= 1
        parts.append(j)
    return ConjugatePartition(tuple(parts), durfee_side(d))


def eg_sorted(d: Sequence[int]) -> bool:
    """Erdős–Gallai on a non-increasing list; linear time.

    Only ``k`` up to the Durfee side are checked: past it each inequality
    follows from the previous one.
    """
    n = len(d)
    while n and d[n - 1] == 0:
        n -= 1
    if n == 0:
        return True
    if d[0] >= n:
        return False
    suffix = list(accumulate(reversed(d[:n])))[::-1]
    suffix.append(0)
    total = suffix[0]
    if total & 1:
        return False
    lhs = 0
    j = n  # number of parts >= k
    for k in range(1, n + 1):
        dk = d[k - 1]
        if dk < k:
            break
        lhs += dk
        while d[j - 1] < k:
            j -= 1
        # parts k+1..j contribute k each, the rest contribute themselves
        if lhs > k * (k - 1) + k * (j - k) + suffix[j]:
            return False
    return True


def eg_runs(values: Sequence[int], counts: Sequence[int]) -> bool:
    """Erdős–Gallai on run-length data (strictly decreasing positive values).

    ``counts`` may hold zeros; those runs are skipped. The inequality is
    only evaluated at run ends (and at the Durfee side), which is where its
    slack can reach a minimum.
    """
    vals = []
    cnts = []
    for v, c in zip(values, counts):
        if c:
            vals.append(v)
            cnts.append(c)
    q = len(vals)
    if q == 0:
        return True
    n = 0
    total = 0
    for v, c in zip(vals, cnts):
        n += c
        total += v * c
    if total & 1 or vals[0] >= n:
        return False
    # suffix totals/counts over runs
    suf_sum = [0] * (q + 1)
    suf_cnt = [0] * (q + 1)
    for i in range(q - 1, -1, -1):
        suf_sum[i] = suf_sum[i + 1] + vals[i] * cnts[i]
        suf_cnt[i] = suf_cnt[i + 1] + cnts[i]
    lhs = 0
    end = 0  # index of last part in previous runs
    ge = q  # runs [0, ge) have value >= k
    for i in range(q):
        v = vals[i]
        start = end
        end += cnts[i]
        if v <= start:
            break
        k = end if end <= v else v  # clip at the Durfee side
        lhs_k = lhs + v * (k - start)
        while ge > 0 and vals[ge - 1] < k:
            ge -= 1
        # parts after k with value >= k: all parts in runs [0, ge) beyond index k
        big = n - suf_cnt[ge] - k
        if big < 0:
            big = 0
        if lhs_k > k * (k - 1) + k * big + suf_sum[ge]:
            return False
        lhs += v * cnts[i]
        if k < end:
            break
    return True


def is_graphical_eg(d: Iterable[int]) -> bool:
    return eg_sorted(_clean(d))


def is_graphical_eg_naive(d: Iterable[int]) -> bool:
    """Full-range Erdős–Gallai straight from the definition (quadratic)."""
    d = _clean(d)
    if sum(d) % 2:
        return False
    n = len(d)
    for k in range(1, n + 1):
        if sum(d[:k]) > k * (k - 1) + sum(min(x, k) for x in d[k:]):
            return False
    return True


def is_graphical_hh(d: Iterable[int]) -> bool:
    """Havel–Hakimi: repeatedly lay off the largest degree."""
    d = _clean(d)
    if sum(d) % 2:
        return False
    while d:
        top = d.pop(0)
        if top > len(d):
            return False
        for i in range(top):
            d[i] -= 1
            if d[i] < 0:
                return False
        d = sorted((x for x in d if x), reverse=True)
    return True


def nash_williams(d: Iterable[int]) -> bool:
    """Conjugate form: sum_{i<=j} (d'_i - d_i) >= j for j up to the Durfee side."""
    d = _clean(d)
    if sum(d) % 2:
        return False
    conj = conjugate(d)
    slack = 0
    for j in range(1, conj.durfee + 1):
        slack += conj.parts[j - 1] - d[j - 1]
        if slack < j:
            return False
    return True


def potentially_k_connected(d: Sequence[int], k: int) -> bool:
    """Wang–Kleitman: some realization of graphical ``d`` is k-connected."""
    d = sorted(d, reverse=True)
    n = len(d)
    if k < 1:
        raise ValueError("k must be positive")
    if k >= n:
        raise KTooLarge(f"k={k} needs more than {n} vertices")
    if d[-1] < k:
        return False
    return sum(d) >= 2 * n - 2 * comb(k, 2) - 2 + 2 * sum(d[:k - 1])
