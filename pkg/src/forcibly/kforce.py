"""Forcible k-connectivity via vertex deletion on degree sequences.

Deleting a vertex of degree ``v`` whose neighbours have degrees ``S`` leaves
the sequence ``GHH(d, v, S)``: drop one ``v`` and lower each member of ``S``
by one. ``d`` fails to be forcibly k-connected exactly when some such
deletion leaves a graphical sequence that is not forcibly (k-1)-connected.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .criteria import eg_sorted, potentially_k_connected
from .errors import DepthBudgetExceeded, InvalidChoice, KTooLarge, SearchTimeout
from .forcible import _runs, _validate, bounded_compositions, decide_fast
from .seqcore import DegreeSequence

DEFAULT_MAX_LENGTH = 40


@dataclass(frozen=True)
class GhhChoice:
    removed: int
    reduced: tuple[int, ...]  # non-increasing values of the lowered parts


def ghh(d: Sequence[int], choice: GhhChoice) -> DegreeSequence:
    """Apply the generalized Havel–Hakimi step; the result may hold zeros."""
    if len(choice.reduced) != choice.removed:
        raise InvalidChoice(f"need {choice.removed} lowered parts, got {len(choice.reduced)}")
    pool = Counter(d)
    if pool[choice.removed] == 0:
        raise InvalidChoice(f"{choice.removed} does not occur in {tuple(d)}")
    pool[choice.removed] -= 1
    need = Counter(choice.reduced)
    if any(pool[v] < c for v, c in need.items()):
        raise InvalidChoice(f"{choice.reduced} is not available after removing {choice.removed}")
    pool.subtract(need)
    parts = list(pool.elements()) + [v - 1 for v in choice.reduced]
    if not parts:
        raise InvalidChoice("deletion leaves no vertices")
    return DegreeSequence(parts, allow_zeros=True)


def _choices(d: Sequence[int]) -> Iterator[tuple[int, list[int], list[int], tuple[int, ...]]]:
    # yields (removed value, run values, remaining counts, lowered counts)
    values, counts = _runs(d)
    for i, v in enumerate(values):
        rest = counts.copy()
        rest[i] -= 1
        for x in bounded_compositions(rest, v):
            yield v, values, rest, x


def ghh_choices(d: Sequence[int]) -> Iterator[GhhChoice]:
    """All deletion choices, one per distinct (removed, lowered-values) pair."""
    for v, values, _, x in _choices(d):
        reduced = tuple(val for val, c in zip(values, x) for _ in range(c))
        yield GhhChoice(v, reduced)


def _apply(values, rest, x) -> list[int]:
    out = []
    for val, c, xi in zip(values, rest, x):
        out.extend([val] * (c - xi))
        out.extend([val - 1] * xi)
    out.sort(reverse=True)
    return out


def _forcibly_k(d: tuple[int, ...], k: int, memo: dict, deadline: Optional[float] = None) -> bool:
    # d: zero-free graphical, non-increasing
    if k == 1:
        return decide_fast(d)
    n = len(d)
    if k >= n:
        return False
    key = (k, d)
    hit = memo.get(key)
    if hit is not None:
        return hit
    result = True
    if not potentially_k_connected(d, k) or not _forcibly_k(d, k - 1, memo, deadline):
        result = False
    else:
        for _, values, rest, x in _choices(d):
            if deadline is not None and time.monotonic() > deadline:
                raise SearchTimeout(f"no verdict for n={n}, k={k} before deadline")
            reduced = _apply(values, rest, x)
            if not eg_sorted(reduced):
                continue
            if reduced[-1] == 0 or not _forcibly_k(tuple(reduced), k - 1, memo, deadline):
                result = False
                break
    memo[key] = result
    return result


def _check_length(d, max_length):
    if max_length is not None and len(d) > max_length:
        raise DepthBudgetExceeded(f"length {len(d)} exceeds budget {max_length}")


def is_forcibly_biconnected(d: Sequence[int], max_length: Optional[int] = DEFAULT_MAX_LENGTH) -> bool:
    """True iff every realization of ``d`` is 2-connected."""
    d = _validate(d)
    _check_length(d, max_length)
    if len(d) <= 2:
        return False
    if not potentially_k_connected(d, 2) or not decide_fast(d):
        return False
    for _, values, rest, x in _choices(d):
        reduced = _apply(values, rest, x)
        if not eg_sorted(reduced):
            continue
        # an isolated vertex already disconnects the deleted graph
        if reduced[-1] == 0 or not decide_fast(reduced):
            return False
    return True


def is_forcibly_k_connected(d: Sequence[int], k: int,
                            max_length: Optional[int] = DEFAULT_MAX_LENGTH,
                            timeout: Optional[float] = None) -> bool:
    """True iff every realization of ``d`` is k-connected (``k >= 2``).

    Verdicts for intermediate sequences are memoized for the duration of
    the call. ``timeout`` (seconds) raises ``SearchTimeout`` on expiry.
    ``k == n`` is simply false (no graph is n-connected on n vertices);
    ``k > n`` raises ``KTooLarge``.
    """
    if k < 2:
        raise ValueError("k must be at least 2; use is_forcibly_connected for k=1")
    d = _validate(d)
    _check_length(d, max_length)
    if k > len(d):
        raise KTooLarge(f"k={k} exceeds the {len(d)} available vertices")
    deadline = None if timeout is None else time.monotonic() + timeout
    return _forcibly_k(tuple(d), k, {}, deadline)
