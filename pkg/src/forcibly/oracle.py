"""Brute-force ground truth on small graphs.

Realizations are built by backtracking: vertices are processed in order of
decreasing degree and each one picks its remaining neighbours among later
vertices. After every pick the residual degrees of the unprocessed vertices
must still be graphical (checked with a direct Erdős–Gallai evaluation kept
local to this module so the oracle shares no code with the code it checks).

With ``up_to_symmetry=True`` later vertices that are still interchangeable
(same degree, same neighbours among processed vertices) are treated as one
class and only the first members of a class are picked. That still yields
every realization up to isomorphism, which is all a property check needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import TooLarge

MAX_VERTICES = 16


@dataclass(frozen=True)
class SmallGraph:
    """Simple graph on ``n`` vertices; ``rows[v]`` is v's neighbour bitmask."""

    n: int
    rows: tuple[int, ...]

    def degrees(self) -> list[int]:
        return [bin(r).count("1") for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.rows[u] >> v & 1]

    def is_connected(self, removed: int = 0) -> bool:
        alive = ((1 << self.n) - 1) & ~removed
        if not alive:
            return True
        start = alive & -alive
        seen = start
        frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            v = low.bit_length() - 1
            new = self.rows[v] & alive & ~seen
            seen |= new
            frontier |= new
        return seen == alive

    def is_k_connected(self, k: int) -> bool:
        if self.n <= k:
            return False
        for size in range(k):
            for cut in combinations(range(self.n), size):
                mask = 0
                for v in cut:
                    mask |= 1 << v
                if not self.is_connected(mask):
                    return False
        return True


def _graphical(res: Sequence[int]) -> bool:
    d = sorted((x for x in res if x), reverse=True)
    if sum(d) % 2:
        return False
    for k in range(1, len(d) + 1):
        if sum(d[:k]) > k * (k - 1) + sum(min(x, k) for x in d[k:]):
            return False
    return True


def _class_picks(classes: list[list[int]], need: int) -> Iterator[list[int]]:
    # choose c_j leading members from class j with sum(c_j) == need
    def rec(j, left):
        if left == 0:
            yield []
            return
        if j == len(classes):
            return
        members = classes[j]
        for c in range(min(left, len(members)), -1, -1):
            for rest in rec(j + 1, left - c):
                yield members[:c] + rest

    yield from rec(0, need)


def realizations(d: Sequence[int], up_to_symmetry: bool = False) -> Iterator[SmallGraph]:
    """Labeled realizations of ``d`` (vertex ``i`` gets the i-th largest degree)."""
    deg = sorted(d, reverse=True)
    n = len(deg)
    if n > MAX_VERTICES:
        raise TooLarge(f"{n} vertices exceeds the oracle limit of {MAX_VERTICES}")
    if n == 0 or not _graphical(deg):
        return
    rows = [0] * n
    res = list(deg)

    def rec(v):
        while v < n and res[v] == 0:
            v += 1
        if v == n:
            yield SmallGraph(n, tuple(rows))
            return
        later = [w for w in range(v + 1, n) if res[w] > 0]
        if up_to_symmetry:
            done = (1 << v) - 1
            groups: dict = {}
            for w in later:
                groups.setdefault((deg[w], rows[w] & done), []).append(w)
            picks = _class_picks(list(groups.values()), res[v])
        else:
            picks = combinations(later, res[v])
        for chosen in picks:
            for w in chosen:
                res[w] -= 1
            if _graphical(res[v + 1:]):
                need = res[v]
                res[v] = 0
                for w in chosen:
                    rows[v] |= 1 << w
                    rows[w] |= 1 << v
                yield from rec(v + 1)
                for w in chosen:
                    rows[v] &= ~(1 << w)
                    rows[w] &= ~(1 << v)
                res[v] = need
            for w in chosen:
                res[w] += 1

    yield from rec(0)


def all_realizations_k_connected(d: Sequence[int], k: int = 1) -> bool:
    """True iff every realization of graphical ``d`` is k-connected."""
    n = len(d)
    if k < 1 or k > 3:
        raise ValueError("k must be 1, 2 or 3")
    if n > MAX_VERTICES or (k > 1 and n > 12):
        raise TooLarge(f"n={n} too large for k={k}")
    found = False
    for g in realizations(d, up_to_symmetry=True):
        found = True
        if not g.is_k_connected(k):
            return False
    return found


def has_disconnected_realization(d: Sequence[int]) -> bool:
    return not all_realizations_k_connected(d, 1)
