"""Degree sequences, their run-length form, and decompositions.

A ``DegreeSequence`` is a tuple subclass, so it compares equal to the plain
tuple of its parts and can be used anywhere a tuple is expected.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import groupby, repeat
from typing import Iterable, Optional

from .errors import (EmptyInput, NegativePart, NotConstructible,
                     NotSubMultiset, ZeroPart)


class DegreeSequence(tuple):
    """Non-increasing tuple of degrees.

    Zero parts are rejected unless ``allow_zeros`` is given; they only show
    up as intermediate results of vertex deletion.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = (), allow_zeros: bool = False):
        parts = sorted((int(p) for p in parts), reverse=True)
        if not parts:
            raise EmptyInput("degree sequence must have at least one part")
        if parts[-1] < 0:
            raise NegativePart(f"negative part {parts[-1]}")
        if parts[-1] == 0 and not allow_zeros:
            raise ZeroPart("zero part in a zero-free sequence")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "DegreeSequence":
        # caller guarantees non-empty, sorted, non-negative
        return tuple.__new__(cls, parts)

    @classmethod
    def parse(cls, text: str, allow_zeros: bool = False) -> "DegreeSequence":
        """Parse ``"6,6,6,5,5,5,5,4,4"`` or the run-length form ``"6^3 5^4 4^2"``."""
        text = text.strip()
        if "^" in text:
            parts = []
            for token in text.replace(",", " ").split():
                m = re.fullmatch(r"(-?\d+)\^(\d+)", token)
                if m is None:
                    raise ValueError(f"bad run-length token {token!r}; expected VALUE^COUNT")
                parts.extend(repeat(int(m.group(1)), int(m.group(2))))
            return cls(parts, allow_zeros=allow_zeros)
        tokens = [t for t in re.split(r"[,\s]+", text) if t]
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise ValueError(f"bad sequence {text!r}; expected INT ((,|space) INT)*") from None
        return cls(values, allow_zeros=allow_zeros)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def total(self) -> int:
        return sum(self)

    @property
    def largest(self) -> int:
        return self[0]

    @property
    def smallest(self) -> int:
        return self[-1]

    def runs(self) -> "RunLengthForm":
        return to_run_length(self)

    def __repr__(self):
        return f"DegreeSequence({tuple(self)!r})"

    def __str__(self):
        return ",".join(map(str, self))


@dataclass(frozen=True)
class RunLengthForm:
    """``runs[i] = (value, multiplicity)`` with strictly decreasing values."""

    runs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        values = [v for v, _ in self.runs]
        if any(f <= 0 for _, f in self.runs):
            raise ValueError("multiplicities must be positive")
        if any(a <= b for a, b in zip(values, values[1:])):
            raise ValueError("run values must be strictly decreasing")

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.runs)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(f for _, f in self.runs)

    @property
    def n(self) -> int:
        return sum(f for _, f in self.runs)

    def expand(self, allow_zeros: bool = False) -> DegreeSequence:
        parts = [v for v, f in self.runs for _ in range(f)]
        return DegreeSequence(parts, allow_zeros=allow_zeros)

    def __str__(self):
        return " ".join(f"{v}^{f}" for v, f in self.runs)


def normalize(raw: Iterable[int], allow_zeros: bool = False) -> DegreeSequence:
    return DegreeSequence(raw, allow_zeros=allow_zeros)


def to_run_length(d: Iterable[int]) -> RunLengthForm:
    return RunLengthForm(tuple((v, sum(1 for _ in g)) for v, g in groupby(d)))


def multiset_subtract(d: Iterable[int], s: Iterable[int],
                      allow_zeros: bool = False) -> DegreeSequence:
    """Remove the parts of ``s`` from ``d`` (as multisets)."""
    remaining = Counter(d)
    remaining.subtract(Counter(s))
    if any(c < 0 for c in remaining.values()):
        raise NotSubMultiset(f"{tuple(s)} is not a sub-multiset of {tuple(d)}")
    parts = sorted(remaining.elements(), reverse=True)
    if not parts:
        raise NotConstructible("subtraction leaves an empty sequence")
    return DegreeSequence(parts, allow_zeros=allow_zeros)


def multiset_union(a: Iterable[int], b: Iterable[int], allow_zeros: bool = False) -> DegreeSequence:
    return DegreeSequence([*a, *b], allow_zeros=allow_zeros)


def _canonical_key(s):
    return (len(s), tuple(s))


@dataclass(frozen=True)
class Decomposition:
    """Unordered pair of graphical halves; ``first`` is the canonical half.

    Canonical means shorter first, ties broken by the lexicographically
    smaller non-increasing tuple.
    """

    first: DegreeSequence
    second: DegreeSequence

    def __post_init__(self):
        for half in (self.first, self.second):
            if len(half) < 2 or sum(half) % 2:
                raise ValueError(f"invalid decomposition half {tuple(half)}")
        if _canonical_key(self.first) > _canonical_key(self.second):
            raise ValueError("halves not in canonical order; use Decomposition.of")

    @classmethod
    def of(cls, a: Iterable[int], b: Iterable[int]) -> "Decomposition":
        a, b = DegreeSequence(a), DegreeSequence(b)
        if _canonical_key(a) > _canonical_key(b):
            a, b = b, a
        return cls(a, b)

    def union(self) -> DegreeSequence:
        return multiset_union(self.first, self.second)

    def sort_key(self):
        return _canonical_key(self.first) + _canonical_key(self.second)

    def __str__(self):
        return f"({self.first})|({self.second})"


class DecidedBy(Enum):
    QUICK_ACCEPT = "quick-accept"
    EQUAL_DEGREES = "equal-degrees"
    NATURAL_SPLIT = "natural-split"
    SUBSET_SEARCH = "subset-search"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class Verdict:
    forcibly_connected: bool
    witness: Optional[Decomposition]
    decided_by: DecidedBy

    def __post_init__(self):
        if self.forcibly_connected == (self.witness is not None):
            raise ValueError("witness must be present exactly when the verdict is negative")

    def __bool__(self):
        return self.forcibly_connected
