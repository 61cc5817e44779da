"""Uniform sampling of graphical sequences with fixed extremes, and the
randomized performance scan built on it.

A non-increasing sequence of length ``n`` with first part ``h`` and last
part ``l`` is determined by its ``n - 2`` middle parts, a multiset drawn
from ``[l, h]``. Stars and bars puts those multisets in bijection with
``(n - 2)``-subsets of ``range(n - 2 + h - l)``, so a uniform subset gives a
uniform sequence. Non-graphical draws are rejected.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, floor
from typing import Optional, Sequence, Union

import numpy as np

from .criteria import eg_sorted
from .errors import Infeasible, SearchTimeout
from .forcible import is_forcibly_connected
from .seqcore import DegreeSequence

EXHAUSTIVE_LIMIT = 10**6
MAX_REJECTIONS = 10_000

SeedLike = Union[int, np.random.Generator, None]


def candidate_count(n: int, h: int, l: int) -> int:
    """Number of non-increasing length-``n`` sequences from ``h`` down to ``l``."""
    if n == 1:
        return int(h == l)
    m = n - 2
    return comb(m + h - l, m)


def _check_args(n, h, l):
    if not 1 <= l <= h <= n - 1:
        raise ValueError(f"need 1 <= l <= h <= n-1, got n={n}, h={h}, l={l}")


@lru_cache(maxsize=256)
def graphical_candidates(n: int, h: int, l: int) -> tuple[tuple[int, ...], ...]:
    """All graphical candidates, for spaces small enough to list."""
    _check_args(n, h, l)
    out = []
    for middle in combinations_with_replacement(range(h, l - 1, -1), n - 2):
        d = (h, *middle, l)
        if eg_sorted(d):
            out.append(d)
    return tuple(out)


def _draw(rng: np.random.Generator, n: int, h: int, l: int) -> list[int]:
    m = n - 2
    spots = m + h - l
    picks = np.sort(rng.choice(spots, size=m, replace=False)) if m else []
    return [h] + [h - int(p) + i for i, p in enumerate(picks)] + [l]


def sample_sequence(n: int, h: int, l: int, seed: SeedLike = None,
                    max_rejections: int = MAX_REJECTIONS) -> DegreeSequence:
    """Uniform graphical sequence of length ``n`` with largest ``h``, smallest ``l``.

    ``seed`` may be an int or an existing ``numpy.random.Generator`` (which
    is advanced in place).
    """
    _check_args(n, h, l)
    rng = np.random.default_rng(seed)
    small = candidate_count(n, h, l) < EXHAUSTIVE_LIMIT
    if small and not graphical_candidates(n, h, l):
        raise Infeasible(f"no graphical sequence with n={n}, h={h}, l={l}")
    tries = 0
    while True:
        d = _draw(rng, n, h, l)
        if eg_sorted(d):
            return DegreeSequence._trusted(d)
        tries += 1
        if not small and tries >= max_rejections:
            raise Infeasible(f"{tries} rejections in a row for n={n}, h={h}, l={l}")


# --- scan harness -----------------------------------------------------------

def _round_half_up(x: float) -> int:
    return int(floor(x + 0.5))


def full_grid(p_h_values: Sequence[float] = (0.10, 0.20, 0.30, 0.40, 0.50, 0.55, 0.60, 0.65,
                                              0.70, 0.75, 0.80, 0.85, 0.90, 0.95)) -> list[tuple[float, float]]:
    """The (p_h, p_l) grid: fine steps of 0.001 up to 0.01, then 0.01 steps
    up to ``min(p_h - 0.01, 0.49)``."""
    grid = []
    for ph in p_h_values:
        top = min(round(ph - 0.01, 3), 0.49)
        fine = [round(0.001 * i, 3) for i in range(1, 11)]
        coarse = [round(0.01 * i, 2) for i in range(2, 50)]
        grid += [(ph, pl) for pl in fine + coarse if pl <= top + 1e-9]
    return grid


@dataclass(frozen=True)
class ScanConfig:
    n: int
    grid: tuple[tuple[float, float], ...]
    samples_per_cell: int = 100
    timeout_per_instance: float = 60.0  # seconds
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "grid", tuple((float(a), float(b)) for a, b in self.grid))
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if self.samples_per_cell < 1:
            raise ValueError("samples_per_cell must be positive")
        for ph, pl in self.grid:
            if not (0 < pl < ph <= 0.95):
                raise ValueError(f"need 0 < p_l < p_h <= 0.95, got ({ph}, {pl})")
            if pl > 0.49:
                raise ValueError(f"p_l={pl} above 0.49; such inputs are accepted instantly")

    def extremes(self, ph: float, pl: float) -> tuple[int, int]:
        h = min(_round_half_up(ph * self.n), self.n - 1)
        l = max(1, _round_half_up(pl * self.n))
        return h, l


@dataclass
class CellResult:
    p_h: float
    p_l: float
    n: int
    completed: int = 0
    forcibly: int = 0
    timeouts: int = 0
    infeasible: bool = False
    runtimes_ms: list[float] = field(default_factory=list)
    sequences_digest: str = ""

    @property
    def proportion(self) -> Optional[float]:
        return self.forcibly / self.completed if self.completed else None

    def quartiles(self) -> tuple[Optional[float], ...]:
        if not self.runtimes_ms:
            return (None, None, None)
        q = np.percentile(self.runtimes_ms, [25, 50, 75])
        return tuple(float(x) for x in q)

    def csv_row(self) -> str:
        prop = "" if self.proportion is None else f"{self.proportion:.6f}"
        qs = ["" if x is None else f"{x:.3f}" for x in self.quartiles()]
        return ",".join([f"{self.p_h:g}", f"{self.p_l:g}", str(self.n), str(self.completed),
                         str(self.forcibly), prop, *qs, str(self.timeouts)])

    def to_dict(self, timing: bool = True) -> dict:
        out = asdict(self)
        out["proportion"] = self.proportion
        del out["runtimes_ms"]
        if timing:
            out["q1_ms"], out["med_ms"], out["q3_ms"] = self.quartiles()
        return out


SCAN_CSV_HEADER = "p_h,p_l,n,completed,forcibly,proportion,q1_ms,med_ms,q3_ms,timeouts"


@dataclass
class ScanReport:
    config: ScanConfig
    cells: list[CellResult]
    eps: float = 0.05

    def transition_intervals(self) -> dict[float, Optional[tuple[float, float]]]:
        """Per p_h: last p_l still at ~0 before the first p_l at ~1."""
        out: dict = {}
        by_ph: dict = {}
        for c in self.cells:
            if c.proportion is not None:
                by_ph.setdefault(c.p_h, []).append((c.p_l, c.proportion))
        for ph, rows in by_ph.items():
            rows.sort()
            upper = next((pl for pl, p in rows if p >= 1 - self.eps), None)
            below = [pl for pl, p in rows if p <= self.eps and (upper is None or pl < upper)]
            out[ph] = (below[-1], upper) if below and upper is not None else None
        return out

    def to_csv(self) -> str:
        return "\n".join([SCAN_CSV_HEADER] + [c.csv_row() for c in self.cells]) + "\n"

    def to_jsonl(self, timing: bool = True) -> str:
        return "".join(json.dumps(c.to_dict(timing), sort_keys=True) + "\n" for c in self.cells)


def _cell_seed(seed: int, ph: float, pl: float) -> np.random.SeedSequence:
    return np.random.SeedSequence([seed, _round_half_up(ph * 1e6), _round_half_up(pl * 1e6)])


def run_cell(cfg: ScanConfig, ph: float, pl: float) -> CellResult:
    h, l = cfg.extremes(ph, pl)
    cell = CellResult(ph, pl, cfg.n)
    rng = np.random.default_rng(_cell_seed(cfg.seed, ph, pl))
    digest = hashlib.sha256()
    for _ in range(cfg.samples_per_cell):
        try:
            d = sample_sequence(cfg.n, h, l, rng)
        except Infeasible:
            cell.infeasible = True
            break
        digest.update(str(d).encode() + b";")
        start = time.perf_counter()
        try:
            verdict = is_forcibly_connected(d, timeout=cfg.timeout_per_instance)
        except SearchTimeout:
            cell.timeouts += 1
            continue
        cell.runtimes_ms.append((time.perf_counter() - start) * 1000)
        cell.completed += 1
        cell.forcibly += verdict.forcibly_connected
    cell.sequences_digest = digest.hexdigest()[:16]
    return cell


def run_scan(cfg: ScanConfig, workers: int = 1) -> ScanReport:
    """Run every grid cell; cells are independent and merged in grid order."""
    if workers <= 1:
        cells = [run_cell(cfg, ph, pl) for ph, pl in cfg.grid]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(run_cell, [cfg] * len(cfg.grid),
                                  [g[0] for g in cfg.grid], [g[1] for g in cfg.grid]))
    return ScanReport(cfg, cells)
