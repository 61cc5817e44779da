"""Acceptance criteria, one test each. Reference values are the published
tables; tolerance is exact equality except for the stochastic checks."""

import random
from collections import Counter

import numpy as np
import pytest
from scipy.stats import chisquare

from acceptance_log import criterion
from brute import graphical, partitions, zero_free_graphical
from forcibly.criteria import is_graphical_eg, is_graphical_hh, nash_williams
from forcibly.enumeration import (count_forcibly, count_partitions, minimum_largest_forcible,
                                  proposition1_witness, support_of)
from forcibly.forcible import is_forcibly_connected
from forcibly.kforce import is_forcibly_biconnected, is_forcibly_k_connected
from forcibly.oracle import all_realizations_k_connected
from forcibly.sampling import ScanConfig, run_scan, sample_sequence

TABLE_D = {  # n: (D(n), D_f(n), ratio as printed)
    4: (7, 6, "0.857143"), 5: (20, 18, "0.900000"), 6: (71, 63, "0.887324"),
    7: (240, 216, "0.900000"), 8: (871, 783, "0.898967"), 9: (3148, 2843, "0.903113"),
    10: (11655, 10535, "0.903904"), 11: (43332, 39232, "0.905382"), 12: (162769, 147457, "0.905928"),
}
C7 = [7, 11, 15, 22, 26, 29, 29, 26, 23, 18, 13, 8, 5, 2, 1, 1]
F7 = [3, 5, 10, 19, 25, 28, 29, 26, 23, 18, 13, 8, 5, 2, 1, 1]
L15 = {14: 3166852, 13: 2624083, 12: 1398781, 11: 600406, 10: 201128, 9: 52903, 8: 9718, 7: 1031, 6: 21}
M = {3: 2, 4: 2, 5: 2, 6: 3, 7: 3, 8: 3, 9: 4, 10: 4, 11: 5, 12: 5, 13: 5, 14: 6, 15: 6, 16: 6}
TABLE_G = {10: (17, 8), 20: (244, 81), 30: (2136, 586), 40: (14048, 3308), 50: (76104, 15748),
           60: (357635, 66843)}
C20 = {5: 1, 6: 9, 7: 26, 8: 38, 9: 37, 10: 36, 11: 30}
F20 = {5: 1, 6: 9, 7: 25, 8: 22, 9: 10, 10: 9, 11: 5}
L20 = {3: 1, 4: 14, 5: 26, 6: 20, 7: 12, 8: 5, 9: 2, 10: 1}
m_TABLE = {10: 2, 20: 3, 30: 4, 40: 5, 50: 5, 60: 6}


@pytest.fixture(scope="module")
def seq_counts():
    return {n: count_forcibly(n) for n in range(3, 13)}


def test_c01_table4(seq_counts):
    with criterion(1, "D(n), D_f(n), ratio exact for n=4..12") as notes:
        for n, (D, Df, ratio) in TABLE_D.items():
            r = seq_counts[n]
            assert (r.D, r.Df) == (D, Df), n
            assert f"{r.ratio:.6f}" == ratio, n
            assert r.Df <= r.Dc <= r.D
        notes.append("n=12: 162769/147457")


def test_c02_table5(seq_counts):
    with criterion(2, "C_7[N] and F_7[N] rows exact") as notes:
        r = seq_counts[7]
        Ns = list(range(12, 43, 2))
        assert [r.potentially_by_sum[N] for N in Ns] == C7
        assert [r.forcibly_by_sum[N] for N in Ns] == F7
        assert support_of(r.potentially_by_sum.rows()) == set(Ns)
        notes.append("16 columns")


def _has_split(d):
    # independent subset search, used only for the reduced n=10 check
    from itertools import combinations
    n = len(d)
    for r in range(1, n // 2 + 1):
        for idx in combinations(range(n), r):
            a = [d[i] for i in idx]
            if sum(a) % 2:
                continue
            b = [d[i] for i in range(n) if i not in idx]
            if graphical(a) and graphical(b):
                return True
    return False


@pytest.mark.slow
def test_c03_table6_full():
    with criterion(3, "L_15[j] exact for j=6..14, M(15)=6") as notes:
        r = count_forcibly(15)
        assert dict(r.forcibly_by_largest.rows()) == L15
        assert r.extreme.M_n == 6
        assert (r.D, r.Df) == (8875768, 8054923)
        notes.append(f"{r.D} sequences")


def test_c03_reduced_n10(seq_counts):
    with criterion("3r", "L_10[j] matches independent subset search") as notes:
        ref = Counter()
        for d in zero_free_graphical(10):
            if sum(d) >= 18 and not _has_split(d):
                ref[d[0]] += 1
        assert dict(seq_counts[10].forcibly_by_largest.rows()) == dict(ref)
        notes.append(f"{sum(ref.values())} forcibly connected")


def test_c04_table7(seq_counts):
    with criterion(4, "M(n) exact for n=3..16") as notes:
        got = {n: minimum_largest_forcible(n) for n in M}
        assert got == M
        for n in range(3, 13):
            assert seq_counts[n].extreme.M_n == M[n]
        notes.append("cross-checked against counting passes for n<=12")


@pytest.fixture(scope="module")
def part_counts():
    return {N: count_partitions(N) for N in TABLE_G}


def test_c05_table8(part_counts):
    with criterion(5, "g(N), g_f(N) exact for N=10..60") as notes:
        for N, (g, gf) in TABLE_G.items():
            r = part_counts[N]
            assert (r.g, r.gf) == (g, gf), N
            assert r.gf <= r.gc <= r.g
        notes.append("N=60: 357635/66843")


def test_c06_tables9_11(part_counts):
    with criterion(6, "c_20, f_20, l_20 and m(N) exact") as notes:
        r = part_counts[20]
        assert dict(r.potentially_by_parts.rows()) == C20
        assert dict(r.forcibly_by_parts.rows()) == F20
        assert dict(r.forcibly_by_largest.rows()) == L20
        assert {N: part_counts[N].extreme.m_n for N in m_TABLE} == m_TABLE
        notes.append("m(20)=3, m(60)=6")


@pytest.mark.slow
def test_c07_oracle_forcible():
    with criterion(7, "forcible test equals realization oracle, n<=9") as notes:
        total = mismatches = 0
        for n in range(2, 10):
            for d in zero_free_graphical(n):
                total += 1
                if is_forcibly_connected(d).forcibly_connected != all_realizations_k_connected(d, 1):
                    mismatches += 1
        assert mismatches == 0
        notes.append(f"{total} sequences, 0 mismatches")


def test_c08_oracle_k():
    with criterion(8, "k=2 (n<=7) and k=3 (n<=6) equal the oracle") as notes:
        total = 0
        for n in range(3, 8):
            for d in zero_free_graphical(n):
                total += 1
                assert is_forcibly_biconnected(d) == all_realizations_k_connected(d, 2), d
                assert is_forcibly_k_connected(d, 2) == all_realizations_k_connected(d, 2), d
                if 4 <= n <= 6:
                    assert is_forcibly_k_connected(d, 3) == all_realizations_k_connected(d, 3), d
        notes.append(f"{total} sequences")


def test_c09_support_and_witnesses(seq_counts):
    with criterion(9, "support equality and witnesses for n<=10") as notes:
        points = 0
        for n in range(3, 11):
            expected = set(range(2 * n - 2, n * (n - 1) + 1, 2))
            r = seq_counts[n]
            assert support_of(r.potentially_by_sum.rows()) == expected
            assert support_of(r.forcibly_by_sum.rows()) == expected
            for N in expected:
                d = proposition1_witness(N, n)
                assert len(d) == n and sum(d) == N
                assert is_graphical_eg(d) and is_forcibly_connected(d).forcibly_connected
                points += 1
        notes.append(f"{points} witnesses")


def _random_sequences(rng, count):
    """Half uniform noise, half degree sequences of random graphs with
    small perturbations, so both verdicts are well represented."""
    for i in range(count):
        n = rng.randint(1, 200)
        if i % 2 == 0:
            yield [rng.randint(0, n) for _ in range(n)]
            continue
        p = rng.random()
        deg = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    deg[u] += 1
                    deg[v] += 1
        if i % 4 == 3:
            for _ in range(rng.randint(1, 3)):
                j = rng.randrange(n)
                deg[j] = max(0, deg[j] + rng.choice((-1, 1)))
        yield deg


def test_c10_criteria_equivalence():
    with criterion(10, "EG, HH and Nash-Williams agree") as notes:
        parts = 0
        for N in range(0, 25, 2):
            for d in partitions(N):
                parts += 1
                a, b, c = is_graphical_eg(d), is_graphical_hh(d), nash_williams(d)
                assert a == b == c, d
        rng = random.Random(20241015)
        count = 10**5
        positives = 0
        for d in _random_sequences(rng, count):
            a, b, c = is_graphical_eg(d), is_graphical_hh(d), nash_williams(d)
            assert a == b == c, d
            positives += a
        assert positives > count // 10
        notes.append(f"{parts} partitions, {count} random ({positives} graphical)")


def test_c11_sampler():
    with criterion(11, "sampler uniform (chi-square, p>0.001) and deterministic") as notes:
        rng = np.random.default_rng(2024)
        c = Counter(sample_sequence(4, 3, 1, rng) for _ in range(10_000))
        assert set(c) == {(3, 2, 2, 1), (3, 1, 1, 1)}
        p = chisquare(list(c.values())).pvalue
        assert p > 0.001
        cfg = ScanConfig(80, ((0.7, 0.05), (0.7, 0.2)), samples_per_cell=10, seed=11)
        assert run_scan(cfg).to_jsonl(timing=False) == run_scan(cfg).to_jsonl(timing=False)
        assert run_scan(cfg).to_csv().splitlines()[0].startswith("p_h,p_l")
        notes.append(f"counts {sorted(c.values())}, p={p:.3f}")


def _scan_once(seed):
    cfg = ScanConfig(1000, ((0.85, 0.005), (0.85, 0.10)), samples_per_cell=30,
                     timeout_per_instance=60.0, seed=seed)
    low, high = run_scan(cfg).cells
    return low, high


def test_c12_scan_transition():
    with criterion(12, "n=1000, p_h=0.85 scan brackets the transition") as notes:
        for attempt, seed in enumerate((0, 1)):
            low, high = _scan_once(seed)
            ok = (low.proportion is not None and high.proportion is not None
                  and low.proportion <= 0.2 and high.proportion >= 0.8)
            if ok:
                break
        notes.append(f"p_l=0.005: {low.forcibly}/{low.completed}, p_l=0.10: {high.forcibly}/{high.completed}, "
                     f"timeouts {low.timeouts}+{high.timeouts}, attempts {attempt + 1}")
        assert ok
