"""
Random sequences with fixed extremes
====================================

Draw graphical sequences of length 1000 with a given largest and smallest
term and watch the proportion of forcibly connected ones climb as the
smallest term grows.
"""

import numpy as np

from forcibly.sampling import ScanConfig, ScanReport, run_scan, sample_sequence

rng = np.random.default_rng(0)
d = sample_sequence(20, 12, 3, rng)
print(d)

grid = [(0.85, pl) for pl in (0.005, 0.01, 0.03, 0.05, 0.07, 0.10)]
cfg = ScanConfig(1000, tuple(grid), samples_per_cell=10, timeout_per_instance=60.0, seed=1)
report = run_scan(cfg)
for cell in report.cells:
    print(f"p_l={cell.p_l:<6g} forcibly {cell.forcibly}/{cell.completed}  median {cell.quartiles()[1]:.2f} ms")
# ten draws per cell is coarse, so loosen what counts as "near 0" and "near 1"
print(ScanReport(cfg, report.cells, eps=0.2).transition_intervals())
