"""
Forcible k-connectivity
=======================

Deleting a vertex turns a degree sequence into a shorter one; checking all
such deletions gives the biconnected and k-connected tests. The brute-force
oracle confirms a few answers.
"""

from forcibly.kforce import GhhChoice, ghh, is_forcibly_biconnected, is_forcibly_k_connected
from forcibly.oracle import all_realizations_k_connected, realizations

print(ghh((3, 3, 2, 2, 2), GhhChoice(2, (3, 3))))

for d in [(2, 2, 2), (3, 3, 2, 2, 2), (3, 2, 2, 2, 1), (2, 2, 2, 2, 2, 2)]:
    print(d, is_forcibly_biconnected(d), all_realizations_k_connected(d, 2))

d = (4, 4, 4, 4, 4)
print(d, "3-connected:", is_forcibly_k_connected(d, 3))

# the realizations of 2,2,2,2,2,2 include a 6-cycle and two triangles
gs = list(realizations((2,) * 6))
print(len(gs), "labeled realizations,", sum(g.is_connected() for g in gs), "connected")
