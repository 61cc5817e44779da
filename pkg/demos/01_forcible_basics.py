"""
Deciding forcible connectivity
==============================

A graphical sequence is forcibly connected when no realization of it is
disconnected, which is the same as saying it cannot be cut into two
graphical halves.
"""

from forcibly import DegreeSequence, enumerate_decompositions, is_forcibly_connected

# sequences can be written out or in run-length form
d = DegreeSequence.parse("6^3 5^4 4^2")
v = is_forcibly_connected(d)
print(d, "->", v.forcibly_connected, v.decided_by.value)

# a negative verdict carries a witness split
v = is_forcibly_connected((4, 4, 3, 3, 3, 2, 2, 2, 1))
print("witness:", v.witness)

# every split, not just the first one found
for split in enumerate_decompositions((4, 4, 3, 3, 3, 2, 2, 2, 1)):
    print("  ", split)

# this one survives the whole subset search
print(is_forcibly_connected((3, 3, 3, 1, 1, 1)))
