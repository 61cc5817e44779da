"""
Exhaustive counts
=================

Generate every zero-free graphical sequence of a given length (or every
graphical partition of an even integer) and count the forcibly connected
ones.
"""

from forcibly.enumeration import count_forcibly, count_partitions, minimum_largest_forcible

print("n,D,Dc,Df,ratio")
for n in range(4, 11):
    print(count_forcibly(n).csv_row())

r = count_forcibly(7)
# itemized by degree sum
for N, c in r.potentially_by_sum.rows():
    print(N, c, r.forcibly_by_sum[N])

print("N,g,gc,gf,ratio")
for N in (10, 20, 30, 40):
    print(count_partitions(N).csv_row())

p = count_partitions(20)
print("by parts:", p.forcibly_by_parts.rows())
print("by largest part:", p.forcibly_by_largest.rows())

# smallest possible largest term of a forcibly connected sequence
print([minimum_largest_forcible(n) for n in range(3, 15)])
