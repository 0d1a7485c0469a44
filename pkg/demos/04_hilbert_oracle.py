"""
A pure subcomplex against two oracles
=====================================

C_1 has even generators p1, e, zb1 of degree 4 and one odd generator z1
killing p1^2 - e*zb1.  Its cohomology is the quotient ring, so the Betti
numbers can be predicted without touching the differential.
"""

from gfw.checks import c1_oracle_pair

betti, hilb, series = c1_oracle_pair(20)
print(" k  H^k(C_1)  Hilbert  series")
for k in range(0, 21, 4):
    print(f"{k:2d}  {betti[k]:8d}  {hilb[k]:7d}  {series[k]:6d}")
