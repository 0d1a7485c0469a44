"""
Cohomology of a truncated Koszul algebra
========================================

WU_d is Q[c_1..c_d] cut off above degree 2d, tensored with exterior
generators h_i of degree 2i-1 and d(h_i) = c_i.  For d = 3 its cohomology
is that of a wedge of spheres.
"""

from gfw import models
from gfw.cohomology import betti_table, cocycle_basis, is_coboundary

wu = models.build_WU(3)
print(wu.presentation())

# %%
# Betti numbers up to the top degree 15
table = betti_table(wu.dga, 15)
for k, dim in table.nonzero().items():
    print(f"H^{k:<2d} = Q^{dim}")

# %%
# A product of two degree-7 classes vanishes in cohomology.  The solver
# returns a primitive.
a, b = wu.parse("c1*h3"), wu.parse("c2*h2")
prod = a * b
print("product:", prod)
prim = is_coboundary(wu.dga, prod)
print("primitive:", prim, "  check:", wu.d(prim) == prod)

# %%
# Closed elements of degree 7 in reduced echelon form
for z in cocycle_basis(wu.dga, 7):
    print("  ", z)
