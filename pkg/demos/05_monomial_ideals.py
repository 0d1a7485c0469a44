"""
Minimal generators of a truncation ideal
========================================

In Q[c_1..c_d] with |c_i| = 2i, the monomials of degree above 2d form an
ideal.  Its minimal generators sit between degrees 2d+2 and 4d.
"""

from gfw.ideals import chern_ring, min_gen_degree_range_check, truncation_kernel_min_gens

for d in range(1, 5):
    mg = truncation_kernel_min_gens(chern_ring(d), 2 * d)
    print(f"d={d}:", mg.to_dict())

# %%
print([min_gen_degree_range_check(d) for d in range(1, 9)])
