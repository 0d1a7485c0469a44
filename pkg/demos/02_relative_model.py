"""
The relative model over BSO(3)
==============================

Twisting the free Lie model of F_3 by p_1 gives a model of the Borel
construction F_3//SO(3).  We compare it with the truncated model via the
chain map Psi, then read off which powers of p_1 die.
"""

from gfw import models
from gfw.algebra import Morphism
from gfw.cohomology import cohomology_kernel_of_map, verify_chain_map

rel = models.build_relative_D()
fd = models.build_FdSOd(3)

for name in ("x2", "x6", "x1_2", "x2_3"):
    print(f"D({name}) = {rel.d(name)}")

# %%
psi = models.psi_morphism()
print(verify_chain_map(psi, rel.dga, fd.dga, 15))
print("Psi(x2) =", psi.on("x2"))

# %%
# Kernel of Q[p1] -> H(F_3//SO(3)): everything from p1^2 on
b3 = models.build_BSO(3)
f = Morphism.from_names(b3, fd.algebra, same_name=True)
for k, basis in cohomology_kernel_of_map(b3, f, fd.dga, 16).items():
    print(k, [str(v) for v in basis])
