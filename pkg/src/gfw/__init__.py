"""Exact-arithmetic workbench for CDGA models of Gelfand-Fuks cohomology of spheres."""

from .algebra import (Derivation, Element, GradedAlgebra, Morphism, adjoin, apply_morphism,
                      basis_of_degree, define_algebra, extend_derivation, multiply,
                      normal_form, transfer)
from .cohomology import (DGA, BettiTable, CutoffError, betti_table, classes_independent,
                         cohomology_kernel_of_map, differential_matrix, is_coboundary,
                         verify_chain_map, verify_d_squared)
from .linalg import Matrix, kernel_basis, rank, solve

__version__ = "0.1.0"
