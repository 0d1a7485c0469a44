"""Weighted monomial ideals and Hilbert functions of principal quotients."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .algebra import Element, GradedAlgebra
from .linalg import Matrix, rank

__all__ = ["WeightedRing", "MinGenSet", "chern_ring", "monomials_of_degree",
           "truncation_kernel_min_gens", "min_gen_degree_range_check",
           "hilbert_principal_quotient"]


@dataclass(frozen=True)
class WeightedRing:
    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.weights):
            raise ValueError("one weight per variable")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")

    def degree(self, exps: tuple[int, ...]) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def format(self, exps: tuple[int, ...]) -> str:
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(self.names, exps) if e]
        return "*".join(parts) or "1"


def chern_ring(d: int) -> WeightedRing:
    """``Q[c_1..c_d]`` with ``|c_i| = 2i``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    return WeightedRing(tuple(f"c{i}" for i in range(1, d + 1)),
                        tuple(2 * i for i in range(1, d + 1)))


def monomials_of_degree(ring: WeightedRing, k: int) -> list[tuple[int, ...]]:
    """Exponent vectors of weighted degree ``k``, lexicographically descending."""
    out = []
    n = len(ring.weights)

    def rec(pos, remaining, acc):
        if pos == n:
            if remaining == 0:
                out.append(tuple(acc))
            return
        w = ring.weights[pos]
        for e in range(remaining // w, -1, -1):
            acc.append(e)
            rec(pos + 1, remaining - e * w, acc)
            acc.pop()

    rec(0, k, [])
    return out


@dataclass
class MinGenSet:
    ring: WeightedRing
    bound: int
    by_degree: dict[int, list[tuple[int, ...]]]

    def degrees(self) -> list[int]:
        return sorted(self.by_degree)

    def members(self) -> list[tuple[int, ...]]:
        return [m for k in self.degrees() for m in self.by_degree[k]]

    def to_dict(self) -> dict[str, list[str]]:
        return {str(k): [self.ring.format(m) for m in self.by_degree[k]] for k in self.degrees()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def truncation_kernel_min_gens(ring: WeightedRing, bound: int) -> MinGenSet:
    """Minimal monomial generators of the ideal of all monomials of degree ``> bound``.

    A monomial of degree ``> bound`` is a minimal generator exactly when
    dividing it by any variable in its support lands in degree ``<= bound``;
    so all of them have degree at most ``bound + max(weights)``.
    """
    if not ring.weights:
        raise ValueError("empty ring")
    if bound < max(ring.weights):
        raise ValueError(f"bound {bound} below the largest weight {max(ring.weights)}")
    by_degree: dict[int, list[tuple[int, ...]]] = {}
    for k in range(bound + 1, bound + max(ring.weights) + 1):
        for m in monomials_of_degree(ring, k):
            if all(k - w <= bound for e, w in zip(m, ring.weights) if e):
                by_degree.setdefault(k, []).append(m)
    return MinGenSet(ring, bound, by_degree)


def min_gen_degree_range_check(d: int) -> bool:
    """Minimal generators of ``U_d^{>2d}`` live in degrees ``[2d+2, 4d]``, both attained."""
    if d < 1:
        raise ValueError("d must be at least 1")
    degs = truncation_kernel_min_gens(chern_ring(d), 2 * d).degrees()
    lo, hi = 2 * d + 2, 4 * d
    return all(lo <= k <= hi for k in degs) and lo in degs and hi in degs


def hilbert_principal_quotient(ring: GradedAlgebra, relation: Element,
                               k_max: int) -> dict[int, int]:
    """Hilbert function of ``ring / (relation)`` through degree ``k_max``.

    ``dim_k = #monomials(k) - rank(multiplication by relation: R^{k-r} -> R^k)``.
    """
    if relation.algebra != ring:
        raise ValueError("relation lives in a different ring")
    if not relation.is_homogeneous():
        raise ValueError(f"relation {relation} is not homogeneous")
    r = relation.degree
    dims = {}
    for k in range(k_max + 1):
        n = len(ring.basis_of_degree(k))
        if relation and k >= r:
            src = ring.basis_of_degree(k - r)
            tgt = {m: i for i, m in enumerate(ring.basis_of_degree(k))}
            cols = []
            for m in src:
                prod = ring.monomial(m) * relation
                cols.append({tgt[m2]: c for m2, c in prod.terms.items()})
            n -= rank(Matrix.from_columns(len(tgt), cols))
        dims[k] = n
    return dims
