"""Degree-wise cohomology of differential graded algebras.

Every :class:`DGA` carries a validity cutoff: the largest degree ``k`` for
which the differential is known on all monomials of degree ``k``.  Asking for
anything that needs ``d`` above the cutoff raises :class:`CutoffError`.

Codomains of differential matrices are enumerated lazily: the rows of the
matrix of ``d: A^k -> A^{k+1}`` are exactly the monomials that occur in the
images.  Ranks and kernels do not depend on the missing rows.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import Derivation, Element, GradedAlgebra, Monomial, Morphism
from .linalg import Matrix, kernel_basis, rank, row_reduce, solve

__all__ = [
    "CutoffError", "DGA", "BettiTable", "CohomologyClassSet", "CheckReport", "DegreeSlice",
    "differential_matrix", "degree_slice", "betti_table", "is_coboundary",
    "verify_d_squared", "verify_chain_map", "classes_independent",
    "cohomology_kernel_of_map", "cocycle_basis",
]


class CutoffError(ValueError):
    """A computation was requested beyond a model's validity cutoff."""


@dataclass(frozen=True)
class DGA:
    name: str
    algebra: GradedAlgebra
    differential: Derivation
    cutoff: int

    def __post_init__(self):
        if self.differential.shift != 1:
            raise ValueError("a differential has degree +1")
        if self.differential.algebra != self.algebra:
            raise ValueError("differential acts on a different algebra")

    def d(self, a: Element | str) -> Element:
        if isinstance(a, str):
            a = self.algebra.parse(a)
        return self.differential(a)

    def check_degree(self, k: int):
        if k > self.cutoff:
            raise CutoffError(f"degree {k} exceeds the validity cutoff {self.cutoff} "
                              f"of model {self.name!r}")


@dataclass(frozen=True)
class DegreeSlice:
    """The differential ``A^k -> A^{k+1}`` with its bases."""
    degree: int
    domain: tuple[Monomial, ...]
    codomain: tuple[Monomial, ...]
    matrix: Matrix


def _images_to_matrix(alg: GradedAlgebra, images: Sequence[Element],
                      extra_rows: Iterable[Monomial] = ()) -> tuple[tuple[Monomial, ...], Matrix]:
    rows: set[Monomial] = set(extra_rows)
    for v in images:
        rows.update(v.terms)
    codomain = tuple(sorted(rows, key=lambda m: _mono_key(alg, m)))
    index = {m: i for i, m in enumerate(codomain)}
    cols = [{index[m]: c for m, c in v.terms.items()} for v in images]
    return codomain, Matrix.from_columns(len(codomain), cols)


def _mono_key(alg: GradedAlgebra, m: Monomial):
    dense = [0] * len(alg.generators)
    for i, e in m:
        dense[i] = e
    return [-x for x in dense]


def degree_slice(dga: DGA, k: int) -> DegreeSlice:
    dga.check_degree(k)
    if k < 0:
        return DegreeSlice(k, (), (), Matrix(0, 0))
    domain = dga.algebra.basis_of_degree(k)
    images = [dga.differential.apply_monomial(m) for m in domain]
    codomain, mat = _images_to_matrix(dga.algebra, images)
    return DegreeSlice(k, domain, codomain, mat)


def differential_matrix(dga: DGA, k: int) -> Matrix:
    """Matrix of ``d`` on degree ``k``; columns follow ``basis_of_degree(k)``."""
    return degree_slice(dga, k).matrix


def _rank_d(dga: DGA, k: int) -> int:
    if k < 0:
        return 0
    return rank(differential_matrix(dga, k))


@dataclass
class BettiTable:
    model: str
    max_degree: int
    dims: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, k: int) -> int:
        return self.dims.get(k, 0)

    def nonzero(self) -> dict[int, int]:
        return {k: v for k, v in sorted(self.dims.items()) if v}

    def to_dict(self, **extra) -> dict:
        out = {"model": self.model}
        out.update(extra)
        out["max_degree"] = self.max_degree
        out["betti"] = {str(k): v for k, v in self.nonzero().items()}
        return out

    def to_json(self, **extra) -> str:
        return json.dumps(self.to_dict(**extra), separators=(",", ":"))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "dim"])
        for k in range(self.max_degree + 1):
            w.writerow([k, self[k]])
        return buf.getvalue()


def betti_table(dga: DGA, k_max: int, jobs: int = 1) -> BettiTable:
    """``dim H^k = dim ker d_k - rank d_{k-1}`` for ``0 <= k <= k_max``."""
    dga.check_degree(k_max)
    degrees = list(range(k_max + 1))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            ranks = dict(zip(degrees, pool.map(lambda k: _rank_d(dga, k), degrees)))
    else:
        ranks = {k: _rank_d(dga, k) for k in degrees}
    dims = {}
    for k in degrees:
        n = len(dga.algebra.basis_of_degree(k))
        dims[k] = n - ranks[k] - ranks.get(k - 1, 0)
    return BettiTable(dga.name, k_max, dims)


def _require_closed(dga: DGA, a: Element, what: str = "element"):
    if not a.is_homogeneous():
        raise ValueError(f"{what} {a} is not homogeneous")
    if a and dga.d(a):
        raise ValueError(f"{what} {a} is not closed: d = {dga.d(a)}")


def is_coboundary(dga: DGA, a: Element) -> Element | None:
    """A primitive ``b`` with ``d(b) == a``, or ``None`` if the class of ``a`` is nonzero."""
    if not a:
        return dga.algebra.zero()
    k = a.degree
    if k is None:
        raise ValueError(f"{a} is not homogeneous")
    dga.check_degree(k)
    _require_closed(dga, a)
    if k == 0:
        return None
    sl = degree_slice(dga, k - 1)
    codomain, mat = _images_to_matrix(
        dga.algebra, [dga.differential.apply_monomial(m) for m in sl.domain], a.terms)
    b = [a.terms.get(m, Fraction(0)) for m in codomain]
    x = solve(mat, b)
    if x is None:
        return None
    return Element(dga.algebra, {m: c for m, c in zip(sl.domain, x) if c})


def classes_independent(dga: DGA, k: int, cocycles: Sequence[Element]) -> bool:
    """True iff no nontrivial rational combination of ``cocycles`` is exact."""
    dga.check_degree(k)
    for z in cocycles:
        if z and z.degree != k:
            raise ValueError(f"{z} is not homogeneous of degree {k}")
        _require_closed(dga, z, "cocycle")
    if any(not z for z in cocycles):
        return False
    images = []
    if k >= 1:
        images = [dga.differential.apply_monomial(m)
                  for m in dga.algebra.basis_of_degree(k - 1)]
    extra = [m for z in cocycles for m in z.terms]
    codomain, d_mat = _images_to_matrix(dga.algebra, images, extra)
    index = {m: i for i, m in enumerate(codomain)}
    z_mat = Matrix.from_columns(len(codomain), [{index[m]: c for m, c in z.terms.items()}
                                                for z in cocycles])
    return rank(d_mat.hstack(z_mat)) - rank(d_mat) == len(cocycles)


def cocycle_basis(dga: DGA, k: int) -> list[Element]:
    """Basis of the closed elements in degree ``k`` (reduced echelon form)."""
    sl = degree_slice(dga, k)
    return [Element(dga.algebra, {m: c for m, c in zip(sl.domain, v) if c})
            for v in kernel_basis(sl.matrix)]


@dataclass
class CohomologyClassSet:
    degree: int
    representatives: list[Element]


def cohomology_kernel_of_map(source: GradedAlgebra, f: Morphism, dga: DGA,
                             k_max: int) -> dict[int, list[Element]]:
    """For each degree, a basis of ``{u in source : f(u) is exact in dga}``.

    ``source`` carries the zero differential.  Degrees with trivial kernel are
    omitted from the result.
    """
    if f.source != source or f.target != dga.algebra:
        raise ValueError("morphism does not go from source into the model")
    dga.check_degree(k_max)
    out: dict[int, list[Element]] = {}
    for k in range(k_max + 1):
        basis = source.basis_of_degree(k)
        if not basis:
            continue
        fimg = [f.apply_monomial(m) for m in basis]
        images = []
        if k >= 1:
            images = [dga.differential.apply_monomial(m)
                      for m in dga.algebra.basis_of_degree(k - 1)]
        codomain, mat = _images_to_matrix(dga.algebra, fimg + images)
        ker = kernel_basis(mat)
        proj = [v[:len(basis)] for v in ker]
        reduced = row_reduce([p for p in proj if any(p)], len(basis))
        if reduced:
            out[k] = [Element(source, {m: c for m, c in zip(basis, v) if c}) for v in reduced]
    return out


@dataclass
class CheckReport:
    """Outcome of a consistency check; ``failures`` lists ``(generator, detail)``."""
    name: str
    checked: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed

    def __str__(self):
        status = "pass" if self.passed else f"FAIL ({len(self.failures)})"
        lines = [f"{self.name}: {status}, {self.checked} generators checked"]
        lines += [f"  {g}: {msg}" for g, msg in self.failures]
        return "\n".join(lines)


def verify_d_squared(dga: DGA, k_max: int) -> CheckReport:
    """Check ``d(d(g)) == 0`` on every generator of degree ``<= k_max``."""
    rep = CheckReport(f"d^2=0 on {dga.name} through degree {k_max}")
    for g in dga.algebra.generators:
        if g.degree > k_max:
            continue
        rep.checked += 1
        dd = dga.d(dga.d(dga.algebra.gen(g.name)))
        if dd:
            rep.failures.append((g.name, f"d^2 = {dd}"))
    return rep


def verify_chain_map(f: Morphism, d_source: DGA, d_target: DGA, k_max: int) -> CheckReport:
    """Check ``d_target(f(g)) == f(d_source(g))`` on generators of degree ``<= k_max``."""
    if f.source != d_source.algebra or f.target != d_target.algebra:
        raise ValueError("morphism does not match the given DGAs")
    rep = CheckReport(f"chain map {d_source.name} -> {d_target.name} through degree {k_max}")
    for g in f.source.generators:
        if g.degree > k_max:
            continue
        rep.checked += 1
        x = f.source.gen(g.name)
        lhs = d_target.d(f(x))
        rhs = f(d_source.d(x))
        if lhs != rhs:
            rep.failures.append((g.name, f"d(f) = {lhs}, f(d) = {rhs}"))
    return rep
