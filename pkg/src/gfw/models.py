"""Concrete CDGA models for Gelfand-Fuks cohomology of spheres.

Naming of generators: ``c<i>``, ``h<i>`` (Chern classes and their transgressions),
``p<i>``, ``e`` (Pontrjagin and Euler classes), ``s`` (fundamental class of the
sphere), ``x<i>`` and ``x<i>_<j>`` (Chevalley-Eilenberg generators of the
minimal Lie model of ``F_3``) and ``xb...`` for their barred partners of
degree lowered by 3.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .algebra import (Derivation, Element, GradedAlgebra, Morphism, extend_derivation,
                      transfer)
from .cohomology import DGA, CheckReport, verify_d_squared

__all__ = [
    "ModelBundle", "ConstructionError",
    "build_WU", "build_BSO", "build_A", "build_FdSOd", "build_CE", "build_relative_D",
    "build_gamma", "build_C1", "phi_morphism", "psi_morphism", "theta", "ev_models",
    "ev_morphism", "even_splitting", "rescale", "ce_inventory_audit",
    "WEDGE_DEGREES", "PAIRS", "D_TABLE", "PHI_TABLE", "GAMMA_PRINTED_TABLE",
]


class ConstructionError(RuntimeError):
    """A model failed its own consistency check while being built."""


@dataclass(frozen=True)
class ModelBundle:
    dga: DGA
    notes: str = ""
    generator_names: tuple[str, ...] = field(default=())

    @property
    def algebra(self) -> GradedAlgebra:
        return self.dga.algebra

    @property
    def cutoff(self) -> int:
        return self.dga.cutoff

    @property
    def name(self) -> str:
        return self.dga.name

    def d(self, a: Element | str) -> Element:
        return self.dga.d(a)

    def parse(self, text: str) -> Element:
        return self.algebra.parse(text)

    def presentation(self) -> str:
        lines = [f"model {self.name} (valid through degree {self.cutoff})"]
        if self.notes:
            lines.append(f"  {self.notes}")
        for t in self.algebra.truncations:
            names = ", ".join(self.algebra.generators[i].name for i in sorted(t.ids))
            lines.append(f"  truncation: monomials in {names} of degree > {t.bound} vanish")
        for g, m in self.algebra.square_rewrites.items():
            lines.append(f"  relation: {self.algebra.generators[g].name}^2 = "
                         f"{self.algebra.format_monomial(m)}")
        for g in self.algebra.generators:
            lines.append(f"  {g.name:8s} deg {g.degree:3d}   d = {self.d(g.name)}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "model": self.name,
            "cutoff": self.cutoff,
            "algebra": self.algebra.to_dict(),
            "differential": {g.name: self.d(g.name).to_dict()
                             for g in self.algebra.generators},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _dga(name: str, alg: GradedAlgebra, values: Mapping[str, Element | str], cutoff: int) -> DGA:
    return DGA(name, alg, extend_derivation(alg, 1, values), cutoff)


def _bundle(dga: DGA, notes: str = "", check_through: int | None = None) -> ModelBundle:
    rep = verify_d_squared(dga, dga.cutoff if check_through is None else check_through)
    if not rep.passed:
        raise ConstructionError(str(rep))
    return ModelBundle(dga, notes, tuple(dga.algebra.names()))


# -- classifying spaces, spheres, fibres ---------------------------------------

def _bso_generators(d: int) -> list[tuple[str, int]]:
    if d < 2:
        raise ValueError(f"BSO(d) needs d >= 2, got {d}")
    m, r = divmod(d, 2)
    if r:
        return [(f"p{i}", 4 * i) for i in range(1, m + 1)]
    # p_m = e^2 is not a separate generator
    return [(f"p{i}", 4 * i) for i in range(1, m)] + [("e", d)]


def build_BSO(d: int) -> GradedAlgebra:
    """Rational cohomology of ``BSO(d)`` (zero differential)."""
    return GradedAlgebra(_bso_generators(d))


def _pontrjagin(alg: GradedAlgebra, d: int, j: int) -> Element:
    """``p_j`` inside the algebra of ``BSO(d)`` generators (``p_{d/2} = e^2`` for even ``d``)."""
    if d % 2 == 0 and j == d // 2:
        return alg.gen("e") ** 2
    return alg.gen(f"p{j}")


@lru_cache(maxsize=None)
def build_WU(d: int) -> ModelBundle:
    """``Q[c_1..c_d]/(degree > 2d) (x) Lambda(h_1..h_d)`` with ``d(h_i) = c_i``.

    The algebra vanishes above degree ``d(d+2)``, which is used as the cutoff.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    cs = [f"c{i}" for i in range(1, d + 1)]
    alg = GradedAlgebra([(c, 2 * i) for i, c in enumerate(cs, 1)] +
                        [(f"h{i}", 2 * i - 1) for i in range(1, d + 1)],
                        [(cs, 2 * d)])
    dga = _dga(f"WU_{d}", alg, {f"h{i}": f"c{i}" for i in range(1, d + 1)}, d * (d + 2))
    return _bundle(dga, "truncated Koszul model of the fibre F_d")


@lru_cache(maxsize=None)
def build_FdSOd(d: int) -> ModelBundle:
    """``B_d (x) WU_d`` with ``d(h_i) = c_i - (-1)^(i/2) p_(i/2)`` for even ``i``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    wu = build_WU(d).algebra
    base = _bso_generators(d)
    cs = [f"c{i}" for i in range(1, d + 1)]
    alg = GradedAlgebra(base + [(g.name, g.degree) for g in wu.generators], [(cs, 2 * d)])
    values = {}
    for i in range(1, d + 1):
        v = alg.gen(f"c{i}")
        if i % 2 == 0:
            v = v - (-1) ** (i // 2) * _pontrjagin(alg, d, i // 2)
        values[f"h{i}"] = v
    dga = _dga(f"FdSO_{d}", alg, values, 2 * d * (d + 2))
    return _bundle(dga, "relative model of F_d//SO(d) over B_d")


@lru_cache(maxsize=None)
def build_A(d: int) -> ModelBundle:
    """Model of ``S^d//SO(d+1)`` over ``B_{d+1}``.

    Odd ``d``: ``B_{d+1} (x) Lambda(s)``, ``d(s) = e``.  Even ``d``: ``B_{d+1}[e]``
    with ``e^2 = p_{d/2}`` and zero differential.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    base = _bso_generators(d + 1)
    if d % 2:
        alg = GradedAlgebra(base + [("s", d)])
        dga = _dga(f"A_{d}", alg, {"s": "e"}, 8 * d)
    else:
        alg = GradedAlgebra(base + [("e", d)], square_rewrites={"e": {f"p{d // 2}": 1}})
        dga = _dga(f"A_{d}", alg, {}, 8 * d)
    return _bundle(dga, "model of the sphere over BSO(d+1)")


def even_splitting(a: Element, d: int) -> tuple[Element, Element]:
    """Split ``a = part_1 + e * part_e`` by the exponent of ``e`` (even ``d`` only)."""
    if d % 2:
        raise ValueError("the splitting is only defined for even d")
    alg = a.algebra
    eid = alg.generator("e").id
    one, ee = {}, {}
    for m, c in a.terms.items():
        exps = dict(m)
        k = exps.get(eid, 0)
        if k > 1:
            raise ValueError(f"{alg.format_monomial(m)} is not reduced modulo e^2")
        if k:
            del exps[eid]
            ee[tuple(sorted(exps.items()))] = c
        else:
            one[m] = c
    return Element(alg, one), Element(alg, ee)


# -- the d = 3 data ---------------------------------------------------------

# degrees of the wedge summands of F_3: x1..x17
WEDGE_DEGREES: dict[str, int] = {
    **{f"x{i}": 7 for i in (1, 2, 3, 4)},
    "x5": 9,
    **{f"x{i}": 10 for i in (6, 7, 8)},
    "x9": 11,
    **{f"x{i}": 12 for i in (10, 11, 12, 13)},
    "x14": 14,
    **{f"x{i}": 15 for i in (15, 16, 17)},
}

# bracket-length-two generators of degree <= 15
PAIRS: tuple[tuple[int, int], ...] = (
    (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5))

RELATIVE_CUTOFF = 15

D_TABLE: dict[str, str] = {
    "x2": "-p1^2",
    "x6": "-p1*x1",
    "x7": "-p1*x3",
    "x8": "-p1*x4",
    "x10": "p1*x5",
    "x14": "p1*x9",
    "x15": "-p1*x11",
    "x16": "-p1*x12",
    "x17": "-p1*x13",
    "x1_2": "x1*x2 + p1*x6",
    "x1_3": "x1*x3",
    "x1_4": "x1*x4",
    "x2_3": "x2*x3 - p1*x7",
    "x2_4": "x2*x4 - p1*x8",
    "x3_4": "x3*x4",
    "x1_5": "x1*x5",
    "x2_5": "x2*x5 + p1*x10",
    "x3_5": "x3*x5",
    "x4_5": "x4*x5",
}

PHI_TABLE: dict[str, str] = {
    "x1": "c1*h3",
    "x2": "c2*h2",
    "x3": "c1^3*h1",
    "x4": "c1*c2*h1",
    "x5": "c2*h3",
    "x6": "c2*h1*h3 - c1*h2*h3",
    "x7": "c1^3*h1*h2",
    "x8": "c1*c2*h1*h2",
    "x9": "c3*h3",
    "x10": "c2*h2*h3",
    "x11": "c1^3*h1*h3",
    "x12": "c1*c2*h1*h3",
    "x13": "c3*h1*h3",
    "x14": "c3*h2*h3",
    "x15": "c1^3*h1*h2*h3",
    "x16": "c1*c2*h1*h2*h3",
    "x17": "c3*h1*h2*h3",
    "x1_2": "-c2*h1*h2*h3",
}

# The low-degree part of the differential of the section-space model as it
# is usually displayed; used only for cross-checking the derived one.
GAMMA_PRINTED_TABLE: dict[str, str] = {
    "xb1": "0", "xb2": "0", "xb3": "0", "xb4": "0", "xb5": "0",
    "xb6": "p1*xb1",
    "xb7": "-p1*xb3",
    "xb8": "-p1*xb4",
    "x1": "-e*xb1",
    "x2": "-p1^2 - e*xb2",
    "x3": "-e*xb3",
    "x4": "-e*xb4",
}


def _pair_name(i: int, j: int) -> str:
    return f"x{i}_{j}"


def _ce_generators() -> list[tuple[str, int]]:
    gens = list(WEDGE_DEGREES.items())
    gens += [(_pair_name(i, j), WEDGE_DEGREES[f"x{i}"] + WEDGE_DEGREES[f"x{j}"] - 1)
             for i, j in PAIRS]
    return gens


def bar(name: str) -> str:
    return "xb" + name[1:]


def ce_inventory_audit(max_degree: int = 15) -> dict[int, list[str]]:
    """CE generators of degree ``<= max_degree`` predicted from the wedge degrees.

    A generator dual to a bracket of ``l`` classes of degrees ``n_1..n_l`` has
    degree ``n_1 + .. + n_l - l + 1``.  A self-bracket ``[a, a]`` survives only
    when ``a`` is odd in the Lie model, i.e. the class has even degree.
    Raises if some bracket of length three or more would land in range.
    """
    degs = sorted(WEDGE_DEGREES.values())
    if 3 * degs[0] - 2 <= max_degree:
        raise ValueError("brackets of length 3 would contribute; extend the inventory")
    out: dict[int, list[str]] = {}
    items = list(WEDGE_DEGREES.items())
    for name, n in items:
        if n <= max_degree:
            out.setdefault(n, []).append(name)
    for a in range(len(items)):
        for b in range(a, len(items)):
            (na, da), (nb, db) = items[a], items[b]
            if a == b and da % 2:
                continue
            deg = da + db - 1
            if deg <= max_degree:
                out.setdefault(deg, []).append(_pair_name(int(na[1:]), int(nb[1:])))
    return out


@lru_cache(maxsize=None)
def build_CE() -> ModelBundle:
    """Chevalley-Eilenberg cochains of the minimal Lie model of ``F_3`` through degree 15."""
    alg = GradedAlgebra(_ce_generators())
    values = {_pair_name(i, j): alg.gen(f"x{i}") * alg.gen(f"x{j}") for i, j in PAIRS}
    dga = _dga("CE(L_3)", alg, values, RELATIVE_CUTOFF)
    return _bundle(dga, "free Lie model of the wedge; generators of degree <= 15")


@lru_cache(maxsize=None)
def build_relative_D() -> ModelBundle:
    """``(B_3 (x) CE(L_3), D)``, the relative model of ``F_3//SO(3)`` through degree 15."""
    alg = GradedAlgebra([("p1", 4)] + _ce_generators())
    dga = _dga("B_3(x)CE(L_3)", alg, D_TABLE, RELATIVE_CUTOFF)
    return _bundle(dga, "relative Sullivan model of F_3//SO(3); generators of degree <= 15")


@lru_cache(maxsize=None)
def phi_morphism() -> Morphism:
    """The quasi-isomorphism ``CE(L_3) -> WU_3`` picking cohomology representatives."""
    src = build_CE().algebra
    tgt = build_WU(3).algebra
    values = {name: PHI_TABLE.get(name, "0") for name in src.names()}
    return Morphism.from_names(src, tgt, {k: tgt.parse(v) for k, v in values.items()})


@lru_cache(maxsize=None)
def psi_morphism() -> Morphism:
    """``Psi: (B_3 (x) CE(L_3), D) -> (B_3 (x) WU_3, d~)``, extending ``phi``."""
    src = build_relative_D().algebra
    tgt = build_FdSOd(3).algebra
    values = {name: tgt.parse(PHI_TABLE.get(name, "0")) for name in src.names() if name != "p1"}
    values["p1"] = tgt.gen("p1")
    values["x2"] = tgt.parse("c2*h2 - p1*h2")
    return Morphism.from_names(src, tgt, values)


def theta(alg: GradedAlgebra, pairs: Mapping[str, str], d: int,
          base: tuple[str, ...] = ("p1", "e", "s")) -> Derivation:
    """The base-linear derivation of degree ``-d`` with ``z -> zbar`` and ``zbar -> 0``."""
    if d % 2 == 0:
        raise ValueError("theta is defined for odd d")
    paired = set(pairs) | set(pairs.values())
    for g in alg.generators:
        if g.name not in paired and g.name not in base:
            raise ValueError(f"generator {g.name} has no partner")
    values = {}
    for z, zb in pairs.items():
        if alg.generator(zb).degree != alg.generator(z).degree - d:
            raise ValueError(f"|{zb}| != |{z}| - {d}")
        values[z] = alg.gen(zb)
    return extend_derivation(alg, -d, values)


GAMMA_MAX = 12


def _gamma_generators(with_s: bool) -> list[tuple[str, int]]:
    ce = _ce_generators()
    order = {name: i for i, (name, _) in enumerate(ce)}
    gens = [(bar(n), deg - 3) for n, deg in ce] + ce
    # by degree; barred before unbarred; then in CE order
    gens.sort(key=lambda g: (g[1], not g[0].startswith("xb"),
                             order[g[0] if not g[0].startswith("xb") else "x" + g[0][2:]]))
    base = [("p1", 4), ("e", 4)] + ([("s", 3)] if with_s else [])
    return base + gens


def _gamma_differential(alg: GradedAlgebra, theta_sign: int = -1) -> dict[str, Element]:
    rel = build_relative_D()
    th = theta(alg, {n: bar(n) for n, _ in _ce_generators()}, 3)
    e = alg.gen("e")
    values: dict[str, Element] = {}
    for name, _ in _ce_generators():
        dz = transfer(rel.d(name), alg)
        values[name] = dz - e * alg.gen(bar(name))
        values[bar(name)] = theta_sign * th(dz)
    return values


@lru_cache(maxsize=None)
def build_gamma(k_max: int = GAMMA_MAX, theta_sign: int = -1, check: bool = True) -> ModelBundle:
    """``B_4 (x) Lambda(z, zbar)`` with ``Dbar(z) = D(z) - e*zbar``, ``Dbar(zbar) = -Theta(D(z))``.

    All CE generators of degree ``<= 15`` and their bars (degree ``<= 12``) are
    present; cohomology is valid through degree 12.  ``theta_sign=+1`` builds a
    deliberately wrong model (use with ``check=False``).
    """
    if k_max > GAMMA_MAX:
        raise ValueError(f"the section-space model is only known through degree {GAMMA_MAX}")
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    alg = GradedAlgebra(_gamma_generators(with_s=False))
    dga = _dga("Gamma_3", alg, _gamma_differential(alg, theta_sign), k_max)
    if not check:
        return ModelBundle(dga, "unchecked", tuple(alg.names()))
    return _bundle(dga, "relative model of the section space over B_4",
                   check_through=k_max + 1)


@lru_cache(maxsize=None)
def build_C1() -> ModelBundle:
    """The pure subcomplex ``B_4 (x) Lambda(zbar_1, z_1)`` with ``D(z_1) = p_1^2 - e*zbar_1``."""
    alg = GradedAlgebra([("p1", 4), ("e", 4), ("zb1", 4), ("z1", 7)])
    dga = _dga("C_1", alg, {"z1": "p1^2 - e*zb1"}, 24)
    return _bundle(dga, "pure Sullivan subcomplex spanned by V_1 and its bar")


@lru_cache(maxsize=None)
def ev_models() -> tuple[ModelBundle, ModelBundle]:
    """Source ``(A_3 (x) CE(L_3), D)`` and target ``A_3 (x)_{B_4} Gamma_3`` of the evaluation map."""
    src_alg = GradedAlgebra([("p1", 4), ("e", 4), ("s", 3)] + _ce_generators())
    src_vals: dict[str, Element | str] = dict(D_TABLE)
    src_vals["s"] = "e"
    src = _dga("A_3(x)CE(L_3)", src_alg, src_vals, RELATIVE_CUTOFF)

    tgt_alg = GradedAlgebra(_gamma_generators(with_s=True))
    gamma = build_gamma()
    tgt_vals = {name: transfer(gamma.d(name), tgt_alg) for name in gamma.algebra.names()}
    tgt_vals["s"] = tgt_alg.gen("e")
    tgt = _dga("A_3(x)Gamma_3", tgt_alg, tgt_vals, GAMMA_MAX)
    return (_bundle(src, "fibrewise model over A_3"),
            _bundle(tgt, "section space times sphere", check_through=GAMMA_MAX + 1))


@lru_cache(maxsize=None)
def ev_morphism() -> Morphism:
    """``z -> z + s*zbar``, identity on ``p1``, ``e``, ``s``."""
    src, tgt = ev_models()
    values = {}
    for name in src.algebra.names():
        if name.startswith("x"):
            values[name] = tgt.algebra.gen(name) + tgt.algebra.gen("s") * tgt.algebra.gen(bar(name))
    return Morphism.from_names(src.algebra, tgt.algebra, values, same_name=True)


def rescale(bundle: ModelBundle, factors: Mapping[str, int | Fraction]) -> ModelBundle:
    """Isomorphic model obtained by substituting ``g -> factor * g``."""
    alg = bundle.algebra
    fwd = Morphism.from_names(alg, alg, {n: Fraction(c) * alg.gen(n) for n, c in factors.items()},
                              same_name=True)
    back = Morphism.from_names(alg, alg, {n: alg.gen(n) * (1 / Fraction(c))
                                          for n, c in factors.items()}, same_name=True)
    values = {g.name: back(bundle.d(fwd(alg.gen(g.name)))) for g in alg.generators}
    dga = _dga(bundle.name, alg, values, bundle.cutoff)
    return ModelBundle(dga, bundle.notes + " (rescaled)", bundle.generator_names)
