"""Named consistency suites shared by the command line and the test-suite."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import GradedAlgebra, Morphism
from .cohomology import (betti_table, cohomology_kernel_of_map, is_coboundary,
                         verify_chain_map, verify_d_squared)
from .ideals import hilbert_principal_quotient, min_gen_degree_range_check
from . import models

__all__ = ["CheckResult", "SUITES", "run_suite", "series_coefficients"]


@dataclass
class CheckResult:
    name: str
    anchor: str
    passed: bool
    detail: str = ""

    def row(self) -> dict:
        return {"check": self.name, "anchor": self.anchor,
                "status": "pass" if self.passed else "fail", "detail": self.detail}


def series_coefficients(numerator: dict[int, int], denominator_factors: list[int],
                        n: int) -> list[int]:
    """Coefficients of ``numerator(t) / prod(1 - t^a)`` up to ``t^n``.

    Plain integer power-series arithmetic, independent of any linear algebra.
    """
    coeffs = [numerator.get(k, 0) for k in range(n + 1)]
    for a in denominator_factors:
        # multiply by 1/(1 - t^a) = 1 + t^a + t^2a + ...
        for k in range(a, n + 1):
            coeffs[k] += coeffs[k - a]
    return coeffs


def _dsq() -> list[CheckResult]:
    out = []
    targets = [(models.build_WU(d), None, "d(h_i)=c_i") for d in range(1, 7)]
    targets += [(models.build_FdSOd(d), None, "d~(h_i)=c_i-(-1)^{i/2}p_{i/2}")
                for d in range(2, 7)]
    targets += [(models.build_A(d), None, "d=e d/ds; e^2=p_{d/2}") for d in range(2, 6)]
    targets += [(models.build_CE(), None, "d(x_{i,j})=x_ix_j"),
                (models.build_relative_D(), None, "D(x_2)=-p_1^2"),
                (models.build_gamma(), models.GAMMA_MAX + 1,
                 "Dbar(z_i)=D(z_i)-e zbar_i; Dbar(zbar_i)=-Theta(D(z_i))"),
                (models.build_C1(), None, "D(z_1)=p_1^2-e zbar_1")]
    for bundle, k, anchor in targets:
        k = bundle.cutoff if k is None else k
        rep = verify_d_squared(bundle.dga, k)
        out.append(CheckResult(f"d^2=0 {bundle.name} (<= {k})", anchor,
                               rep.passed, "" if rep.passed else str(rep)))
    return out


def _chainmap() -> list[CheckResult]:
    rel, fd = models.build_relative_D(), models.build_FdSOd(3)
    ce, wu = models.build_CE(), models.build_WU(3)
    src, tgt = models.ev_models()
    reps = [
        (verify_chain_map(models.psi_morphism(), rel.dga, fd.dga, models.RELATIVE_CUTOFF),
         "Psi(x_2)=phi(x_2)-p_1h_2"),
        (verify_chain_map(models.phi_morphism(), ce.dga, wu.dga, models.RELATIVE_CUTOFF),
         "phi(x_1)=c_1h_3"),
        (verify_chain_map(models.ev_morphism(), src.dga, tgt.dga, models.RELATIVE_CUTOFF),
         "z_i -> 1(x)z_i + s(x)zbar_i"),
    ]
    return [CheckResult(r.name, anchor, r.passed, "" if r.passed else str(r)) for r, anchor in reps]


def _products() -> list[CheckResult]:
    phi = models.phi_morphism()
    wu = models.build_WU(3)
    alg = wu.algebra
    bad = []
    special = None
    for i in range(1, 18):
        for j in range(i, 18):
            prod = phi.on(f"x{i}") * phi.on(f"x{j}")
            if (i, j) == (1, 2):
                special = prod
            elif prod:
                bad.append(f"phi(x{i})phi(x{j}) = {prod}")
    out = [CheckResult("phi(x_i)phi(x_j)=0 for (i,j) != (1,2)", "phi(x_1)phi(x_2)=-c_1c_2h_2h_3",
                       not bad, "; ".join(bad))]
    expected = alg.parse("-c1*c2*h2*h3")
    primitive = alg.parse("-c2*h1*h2*h3")
    ok = special == expected and wu.d(primitive) == expected
    found = is_coboundary(wu.dga, expected) if special is not None else None
    ok = ok and found is not None and wu.d(found) == expected
    out.append(CheckResult("phi(x_1)phi(x_2) exact with primitive -c_2h_1h_2h_3",
                           "d(-c_2h_1h_2h_3)", ok, f"product = {special}, found {found}"))
    ce = models.build_CE()
    lhs = wu.d(phi.on("x1_2"))
    rhs = phi(ce.d("x1_2"))
    out.append(CheckResult("d phi(x_{1,2}) = phi(x_1)phi(x_2)", "phi(x_{1,2})=-c_2h_1h_2h_3",
                           lhs == rhs, f"{lhs} vs {rhs}"))
    return out


def c1_oracle_pair(k_max: int = 20) -> tuple[dict[int, int], dict[int, int], list[int]]:
    """Betti numbers of ``C_1``, the Hilbert function of ``Q[e,p1,zb1]/(p1^2 - e*zb1)``,
    and the power series ``(1 - t^8)/(1 - t^4)^3``."""
    c1 = models.build_C1()
    betti = betti_table(c1.dga, k_max).dims
    ring = GradedAlgebra([("p1", 4), ("e", 4), ("zb1", 4)])
    hilb = hilbert_principal_quotient(ring, ring.parse("p1^2 - e*zb1"), k_max)
    series = series_coefficients({0: 1, 8: -1}, [4, 4, 4], k_max)
    return betti, hilb, series


def _c1() -> list[CheckResult]:
    betti, hilb, series = c1_oracle_pair(20)
    ok = all(betti[k] == hilb[k] == series[k] for k in range(21))
    shown = ",".join(str(betti[k]) for k in range(0, 21, 4))
    return [CheckResult("H(C_1) = Hilbert function of the quotient (<= 20)",
                        "(p_1^2-e zbar_1)", ok, f"degrees 0,4,..,20: {shown}")]


def _mingen_range() -> list[CheckResult]:
    return [CheckResult(f"minimal generator degrees in [2d+2,4d], d={d}",
                        "range from 2d+2 to 4d", min_gen_degree_range_check(d))
            for d in range(1, 7)]


def _kernel() -> list[CheckResult]:
    fd = models.build_FdSOd(3)
    b3 = models.build_BSO(3)
    ker = cohomology_kernel_of_map(b3, Morphism.from_names(b3, fd.algebra, same_name=True),
                                   fd.dga, 16)
    got = {k: [str(v) for v in vs] for k, vs in ker.items()}
    want = {8: ["p1^2"], 12: ["p1^3"], 16: ["p1^4"]}
    g = models.build_gamma()
    b4 = models.build_BSO(4)
    kg = cohomology_kernel_of_map(b4, Morphism.from_names(b4, g.algebra, same_name=True),
                                  g.dga, models.GAMMA_MAX)
    return [CheckResult("ker Q[p_1] -> H(F_3//SO(3)) = (p_1^2) through 16", "D(z_1)=p_1^2",
                        got == want, str(got)),
            CheckResult("B_4 -> H(Gamma_3) injective through 12", "d=3 injective",
                        not kg, str({k: [str(v) for v in vs] for k, vs in kg.items()}))]


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "dsq": _dsq,
    "chainmap": _chainmap,
    "products": _products,
    "c1": _c1,
    "mingen-range": _mingen_range,
    "kernel": _kernel,
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        return [r for fn in SUITES.values() for r in fn()]
    try:
        return SUITES[name]()
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
