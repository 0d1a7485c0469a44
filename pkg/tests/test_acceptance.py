"""Acceptance gate.  Every check is exact (integer dimensions, rational identities)."""

import json

import pytest

from gfw import models
from gfw.algebra import GradedAlgebra, Morphism
from gfw.checks import c1_oracle_pair, series_coefficients
from gfw.cli import main
from gfw.cohomology import (betti_table, classes_independent, cohomology_kernel_of_map,
                            is_coboundary, verify_chain_map, verify_d_squared)
from gfw.ideals import chern_ring, min_gen_degree_range_check, truncation_kernel_min_gens


def _cli_json(capsys, argv):
    assert main(argv) == 0
    return json.loads(capsys.readouterr().out)


# 1 ------------------------------------------------------------------------

GAMMA_EXPECTED = {0: 1, 1: 0, 2: 0, 3: 0, 4: 6, 5: 0, 6: 1, 7: 0,
                  8: 15, 9: 3, 10: 4, 11: 3, 12: 31}


@pytest.mark.criterion(1)
def test_gamma_betti_via_cli(capsys):
    out = _cli_json(capsys, ["gamma", "betti", "--d", "3", "--max-degree", "12"])
    got = {int(k): v for k, v in out["betti"].items()}
    assert {k: got.get(k, 0) for k in range(13)} == GAMMA_EXPECTED


@pytest.mark.criterion(1)
def test_gamma_betti_via_library():
    table = betti_table(models.build_gamma().dga, 12)
    assert table.dims == GAMMA_EXPECTED


# 2 ------------------------------------------------------------------------

WU3_EXPECTED = {k: 0 for k in range(16)}
WU3_EXPECTED.update({0: 1, 7: 4, 9: 1, 10: 3, 11: 1, 12: 4, 14: 1, 15: 3})


@pytest.mark.criterion(2)
def test_wedge_via_cli(capsys):
    out = _cli_json(capsys, ["wu", "betti", "--d", "3", "--max-degree", "15"])
    got = {int(k): v for k, v in out["betti"].items()}
    assert {k: got.get(k, 0) for k in range(16)} == WU3_EXPECTED


@pytest.mark.criterion(2)
def test_wedge_via_library():
    assert betti_table(models.build_WU(3).dga, 15).dims == WU3_EXPECTED


# 3 ------------------------------------------------------------------------

@pytest.mark.criterion(3)
def test_kernel_ideal(capsys):
    out = _cli_json(capsys, ["kernel", "--model", "fdso", "--d", "3", "--max-degree", "16"])
    assert out["kernel"] == {"8": ["p1^2"], "12": ["p1^3"], "16": ["p1^4"]}


@pytest.mark.criterion(3)
def test_kernel_generator_and_survivor():
    fd = models.build_FdSOd(3)
    p1 = fd.parse("p1")
    assert is_coboundary(fd.dga, p1) is None
    for n in (2, 3, 4):
        prim = is_coboundary(fd.dga, p1 ** n)
        assert prim is not None and fd.d(prim) == p1 ** n
    b3 = models.build_BSO(3)
    ker = cohomology_kernel_of_map(b3, Morphism.from_names(b3, fd.algebra, same_name=True),
                                   fd.dga, 16)
    assert sorted(ker) == [8, 12, 16]
    assert all(len(v) == 1 for v in ker.values())


# 4 ------------------------------------------------------------------------

def _zbar1(gamma):
    # the closed degree-4 partner of the generator with D(z) = p1^2 + ...
    return -gamma.parse("xb2")


@pytest.mark.criterion(4)
def test_relation_is_exact():
    g = models.build_gamma()
    rel = g.parse("p1^2") - g.parse("e") * _zbar1(g)
    prim = is_coboundary(g.dga, rel)
    assert prim is not None and g.d(prim) == rel


@pytest.mark.criterion(4)
def test_standard_monomials_independent():
    g = models.build_gamma()
    e, p1, zb = g.parse("e"), g.parse("p1"), _zbar1(g)
    for x in (e, p1, zb):
        assert not g.d(x)
    for k in range(0, 13, 4):
        n = k // 4
        # normal forms modulo p1^2 = e*zbar1: at most one p1
        classes = [e ** a * p1 ** b * zb ** (n - a - b)
                   for b in (0, 1) for a in range(n - b + 1)]
        assert len(classes) == 2 * n + 1
        assert classes_independent(g.dga, k, classes)


@pytest.mark.criterion(4)
def test_injectivity_of_b4():
    g = models.build_gamma()
    b4 = models.build_BSO(4)
    f = Morphism.from_names(b4, g.algebra, same_name=True)
    assert cohomology_kernel_of_map(b4, f, g.dga, 12) == {}


# 5 ------------------------------------------------------------------------

@pytest.mark.criterion(5)
def test_c1_oracle_pair():
    betti, hilb, series = c1_oracle_pair(20)
    assert [betti[k] for k in range(21)] == [hilb[k] for k in range(21)]
    assert [betti[k] for k in range(21)] == series
    assert [betti[k] for k in range(0, 21, 4)] == [1, 3, 5, 7, 9, 11]


@pytest.mark.criterion(5)
def test_series_closed_form():
    assert series_coefficients({0: 1, 8: -1}, [4, 4, 4], 40)[::4] == [2 * j + 1 for j in range(11)]


# 6 ------------------------------------------------------------------------

@pytest.mark.criterion(6)
@pytest.mark.parametrize("d", range(1, 7))
def test_dsq_wu(d):
    b = models.build_WU(d)
    assert verify_d_squared(b.dga, b.cutoff).passed


@pytest.mark.criterion(6)
@pytest.mark.parametrize("d", range(2, 7))
def test_dsq_fdso(d):
    b = models.build_FdSOd(d)
    assert verify_d_squared(b.dga, b.cutoff).passed


@pytest.mark.criterion(6)
def test_dsq_relative_and_gamma():
    rel = models.build_relative_D()
    assert verify_d_squared(rel.dga, 15).passed
    assert verify_d_squared(models.build_gamma().dga, 13).passed


@pytest.mark.criterion(6)
def test_psi_chain_map():
    rep = verify_chain_map(models.psi_morphism(), models.build_relative_D().dga,
                           models.build_FdSOd(3).dga, 15)
    assert rep.passed
    assert rep.checked == len(models.build_relative_D().algebra.generators)


@pytest.mark.criterion(6)
def test_phi_products():
    phi = models.phi_morphism()
    wu = models.build_WU(3)
    singles = [f"x{i}" for i in range(1, 18)]
    for a in range(len(singles)):
        for b in range(a, len(singles)):
            prod = phi.on(singles[a]) * phi.on(singles[b])
            if (a, b) == (0, 1):
                assert prod == wu.parse("-c1*c2*h2*h3")
            else:
                assert not prod, (singles[a], singles[b])
    target = wu.parse("-c1*c2*h2*h3")
    assert wu.d(wu.parse("-c2*h1*h2*h3")) == target
    found = is_coboundary(wu.dga, target)
    assert found is not None and wu.d(found) == target


# 7 ------------------------------------------------------------------------

@pytest.mark.criterion(7)
@pytest.mark.parametrize("d", range(1, 7))
def test_mingen_range(d):
    assert min_gen_degree_range_check(d)
    degs = truncation_kernel_min_gens(chern_ring(d), 2 * d).degrees()
    assert min(degs) == 2 * d + 2 and max(degs) == 4 * d


@pytest.mark.criterion(7)
def test_mingen_range_via_cli(capsys):
    for d in range(1, 7):
        out = _cli_json(capsys, ["ideal", "mingens", "--d", str(d)])
        degs = sorted(int(k) for k in out["mingens"])
        assert degs[0] == 2 * d + 2 and degs[-1] == 4 * d
