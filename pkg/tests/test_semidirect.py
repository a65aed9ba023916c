"""Semi-direct products: construction, the Rais index formula and the
reduction of the contact question to stabilisers in the Levi factor."""

import random
from fractions import Fraction

import pytest

from contactlie import coadjoint as co
from contactlie import families as F
from contactlie.lie import bracket, coordinate_subspace, subalgebra
from contactlie.linalg import dot, unit_vec
from contactlie.semidirect import (
    RepresentationError,
    SemidirectDecomposition,
    analyze_semidirect,
    build_semidirect,
    from_splitting,
    levi_stabiliser,
    line_normaliser,
    principal_element,
    principal_is_semisimple,
    rais_check,
    sample_gamma,
)

from conftest import build


def test_build_semidirect_rejects_non_representations():
    l = F.sl(2)
    bad = [[[0, 1], [0, 0]], [[0, 0], [1, 0]], [[1, 0], [0, 1]]]
    with pytest.raises(RepresentationError):
        build_semidirect(l, bad)
    with pytest.raises(ValueError):
        build_semidirect(l, bad[:2])


def test_decomposition_validation():
    q = F.heisenberg(1)
    x, y, z = (coordinate_subspace(q, [i]) for i in range(3))
    with pytest.raises(ValueError, match="Abelian"):
        SemidirectDecomposition(q, z, coordinate_subspace(q, [0, 1]))
    with pytest.raises(ValueError, match="direct sum"):
        SemidirectDecomposition(q, x, y)
    with pytest.raises(ValueError, match="stable"):
        SemidirectDecomposition(q, coordinate_subspace(q, [1, 2]), x)


def test_splitting_round_trip():
    q, decs = F.dirpr()
    d = decs["levi"]
    back = from_splitting(q, d.to_splitting())
    assert back.levi == d.levi and back.ideal == d.ideal


def test_levi_stabiliser_definition():
    q, decs = build("q", 1, 2)
    d = decs["levi"]
    gamma, _ = sample_gamma(d, random.Random(3), co.Sampling())
    lg = levi_stabiliser(d, gamma)
    for u in lg.basis:
        assert d.levi.contains(u)
        assert all(not dot(gamma, bracket(q, u, v)) for v in d.ideal.basis)
    # nothing outside l_gamma kills gamma on V
    for i in range(q.dim):
        e = unit_vec(q.dim, i)
        if d.levi.contains(e) and not lg.contains(e):
            assert any(dot(gamma, bracket(q, e, v)) for v in d.ideal.basis)


def test_line_normaliser_needs_nonzero_gamma():
    q, decs = F.k_two_characters(1, 2)
    with pytest.raises(ValueError):
        line_normaliser(decs["torus"], (0, 0, 0))


@pytest.mark.parametrize(
    "family, params",
    [("q", (1, 1)), ("q", (1, 2)), ("qbar", (1, 1)), ("r", (1, 2)), ("rbar", (1, 2)),
     ("dirpr", ()), ("heisenberg", (1,)), ("k_two_characters", (2, 3)), ("sl2_m_copies", (2,))],
)
def test_rais_formula(family, params):
    q, decs = build(family, *params)
    assert decs
    for name, d in decs.items():
        lhs, rhs, ok = rais_check(d, rng=random.Random(name))
        assert ok, (name, lhs, rhs)


def test_principal_element_of_the_two_dimensional_frobenius_algebra():
    h = F.frobenius_2d()
    s = principal_element(h, (0, 1))
    assert s == (-1, 0)
    assert bracket(h, s, (0, 1)) == (0, -1)
    assert principal_is_semisimple(h, s)
    with pytest.raises(ValueError):
        principal_element(h, (1, 0))


@pytest.mark.parametrize("lam, mu", [(1, 1), (1, 2), (2, 3), (3, 3), (-1, 1)])
def test_two_characters(lam, mu):
    q, decs = F.k_two_characters(lam, mu)
    direct = co.is_contact_algebra(q, rng=random.Random(0), symbolic=True)
    assert direct.contact == (lam != mu)
    torus = analyze_semidirect(decs["torus"], rng=random.Random(1))
    line = analyze_semidirect(decs["line"], rng=random.Random(2))
    assert torus.case == "A" and line.case == "B"
    for res in (torus, line):
        assert (res.verdict == "contact") == (lam != mu)
        assert res.agrees_with_direct
    if lam == mu:
        assert line.principal is not None


def test_analyze_semidirect_needs_index_one():
    q, decs = build("q", 1, 1)
    with pytest.raises(ValueError, match="ind q = 1"):
        analyze_semidirect(decs["levi"])


def test_heisenberg_case_b():
    q, decs = F.heisenberg_split(1)
    res = analyze_semidirect(decs["x"], rng=random.Random(0))
    assert res.verdict == "contact" and res.agrees_with_direct


def test_qbar_sw1_is_contact_through_the_reduction():
    q, decs = build("qbar", 2, 4)
    for name, d in decs.items():
        res = analyze_semidirect(d, rng=random.Random(name))
        assert res.case == "B" and res.verdict == "contact"


def test_qbar_one_three_principal_element_step():
    q, decs = build("qbar", 1, 3)
    res = analyze_semidirect(decs["sw1"], rng=random.Random(0))
    assert res.verdict == "not-contact"
    assert res.index_l_line == 0 and res.principal is not None


def test_stabiliser_cross_check_matches_r_family():
    for a, b in [(1, 2), (2, 3)]:
        lhs, rhs = F.stabiliser_cross_check(a, b, rng=random.Random(0))
        assert lhs == rhs


def test_dirpr_rais_data():
    q, decs = F.dirpr()
    d = decs["levi"]
    r = rais_check(d, rng=random.Random(0))
    assert (r.lhs, r.index_l_gamma, r.dim_ideal, r.dim_orbit) == (1, 1, 2, 2)
    gamma, _ = sample_gamma(d, random.Random(0), co.Sampling())
    lg = levi_stabiliser(d, gamma)
    assert lg.dim == 1
    # l_gamma is spanned by a nilpotent element of sl_2
    assert co.classify_element(q, lg.basis[0])[0] == "nilpotent"
    assert line_normaliser(d, gamma).dim == lg.dim + 1


def test_principal_element_of_the_sl2_borel():
    sl2 = F.sl(2)
    b = subalgebra(sl2, coordinate_subspace(sl2, [sl2.index_of("E12"), sl2.index_of("H1")]), labels=["e", "h"])
    s = principal_element(b, (1, 0))
    assert s == (0, Fraction(-1, 2))
