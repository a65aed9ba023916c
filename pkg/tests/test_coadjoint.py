"""Coadjoint predicates against independent oracles.

The contact oracle wedges differential forms directly; the index and
orbit oracles use sympy's exact linear algebra.
"""

import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy

from contactlie import coadjoint as co
from contactlie import families as F
from contactlie.lie import bracket, structure_matrix
from contactlie.linalg import unit_vec
from contactlie.poly import MPoly

from conftest import build

SMALL = [
    ("heisenberg", (1,)),
    ("heisenberg", (2,)),
    ("sl", (2,)),
    ("gl", (2,)),
    ("borel_sl3", ()),
    ("dirpr", ()),
    ("qbar", (1, 1)),
    ("rbar", (1, 2)),
    ("k_two_characters", (1, 2)),
    ("k_two_characters", (2, 2)),
    ("sp4_parabolic", ()),
    ("seaweed_sl", (3, "1,2", "3")),
    ("abelian", (3,)),
]


# -- oracles -----------------------------------------------------------------


def wedge(a, b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            if set(ka) & set(kb):
                continue
            merged = ka + kb
            inv = sum(1 for i in range(len(merged)) for j in range(i + 1, len(merged)) if merged[i] > merged[j])
            key = tuple(sorted(merged))
            out[key] = out.get(key, 0) + (-1) ** inv * ca * cb
    return {k: v for k, v in out.items() if v != 0}


def top_coefficient(q, alpha):
    """Coefficient of e_1^ ... ^e_N in (d alpha)^n ^ alpha; d alpha(x, y) = -alpha([x, y])."""
    n = q.dim
    e = [unit_vec(n, i) for i in range(n)]
    omega = {}
    for i, j in combinations(range(n), 2):
        c = -sum(a * b for a, b in zip(alpha, bracket(q, e[i], e[j])))
        if c != 0:
            omega[(i, j)] = c
    form = {(): 1}
    for _ in range(n // 2):
        form = wedge(form, omega)
    form = wedge(form, {(i,): alpha[i] for i in range(n) if alpha[i] != 0})
    return form.get(tuple(range(n)), 0)


def sympy_index(q):
    xs = sympy.symbols(f"x0:{q.dim}")
    m = sympy.zeros(q.dim, q.dim)
    for i in range(q.dim):
        for j in range(q.dim):
            w = bracket(q, unit_vec(q.dim, i), unit_vec(q.dim, j))
            m[i, j] = sum(sympy.Rational(c.numerator, c.denominator) * x for c, x in zip(w, xs))
    return q.dim - m.rank(simplify=True)


def alpha_in_orbit_tangent(q, alpha):
    b = sympy.Matrix(structure_matrix(q, alpha))
    a = sympy.Matrix(alpha)
    return b.rank() == b.row_join(a).rank()


# -- tests -------------------------------------------------------------------


@pytest.mark.parametrize("family, params", SMALL)
def test_index_matches_symbolic_rank_oracle(family, params):
    q, _ = build(family, *params)
    res = co.index(q, rng=random.Random(1))
    assert res.index == sympy_index(q)
    assert res.failure_bound < 1e-15
    assert co.index(q, mode="symbolic", rng=random.Random(2)).index == res.index


@pytest.mark.parametrize("family, params", [fp for fp in SMALL if build(*[fp[0], *fp[1]])[0].dim % 2])
def test_contact_form_test_matches_exterior_algebra(family, params):
    q, _ = build(family, *params)
    rng = random.Random(11)
    for _ in range(4):
        alpha = [Fraction(rng.randint(-4, 4)) for _ in range(q.dim)]
        assert co.is_contact_form(q, alpha) == (top_coefficient(q, alpha) != 0)


@pytest.mark.parametrize("family, params", [("heisenberg", (1,)), ("borel_sl3", ()), ("qbar", (1, 1)), ("dirpr", ())])
def test_contact_semi_invariant_is_proportional_to_the_top_form(family, params):
    q, _ = build(family, *params)
    f = co.contact_semi_invariant(q)
    xs = sympy.symbols(f"x0:{q.dim}")
    oracle = sympy.expand(top_coefficient(q, list(xs)))
    mine = sum(
        sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[x**k for x, k in zip(xs, e)])
        for e, c in f.terms.items()
    )
    if oracle == 0:
        assert f.is_zero()
    else:
        ratio = sympy.simplify(oracle / mine)
        assert ratio.is_number and ratio != 0


@pytest.mark.parametrize("family, params", SMALL)
def test_conical_matches_orbit_tangent_oracle(family, params):
    q, _ = build(family, *params)
    rng = random.Random(4)
    alpha = [Fraction(rng.randint(-50, 50)) for _ in range(q.dim)]
    assert co.is_conical_orbit(q, alpha) == alpha_in_orbit_tangent(q, alpha)


def test_contact_verdicts_and_certificates():
    q = F.heisenberg(1)
    v = co.is_contact_algebra(q, rng=random.Random(0))
    assert v.contact and v.certified and v.method == "witness"
    assert co.is_contact_form(q, v.witness)
    q, _ = build("qbar", 1, 1)
    v = co.is_contact_algebra(q, rng=random.Random(0))
    assert not v.contact and not v.certified and 0 < v.failure_bound < 1e-16
    v = co.is_contact_algebra(q, rng=random.Random(0), symbolic=True)
    assert not v.contact and v.certified and v.method == "symbolic"
    with pytest.raises(ValueError):
        co.is_contact_algebra(F.gl(2))


def test_stable_points():
    sl2 = F.sl(2)
    h = [0] * 3
    h[sl2.index_of("H1")] = 1
    assert co.is_stable_point(sl2, h)
    q, _ = build("qbar", 1, 1)
    res = co.index(q, rng=random.Random(0))
    assert not co.is_stable_point(q, res.witness)


def test_generic_stabiliser_classes():
    assert co.classify_generic_stabiliser(F.sl(2)).kind == "semisimple"
    cls = co.classify_generic_stabiliser(F.heisenberg(1))
    assert cls.central and cls.kind == "semisimple"
    assert co.classify_generic_stabiliser(F.dirpr()[0]).kind == "nilpotent"
    q, _ = build("qbar", 1, 1)
    assert co.classify_generic_stabiliser(q).kind == "nilpotent"
    with pytest.raises(ValueError):
        co.classify_generic_stabiliser(F.gl(2))


def test_fundamental_semi_invariant():
    z = MPoly.var(3, 2)
    assert co.fundamental_semi_invariant(F.heisenberg(1)) == z
    assert co.fundamental_semi_invariant(F.sl(2)).is_constant()
    assert co.fundamental_semi_invariant(F.abelian(2)).is_constant()


def test_sampling_validation_and_bounds():
    with pytest.raises(ValueError):
        co.Sampling(0, 10)
    with pytest.raises(ValueError):
        co.Sampling(3, 1)
    s = co.Sampling(4, 2**20)
    assert s.miss_probability(0) == 0.0
    assert s.miss_probability(3) == pytest.approx((3 / (2**21 + 1)) ** 4)


def test_analyze_report():
    rep = co.analyze(F.sl(2), rng=random.Random(0))
    assert rep.index == 1 and rep.contact and rep.codim2 and rep.stable
    rep = co.analyze(F.heisenberg(1), rng=random.Random(0))
    assert rep.p.to_string(["x", "y", "z"]) == "z"
    assert rep.f.to_string(["x", "y", "z"]) == "z^2"
    assert rep.codim2 is False


def test_index_edge_cases():
    assert co.index(F.abelian(0)).index == 0
    assert co.index(F.abelian(4)).index == 4
    with pytest.raises(ValueError):
        co.index(F.sl(2), mode="bogus")
