"""Bounded-degree semi-invariants, weight relations and the canonical truncation.

The oracle is the Lie-Poisson bracket computed with sympy: ``F`` is a
semi-invariant of weight ``chi`` iff ``{x_i, F} = chi(x_i) F`` for all ``i``.
"""

import random
from fractions import Fraction

import pytest
import sympy

from contactlie import families as F
from contactlie.lie import LieAlgebra, bracket
from contactlie.linalg import unit_vec
from contactlie.poly import MPoly
from contactlie.semiinv import (
    IrrationalWeightError,
    algebraic_independence,
    canonical_truncation,
    invariants_up_to_degree,
    semi_invariants_up_to_degree,
    weight_of,
    weight_relation_and_generator,
)


def poisson_weight(q, poly):
    """Weight of ``poly`` under the Lie-Poisson action, or ``None``."""
    xs = sympy.symbols(f"x0:{q.dim}")
    f = sum(
        sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[x**k for x, k in zip(xs, e)])
        for e, c in poly.terms.items()
    )
    weight = []
    for i in range(q.dim):
        pb = 0
        for j in range(q.dim):
            w = bracket(q, unit_vec(q.dim, i), unit_vec(q.dim, j))
            lin = sum(sympy.Rational(c.numerator, c.denominator) * x for c, x in zip(w, xs))
            pb += lin * sympy.diff(f, xs[j])
        ratio = sympy.cancel(pb / f)
        if not ratio.is_number:
            return None
        weight.append(Fraction(int(ratio.p), int(ratio.q)))
    return tuple(weight)


@pytest.mark.parametrize(
    "q",
    [F.borel_sl3(), F.sl(2), F.heisenberg(1), F.k_two_characters(1, 2)[0], F.dirpr()[0], F.sp4_parabolic()],
    ids=["borel", "sl2", "heis", "k12", "dirpr", "sp4"],
)
def test_found_polynomials_are_semi_invariants(q):
    for s in semi_invariants_up_to_degree(q, 2):
        assert s.poly.is_homogeneous() and s.poly.degree() == s.degree
        assert poisson_weight(q, s.poly) == tuple(s.weight)
        assert weight_of(q, s.poly) == tuple(s.weight)


def test_borel_generators():
    q = F.borel_sl3()
    sis = semi_invariants_up_to_degree(q, 2)
    assert [s.to_string(q.basis) for s in sis] == ["z", "h*z + 3*x*y"]
    assert invariants_up_to_degree(q, 4) == []


def test_casimir_of_sl2():
    q = F.sl(2)
    (c,) = invariants_up_to_degree(q, 3)
    assert c.degree == 2 and c.is_invariant()
    assert c.to_string(q.basis) == "4*E12*E21 + H1^2"


def test_heisenberg_centre_is_an_invariant():
    q = F.heisenberg(2)
    (z,) = invariants_up_to_degree(q, 2)
    assert z.to_string(q.basis) == "z"


def test_weight_of_rejects_non_semi_invariants():
    q = F.heisenberg(1)
    assert weight_of(q, MPoly.var(3, 0)) is None


def test_irrational_weights_are_reported():
    # s acts on span{x, y} by a matrix with eigenvalues +-sqrt(2)
    q = LieAlgebra(["s", "x", "y"], {(0, 1): {2: 2}, (0, 2): {1: 1}})
    with pytest.raises(IrrationalWeightError, match="irrational weight unsupported"):
        semi_invariants_up_to_degree(q, 1)


def test_weight_relation_orientation():
    q, _ = F.k_two_characters(1, 2)
    rel = weight_relation_and_generator(semi_invariants_up_to_degree(q, 2))
    assert rel.coefficients == [2, -1]
    assert rel.numerator.to_string(q.basis) == "x^2"
    assert rel.denominator.to_string(q.basis) == "y"
    assert (rel.a, rel.b) == (1, 2)


def test_weight_relation_gives_a_regular_invariant():
    q, _ = F.k_two_characters(1, -1)
    rel = weight_relation_and_generator(semi_invariants_up_to_degree(q, 1))
    assert rel.invariant is not None and rel.invariant.to_string(q.basis) == "x*y"
    assert poisson_weight(q, rel.invariant) == (0, 0, 0)


def test_weight_relation_errors():
    with pytest.raises(ValueError):
        weight_relation_and_generator([])
    q = F.borel_sl3()
    (z,) = semi_invariants_up_to_degree(q, 1)
    with pytest.raises(ValueError, match="no relation"):
        weight_relation_and_generator([z])


def test_borel_truncation():
    q = F.borel_sl3()
    tr = canonical_truncation(q, 2)
    assert tr.subalgebra.dim == 4 and tr.m == 2
    assert tr.is_ideal and tr.abelian_quotient
    assert "degree bound 2" in tr.note
    assert not tr.subalgebra.contains(unit_vec(5, q.index_of("h1")))


def test_algebraic_independence():
    q = F.borel_sl3()
    sis = semi_invariants_up_to_degree(q, 2)
    assert algebraic_independence(sis, rng=random.Random(0))
    z = sis[0].poly
    assert not algebraic_independence([z, z * z], rng=random.Random(0))
