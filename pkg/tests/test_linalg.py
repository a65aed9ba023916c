"""Exact linear algebra checked against sympy and brute force."""

import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from contactlie import linalg

small = st.integers(min_value=-6, max_value=6)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@st.composite
def any_matrix(draw):
    r = draw(st.integers(1, 6))
    c = draw(st.integers(1, 6))
    return draw(matrices(r, c))


@st.composite
def skew_matrix(draw, max_n=8):
    n = 2 * draw(st.integers(0, max_n // 2))
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = Fraction(draw(small), draw(st.integers(1, 3)))
            m[i][j], m[j][i] = x, -x
    return m


def brute_pfaffian(m):
    """Sum over perfect matchings, each matching signed by its permutation."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n % 2:
        return Fraction(0)
    total = Fraction(0)
    rest = list(range(1, n))
    for k, j in enumerate(rest):
        if not m[0][j]:
            continue
        sub = [x for x in rest if x != j]
        minor = [[m[a][b] for b in sub] for a in sub]
        total += (-1) ** k * m[0][j] * brute_pfaffian(minor)
    return total


@settings(max_examples=60, deadline=None)
@given(any_matrix())
def test_rank_matches_sympy(m):
    assert linalg.rank(m) == sympy.Matrix(m).rank()


@settings(max_examples=60, deadline=None)
@given(any_matrix())
def test_kernel_is_a_basis_of_the_null_space(m):
    ncols = len(m[0])
    ker = linalg.kernel(m, ncols)
    assert len(ker) == ncols - sympy.Matrix(m).rank()
    for v in ker:
        assert all(not linalg.dot(row, v) for row in m)
    assert linalg.rank(ker) == len(ker) if ker else True


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: matrices(n, n)))
def test_determinant_matches_sympy(m):
    assert linalg.determinant(m) == sympy.Matrix(m).det()


@settings(max_examples=60, deadline=None)
@given(skew_matrix())
def test_pfaffian_matches_matchings_and_squares_to_determinant(m):
    pf = linalg.pfaffian(m)
    assert pf == brute_pfaffian(m)
    if m:
        assert pf * pf == linalg.determinant(m)


def test_pfaffian_sign_convention():
    assert linalg.pfaffian([[0, 1], [-1, 0]]) == 1
    assert linalg.pfaffian([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]) == 0
    with pytest.raises(ValueError):
        linalg.pfaffian([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])


def test_pfaffian_rejects_non_skew():
    with pytest.raises(ValueError):
        linalg.pfaffian([[1, 0], [0, 0]])


@settings(max_examples=40, deadline=None)
@given(any_matrix())
def test_integer_bareiss_rank_agrees_with_rational_rank(m):
    assert linalg.int_rank([list(r) for r in m], len(m[0])) == linalg.rank(m)


def test_solve_and_coordinates():
    m = [[2, 1], [1, 3]]
    x = linalg.solve(m, [Fraction(5), Fraction(10)])
    assert list(linalg.mat_vec(m, x)) == [5, 10]
    basis = [(1, 0, 1), (0, 1, 1)]
    assert linalg.coordinates(basis, (2, 3, 5)) == (2, 3)
    assert not linalg.in_span(basis, (0, 0, 1))


def test_intersect_of_planes_is_a_line():
    a = [(1, 0, 0), (0, 1, 0)]
    b = [(0, 1, 0), (0, 0, 1)]
    meet = linalg.intersect(a, b, 3)
    assert len(meet) == 1 and linalg.in_span(meet, (0, 1, 0))


@pytest.mark.parametrize(
    "p, roots",
    [
        ([-2, 1], {Fraction(2)}),
        ([6, -5, 1], {Fraction(2), Fraction(3)}),
        ([1, 0, 1], set()),
        ([-1, 0, 4], {Fraction(1, 2), Fraction(-1, 2)}),
        ([0, 0, 1], {Fraction(0)}),
    ],
)
def test_rational_roots(p, roots):
    found, rest = linalg.rational_roots([Fraction(c) for c in p])
    assert set(found) == roots
    assert not linalg.rational_roots(rest)[0] if len(rest) > 1 else rest == [1]


def _sympy_minpoly(m):
    x = sympy.Symbol("x")
    mm = sympy.Matrix(m)
    n = mm.shape[0]
    # smallest monic divisor of the characteristic polynomial annihilating m
    cp = sympy.factor_list(mm.charpoly(x).as_expr(), x)[1]
    best = None
    for exps in itertools.product(*[range(e + 1) for _, e in cp]):
        cand = sympy.Integer(1)
        for (f, _), k in zip(cp, exps):
            cand *= f**k
        cand = sympy.Poly(cand, x)
        acc = sympy.zeros(n, n)
        for k, c in enumerate(reversed(cand.all_coeffs())):
            acc += c * mm**k
        if acc == sympy.zeros(n, n) and (best is None or cand.degree() < best.degree()):
            best = cand
    return [Fraction(int(c.p), int(c.q)) for c in reversed(best.monic().all_coeffs())]


def test_minimal_polynomial_matches_sympy():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 5)
        kind = rng.random()
        if kind < 0.4:
            # block structure with repeated eigenvalues
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                m[i][i] = rng.choice([0, 1, 2])
                if i + 1 < n and rng.random() < 0.5:
                    m[i][i + 1] = 1
        else:
            m = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        assert linalg.minimal_polynomial(m) == _sympy_minpoly(m)


def test_squarefree():
    assert linalg.is_squarefree([-1, 0, 1])
    assert not linalg.is_squarefree([0, 0, 1])
