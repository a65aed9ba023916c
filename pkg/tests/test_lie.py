"""Structure constants, subspaces and the JSON algebra format."""

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from contactlie.lie import (
    JacobiError,
    LieAlgebra,
    Subspace,
    ad_matrix,
    bracket,
    derived_and_center,
    derived_series_dims,
    from_json,
    is_ideal,
    is_subalgebra,
    lower_central_dims,
    structure_matrix,
    subalgebra,
    to_json,
)
from contactlie import families as F
from contactlie.linalg import unit_vec


def dense_jacobi_ok(n, table):
    """Jacobi identity on basis triples from a dense structure tensor."""
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j), coeffs in table.items():
        for k, v in coeffs.items():
            c[i][j][k] += v
            c[j][i][k] -= v

    def br(u, v):
        return [sum(u[i] * v[j] * c[i][j][k] for i in range(n) for j in range(n)) for k in range(n)]

    e = [[Fraction(int(i == k)) for k in range(n)] for i in range(n)]
    for a, b, d in combinations(range(n), 3):
        s = [x + y + z for x, y, z in zip(br(e[a], br(e[b], e[d])), br(e[b], br(e[d], e[a])), br(e[d], br(e[a], e[b])))]
        if any(s):
            return False
    return True


@st.composite
def bracket_tables(draw):
    n = draw(st.integers(2, 4))
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                k = draw(st.integers(0, n - 1))
                table[(i, j)] = {k: Fraction(draw(st.integers(-2, 2)))}
    return n, table


@settings(max_examples=150, deadline=None)
@given(bracket_tables())
def test_jacobi_check_matches_dense_oracle(data):
    n, table = data
    ok = dense_jacobi_ok(n, table)
    try:
        LieAlgebra([f"e{i}" for i in range(n)], table)
        built = True
    except JacobiError:
        built = False
    assert built == ok


def test_jacobi_error_reports_triple():
    with pytest.raises(JacobiError) as info:
        LieAlgebra(["a", "b", "c"], {(0, 1): {1: 1}, (0, 2): {2: 1}, (1, 2): {0: 1}})
    assert info.value.triple == (0, 1, 2)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        LieAlgebra(["a", "a"], {})
    with pytest.raises(ValueError):
        LieAlgebra(["a", "b"], {(0, 5): {0: 1}})
    with pytest.raises(ValueError):
        LieAlgebra(["a", "b"], {(0, 1): {1: 1}, (1, 0): {1: 1}})


def test_bracket_is_antisymmetric_and_bilinear():
    q = F.sl(3)
    u = tuple(Fraction(i - 3) for i in range(q.dim))
    v = tuple(Fraction((i * i) % 5) for i in range(q.dim))
    assert bracket(q, u, v) == tuple(-x for x in bracket(q, v, u))
    w = tuple(2 * a + b for a, b in zip(u, v))
    lhs = bracket(q, w, v)
    assert lhs == tuple(2 * x for x in bracket(q, u, v))


def test_structure_matrix_is_skew_and_ad_is_a_derivation():
    q = F.borel_sl3()
    b = structure_matrix(q, (1, 2, 3, 4, 5))
    assert all(b[i][j] == -b[j][i] for i in range(q.dim) for j in range(q.dim))
    h = unit_vec(q.dim, q.index_of("h"))
    x = unit_vec(q.dim, q.index_of("x"))
    ad_h = ad_matrix(q, h)
    assert [row[q.index_of("x")] for row in ad_h] == list(bracket(q, h, x))


@pytest.mark.parametrize(
    "family, params, derived, lower, center",
    [
        ("heisenberg", (1,), [3, 1, 0], [3, 1, 0], 1),
        ("sl", (2,), [3, 3], [3, 3], 0),
        ("gl", (2,), [4, 3, 3], [4, 3, 3], 1),
        ("borel_sl3", (), [5, 3, 1, 0], [5, 3, 3], 0),
    ],
)
def test_series_and_center(family, params, derived, lower, center):
    q, _ = F.construct(F.FamilySpec(family, [str(p) for p in params]))
    assert derived_series_dims(q) == derived
    assert lower_central_dims(q) == lower
    assert derived_and_center(q)[1].dim == center


def test_subalgebra_and_ideal():
    q = F.heisenberg(1)
    z = Subspace(q, [unit_vec(3, q.index_of("z"))])
    assert is_ideal(q, z) and is_subalgebra(q, z)
    xy = Subspace(q, [unit_vec(3, 0), unit_vec(3, 1)])
    assert not is_subalgebra(q, xy)
    with pytest.raises(ValueError):
        subalgebra(q, xy)
    sub = subalgebra(F.sl(2), Subspace(F.sl(2), [unit_vec(3, 0), unit_vec(3, 2)]))
    assert sub.dim == 2 and not sub.is_abelian()


def test_json_round_trip_is_exact():
    q = F.borel_sl3()
    text = to_json(q, {"levi": [0], "ideal": [1]})
    back, splitting = from_json(text)
    assert back == q
    assert splitting == {"levi": [0], "ideal": [1]}
    assert to_json(back, splitting) == text


def test_json_rejects_bad_files():
    with pytest.raises(ValueError):
        from_json('{"dim": 2, "basis": ["a"], "brackets": []}')
    with pytest.raises(ValueError):
        from_json('{"dim": 2, "basis": ["a", "b"], "brackets": [{"i": 1, "j": 0, "c": {"0": "1"}}]}')
    with pytest.raises(JacobiError):
        from_json(
            '{"dim": 3, "basis": ["a", "b", "c"], "brackets": ['
            '{"i": 0, "j": 1, "c": {"1": "1"}}, {"i": 0, "j": 2, "c": {"2": "1"}}, {"i": 1, "j": 2, "c": {"0": "1"}}]}'
        )
