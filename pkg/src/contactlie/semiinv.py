"""Bounded-degree symmetric semi-invariants and what they determine.

``S(q)`` is identified with polynomials on ``q*`` whose variables are the
basis vectors of ``q``.  A basis element acts as the derivation

    x_i . F = sum_j [x_i, x_j] dF/dx_j.

Semi-invariants of degree ``d`` are joint eigenvectors of this action on
``S^d(q)``.  They are killed by ``[q, q]``, so the search first computes
``K_d = {F : [q,q].F = 0}`` and then splits it into joint eigenspaces of a
complement of ``[q, q]``, which acts on ``K_d`` by commuting operators.
Everything is exact; results are complete only up to the degree bound.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd, lcm
from typing import Optional

from . import linalg
from .lie import Subspace, derived_and_center, is_ideal, is_subalgebra
from .poly import MPoly

DEFAULT_DEGREE = 4
MAX_MONOMIALS = 3000


class IrrationalWeightError(ValueError):
    pass


def monomials(n, d):
    """Exponent tuples of degree ``d`` in ``n`` variables, grlex-descending."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=lambda e: (sum(e), e), reverse=True)
    return out


class _Degree:
    """The action of ``q`` on ``S^d(q)`` in the monomial basis."""

    def __init__(self, q, d):
        n = q.dim
        self.q, self.d = q, d
        self.monos = monomials(n, d)
        self.pos = {e: k for k, e in enumerate(self.monos)}
        # act[i]: dict column -> dict row -> coefficient
        self.act = []
        for i in range(n):
            cols = {}
            for col, e in enumerate(self.monos):
                out = {}
                for j in range(n):
                    if not e[j] or i == j:
                        continue
                    br = _bracket_coeffs(q, i, j)
                    if not br:
                        continue
                    base = list(e)
                    base[j] -= 1
                    for k, c in br.items():
                        f = list(base)
                        f[k] += 1
                        row = self.pos[tuple(f)]
                        out[row] = out.get(row, 0) + e[j] * c
                out = {r: v for r, v in out.items() if v}
                if out:
                    cols[col] = out
            self.act.append(cols)

    @property
    def size(self):
        return len(self.monos)

    def apply(self, element, vec):
        """``element . F`` for ``element`` in coordinates on the basis of ``q``."""
        out = [Fraction(0)] * self.size
        for i, a in enumerate(element):
            if not a:
                continue
            for col, v in enumerate(vec):
                if not v:
                    continue
                for row, c in self.act[i].get(col, {}).items():
                    out[row] += a * v * c
        return out

    def matrix(self, element):
        m = [[Fraction(0)] * self.size for _ in range(self.size)]
        for i, a in enumerate(element):
            if not a:
                continue
            for col, rows in self.act[i].items():
                for row, c in rows.items():
                    m[row][col] += a * c
        return m

    def to_poly(self, vec):
        return MPoly(self.q.dim, {e: Fraction(v) for e, v in zip(self.monos, vec) if v})

    def to_vec(self, poly):
        v = [Fraction(0)] * self.size
        for e, c in poly.terms.items():
            v[self.pos[e]] = Fraction(c)
        return v


def _bracket_coeffs(q, i, j):
    if i < j:
        return q.bracket_basis(i, j)
    return {k: -c for k, c in q.bracket_basis(j, i).items()}


@dataclass
class SemiInvariant:
    """Homogeneous ``poly`` with ``x . poly = weight(x) poly`` for every basis ``x``."""

    poly: MPoly
    weight: tuple
    degree: int

    def is_invariant(self):
        return not any(self.weight)

    def to_string(self, labels):
        return self.poly.to_string(labels)


def weight_of(q, poly):
    """The weight of a semi-invariant, or ``None`` if ``poly`` is not one."""
    d = poly.degree()
    deg = _Degree(q, d)
    vec = deg.to_vec(poly)
    lead = next(k for k, v in enumerate(vec) if v)
    weight = []
    for i in range(q.dim):
        img = deg.apply(linalg.unit_vec(q.dim, i), vec)
        chi = img[lead] / vec[lead]
        if any(img[k] != chi * vec[k] for k in range(deg.size)):
            return None
        weight.append(chi)
    return tuple(weight)


def _restrict(mat, basis):
    """Matrix of ``mat`` on the invariant subspace spanned by the echelon ``basis``."""
    cols = []
    for b in basis:
        img = linalg.mat_vec(mat, b)
        c = linalg.coordinates(basis, img)
        if c is None:
            raise AssertionError("subspace is not invariant")
        cols.append(c)
    return linalg.transpose(cols) if cols else []


def _lift(basis, coords_list):
    n = len(basis[0])
    out = []
    for c in coords_list:
        v = [Fraction(0)] * n
        for a, b in zip(c, basis):
            if a:
                for k in range(n):
                    if b[k]:
                        v[k] += a * b[k]
        out.append(v)
    return out


def _split(mat, basis):
    """Eigenspaces of ``mat`` restricted to ``span(basis)``, by rational eigenvalue."""
    r = _restrict(mat, basis)
    k = len(basis)
    mp = linalg.minimal_polynomial(r)
    roots, rest = linalg.rational_roots(mp)
    if len(rest) > 1:
        raise IrrationalWeightError(
            f"irrational weight unsupported: minimal polynomial {[str(c) for c in mp]}"
        )
    spaces = []
    for lam in roots:
        shifted = [[r[i][j] - (lam if i == j else 0) for j in range(k)] for i in range(k)]
        ker = linalg.kernel(shifted, k)
        if ker:
            spaces.append((lam, linalg.span_basis(_lift(basis, ker), len(basis[0]))))
    return spaces


def joint_eigenspaces(q, d, derived=None):
    """``[(weight, echelon basis)]`` for the semi-invariants of degree ``d``."""
    deg = _Degree(q, d)
    if deg.size > MAX_MONOMIALS:
        raise ValueError(f"S^{d} has {deg.size} monomials, above the budget of {MAX_MONOMIALS}")
    if derived is None:
        derived, _ = derived_and_center(q)
    rows = []
    for y in derived.basis:
        rows.extend(deg.matrix(y))
    if rows:
        basis = linalg.kernel(rows, deg.size)
    else:
        basis = [linalg.unit_vec(deg.size, k) for k in range(deg.size)]
    if not basis:
        return deg, []
    complement = [
        linalg.unit_vec(q.dim, i) for i in range(q.dim) if not derived.contains(linalg.unit_vec(q.dim, i))
    ]
    # complement of [q,q] among basis vectors: greedily extend
    chosen = []
    span = Subspace(q, list(derived.basis))
    for v in complement:
        if not span.contains(v):
            chosen.append(v)
            span = span + Subspace(q, [v])
    pieces = [basis]
    for x in chosen:
        mat = deg.matrix(x)
        new = []
        for piece in pieces:
            for _, sub in _split(mat, piece):
                new.append(sub)
        pieces = new
    result = []
    for piece in pieces:
        w = _weight_from_vec(q, deg, piece[0])
        result.append((w, piece))
    result.sort(key=lambda t: t[0])
    return deg, result


def _weight_from_vec(q, deg, vec):
    lead = next(k for k, v in enumerate(vec) if v)
    w = []
    for i in range(q.dim):
        img = deg.apply(linalg.unit_vec(q.dim, i), vec)
        chi = img[lead] / vec[lead]
        assert all(img[k] == chi * vec[k] for k in range(deg.size))
        w.append(chi)
    return tuple(w)


def _products_of_degree(gens, d):
    """All products of earlier generators with total degree ``d``, with weights."""
    out = []

    def rec(start, remaining, poly, weight):
        if remaining == 0:
            out.append((poly, weight))
            return
        for k in range(start, len(gens)):
            g = gens[k]
            if g.degree <= remaining:
                rec(k, remaining - g.degree, poly * g.poly, tuple(a + b for a, b in zip(weight, g.weight)))

    n = gens[0].poly.nvars if gens else 0
    if gens:
        rec(0, d, MPoly.const(n, 1), tuple(Fraction(0) for _ in range(n)))
    return out


def semi_invariants_up_to_degree(q, D=DEFAULT_DEGREE):
    """New semi-invariant generators of degree ``1..D``.

    For each degree and each weight, products of generators found in lower
    degrees are spanned first; the generators reported are an extension of
    that span to the whole weight space, chosen from its echelon basis and
    scaled canonically.
    """
    if D < 1:
        raise ValueError("degree bound must be >= 1")
    derived, _ = derived_and_center(q)
    gens = []
    for d in range(1, D + 1):
        deg, spaces = joint_eigenspaces(q, d, derived)
        prods = _products_of_degree(gens, d)
        for w, basis in spaces:
            assert all(not linalg.dot(w, y) for y in derived.basis)
            span = linalg.span_basis([deg.to_vec(p) for p, pw in prods if pw == w], deg.size)
            for b in basis:
                if not linalg.in_span(span, b):
                    poly = deg.to_poly(b).canonical()
                    gens.append(SemiInvariant(poly, w, d))
                    span = linalg.span_basis(span + [deg.to_vec(poly)], deg.size)
    return gens


def invariants_up_to_degree(q, D=DEFAULT_DEGREE):
    """Generators among the found semi-invariants that are genuine invariants."""
    return [s for s in semi_invariants_up_to_degree(q, D) if s.is_invariant()]


@dataclass
class WeightRelation:
    """``sum_{left} c_i chi_i = sum_{right} c_i chi_i`` with positive ``c_i``.

    ``coefficients`` holds the signed relation (left positive).  With an
    empty right side the product ``prod H_i^{c_i}`` is a regular invariant;
    otherwise ``numerator / denominator`` is a rational invariant.
    """

    coefficients: list
    left: list
    right: list
    invariant: Optional[MPoly] = None
    numerator: Optional[MPoly] = None
    denominator: Optional[MPoly] = None
    generators: list = field(default_factory=list)

    @property
    def a(self):
        return len(self.left)

    @property
    def b(self):
        return len(self.left) + len(self.right)


def _primitive_integer(v):
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


def weight_relation_and_generator(sis):
    """Minimal integer relation among the weights and the invariant it yields."""
    if not sis:
        raise ValueError("no semi-invariants given")
    n = len(sis[0].weight)
    cols = [list(s.weight) for s in sis]
    mat = [[cols[j][i] for j in range(len(sis))] for i in range(n)]
    ker = linalg.kernel(mat, len(sis))
    if not ker:
        raise ValueError("weights are linearly independent: no relation")
    if len(ker) > 1:
        raise ValueError(f"relation space has dimension {len(ker)}, expected 1")
    c = _primitive_integer(ker[0])
    pos = [i for i, x in enumerate(c) if x > 0]
    neg = [i for i, x in enumerate(c) if x < 0]
    deg = lambda idx, sign: sum(abs(c[i]) * sis[i].degree for i in idx)
    flip = len(neg) > len(pos) or (len(neg) == len(pos) and deg(neg, -1) > deg(pos, 1))
    if flip:
        c = [-x for x in c]
        pos, neg = neg, pos
    nv = sis[0].poly.nvars

    def prod(idx):
        p = MPoly.const(nv, 1)
        for i in idx:
            p = p * sis[i].poly ** abs(c[i])
        return p

    rel = WeightRelation(c, pos, neg, generators=list(sis))
    if not neg:
        rel.invariant = prod(pos)
    else:
        rel.numerator, rel.denominator = prod(pos), prod(neg)
    return rel


@dataclass
class TruncationResult:
    subalgebra: Subspace
    m: int
    degree_bound: int
    weights: list
    is_ideal: bool
    abelian_quotient: bool

    @property
    def note(self):
        return f"relative to degree bound {self.degree_bound}"


def canonical_truncation(q, D=DEFAULT_DEGREE, sis=None):
    """``q_tr(D)``: common kernel of the weights of semi-invariants of degree ``<= D``."""
    if sis is None:
        sis = semi_invariants_up_to_degree(q, D)
    weights = [s.weight for s in sis]
    if weights:
        ker = linalg.kernel([list(w) for w in weights], q.dim)
    else:
        ker = [linalg.unit_vec(q.dim, i) for i in range(q.dim)]
    sub = Subspace(q, ker)
    derived, _ = derived_and_center(q)
    return TruncationResult(
        sub,
        len(sis),
        D,
        weights,
        is_subalgebra(q, sub) and is_ideal(q, sub),
        sub.contains_subspace(derived),
    )


def algebraic_independence(polys, rng=None, trials=3, bound=2**20):
    """Whether the Jacobian of ``polys`` has full rank at a random point.

    A full-rank sample certifies independence; a deficient rank at every
    sample is reported as dependence (one-sided Monte Carlo).
    """
    polys = [p.poly if isinstance(p, SemiInvariant) else p for p in polys]
    if not polys:
        return True
    rng = rng if rng is not None else random.Random(0)
    n = polys[0].nvars
    if len(polys) > n:
        return False
    derivs = [[p.derivative(i) for i in range(n)] for p in polys]
    for _ in range(trials):
        pt = [rng.randint(-bound, bound) for _ in range(n)]
        jac = [[d.evaluate(pt) for d in row] for row in derivs]
        if linalg.rank(jac) == len(polys):
            return True
    return False
