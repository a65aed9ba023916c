"""Coadjoint-orbit predicates: index, stabilisers, contact forms, stability.

Generic properties are decided by evaluating at random integer points.
Positive findings (a rank attained, a contact form found) are exact
certificates; negative findings are one-sided Monte Carlo verdicts whose
Schwartz-Zippel failure bound is recorded alongside.  Every randomized
function takes an explicit :class:`random.Random`.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg
from .lie import (
    Subspace,
    ad_matrix,
    bracket,
    integer_structure_matrix,
    structure_matrix,
    symbolic_structure_matrix,
)
from .poly import MPoly, SymbolicPfaffians, poly_gcd, poly_matrix_rank, symbolic_pfaffian

DEFAULT_TRIALS = 4
DEFAULT_BOUND = 2**20
SYMBOLIC_INDEX_LIMIT = 20
SYMBOLIC_F_LIMIT = 11
SYMBOLIC_P_LIMIT = 11
MAX_SUB_PFAFFIANS = 500


@dataclass(frozen=True)
class Sampling:
    """How generic points are drawn: ``trials`` points, coordinates in ``[-bound, bound]``."""

    trials: int = DEFAULT_TRIALS
    bound: int = DEFAULT_BOUND

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.bound < 2:
            raise ValueError("bound must be >= 2")

    def point(self, rng, n):
        return tuple(rng.randint(-self.bound, self.bound) for _ in range(n))

    def miss_probability(self, degree):
        """Schwartz-Zippel bound for all trials missing a degree-``degree`` hypersurface."""
        if degree <= 0:
            return 0.0
        p = degree / (2 * self.bound + 1)
        return min(1.0, p) ** self.trials


def _rng(rng):
    return rng if rng is not None else random.Random(0)


def _int_rank_at(q, alpha):
    rows, _ = integer_structure_matrix(q, alpha)
    return linalg.int_rank(rows, q.dim)


@dataclass
class IndexResult:
    index: int
    witness: tuple
    method: str
    failure_bound: float

    def __iter__(self):
        yield self.index
        yield self.witness


def index(q, mode="probabilistic", rng=None, sampling=Sampling(), symbolic_limit=SYMBOLIC_INDEX_LIMIT):
    """Index of ``q``: ``dim q - max rank B(alpha)``.

    ``mode`` is ``"probabilistic"``, ``"symbolic"`` (rank of ``B(x)`` over
    Q(x), exact) or ``"auto"`` (symbolic when ``dim <= symbolic_limit``).
    The witness is a sampled point at which the maximal rank is attained.
    """
    rng = _rng(rng)
    n = q.dim
    if n == 0:
        return IndexResult(0, (), "exact", 0.0)
    if mode == "auto":
        mode = "symbolic" if n <= symbolic_limit else "probabilistic"
    if mode == "symbolic":
        if n > symbolic_limit:
            raise ValueError("symbolic size limit")
        r = poly_matrix_rank(symbolic_structure_matrix(q))
        witness = None
        for _ in range(64):
            alpha = sampling.point(rng, n)
            if _int_rank_at(q, alpha) == r:
                witness = alpha
                break
        if witness is None:
            raise RuntimeError("no sampled point attains the generic rank")
        return IndexResult(n - r, tuple(Fraction(a) for a in witness), "symbolic", 0.0)
    if mode != "probabilistic":
        raise ValueError(f"unknown mode {mode!r}")
    best, witness = -1, None
    top = n - n % 2
    for _ in range(sampling.trials):
        alpha = sampling.point(rng, n)
        r = _int_rank_at(q, alpha)
        if r > best:
            best, witness = r, alpha
        if best == top:
            break
    bound = 0.0 if best == top else sampling.miss_probability(n // 2)
    return IndexResult(n - best, tuple(Fraction(a) for a in witness), "probabilistic", bound)


def stabiliser(q, alpha):
    """``q_alpha = ker B(alpha)``."""
    _, ker = linalg.rank_kernel(structure_matrix(q, alpha), q.dim)
    return Subspace(q, ker)


def is_conical_orbit(q, alpha):
    """``alpha`` lies in ``ad*(q).alpha`` iff ``alpha`` vanishes on ``q_alpha``."""
    return all(not linalg.dot(alpha, u) for u in stabiliser(q, alpha).basis)


def augmented_matrix(q, alpha):
    """``B(alpha)`` bordered by the column ``alpha`` and the row ``-alpha``."""
    b = structure_matrix(q, alpha)
    m = [row + [Fraction(alpha[i])] for i, row in enumerate(b)]
    m.append([-Fraction(a) for a in alpha] + [Fraction(0)])
    return m


def is_contact_form(q, alpha):
    """Whether ``(wedge^n d alpha) wedge alpha != 0``, for ``dim q = 2n+1``.

    Decided as ``Pf(M(alpha)) != 0`` for the bordered matrix ``M(alpha)``,
    i.e. ``M(alpha)`` invertible.
    """
    n = q.dim
    if n % 2 == 0:
        raise ValueError("contact undefined in even dimension")
    alpha = tuple(Fraction(a) for a in alpha)
    m = augmented_matrix(q, alpha)
    result = linalg.rank(m) == n + 1
    if linalg.rank(structure_matrix(q, alpha)) == n - 1:
        # regular point of an index-1 algebra: contact iff alpha(q_alpha) != 0
        assert result == (not is_conical_orbit(q, alpha))
    return result


@dataclass
class ContactVerdict:
    contact: bool
    certified: bool
    method: str
    witness: Optional[tuple] = None
    failure_bound: float = 0.0
    f: Optional[MPoly] = None

    def __bool__(self):
        return self.contact


def is_contact_algebra(q, rng=None, sampling=Sampling(), symbolic=False, symbolic_limit=SYMBOLIC_F_LIMIT):
    """Decide whether ``q`` is contact.

    A sampled contact form is an exact certificate.  If every sample fails,
    the negative verdict holds with probability at least
    ``1 - ((n+1)/(2M+1))^t``; with ``symbolic=True`` and ``dim q`` within
    the limit it is certified by ``f == 0`` instead.
    """
    n = q.dim
    if n % 2 == 0:
        raise ValueError("contact undefined in even dimension")
    rng = _rng(rng)
    for _ in range(sampling.trials):
        alpha = sampling.point(rng, n)
        if _contact_at_int(q, alpha):
            return ContactVerdict(True, True, "witness", tuple(Fraction(a) for a in alpha))
    if symbolic and n <= symbolic_limit:
        f = contact_semi_invariant(q, limit=symbolic_limit)
        if f.is_zero():
            return ContactVerdict(False, True, "symbolic", f=f)
        # a nonzero f guarantees contact forms exist; find one
        for _ in range(64):
            alpha = sampling.point(rng, n)
            if f.evaluate(alpha):
                return ContactVerdict(True, True, "witness", tuple(Fraction(a) for a in alpha), f=f)
        raise RuntimeError("f is nonzero but no contact form was sampled")
    return ContactVerdict(False, False, "probabilistic", failure_bound=sampling.miss_probability((n + 1) // 2))


def _contact_at_int(q, alpha):
    n = q.dim
    rows, den = integer_structure_matrix(q, alpha)
    for i in range(n):
        rows[i].append(alpha[i] * den)
    rows.append([-a * den for a in alpha] + [0])
    return linalg.int_rank(rows, n + 1) == n + 1


def is_stable_point(q, alpha):
    """Tauvel-Yu test: ``q_alpha`` meets ``[q, q_alpha]`` only in zero."""
    stab = stabiliser(q, alpha)
    n = q.dim
    image = [bracket(q, linalg.unit_vec(n, i), u) for u in stab.basis for i in range(n)]
    img = Subspace(q, image)
    return stab.intersect(img).dim == 0


@dataclass
class StabiliserClass:
    kind: str  # nilpotent | semisimple | mixed
    central: bool
    witness: tuple
    element: tuple
    minimal_polynomial: list = field(default_factory=list)


def classify_element(q, u):
    """Classify ``ad(u)`` by its minimal polynomial."""
    mp = linalg.minimal_polynomial(ad_matrix(q, u))
    if linalg.is_squarefree(mp):
        kind = "semisimple"
    elif not any(mp[:-1]):
        kind = "nilpotent"
    else:
        kind = "mixed"
    return kind, mp


def classify_generic_stabiliser(q, rng=None, sampling=Sampling()):
    """Type of ``ad(u)`` for ``q_alpha = k u`` at a regular point (index 1 only).

    ``ad(u) = 0`` is squarefree and reported as ``semisimple`` with
    ``central=True``.
    """
    res = index(q, rng=rng, sampling=sampling)
    if res.index != 1:
        raise ValueError(f"generic stabiliser classification needs index 1, got {res.index}")
    stab = stabiliser(q, res.witness)
    (u,) = stab.basis
    kind, mp = classify_element(q, u)
    central = not any(any(row) for row in ad_matrix(q, u))
    return StabiliserClass(kind, central, res.witness, u, mp)


def fundamental_semi_invariant(q, limit=SYMBOLIC_P_LIMIT, max_subsets=MAX_SUB_PFAFFIANS, rng=None):
    """``p``: canonical gcd of the principal ``2d x 2d`` sub-Pfaffians of ``B(x)``.

    ``d = (dim q - ind q) / 2``.
    """
    from math import comb
    from itertools import combinations

    n = q.dim
    if n > limit:
        raise ValueError("symbolic size limit")
    ind = index(q, mode="auto", rng=rng).index
    d = (n - ind) // 2
    if d == 0:
        return MPoly.const(n, 1)
    if comb(n, 2 * d) > max_subsets:
        raise ValueError("symbolic size limit")
    pf = SymbolicPfaffians(symbolic_structure_matrix(q), limit=limit)
    subs = [pf.of(s) for s in combinations(range(n), 2 * d)]
    return poly_gcd(subs)


def contact_semi_invariant(q, limit=SYMBOLIC_F_LIMIT):
    """``f`` with ``(wedge^n pi) wedge v = f d_1 ^ ... ^ d_{2n+1}``, canonically scaled.

    Zero exactly when ``q`` is not contact.
    """
    n = q.dim
    if n % 2 == 0:
        raise ValueError("contact undefined in even dimension")
    if n > limit:
        raise ValueError("symbolic size limit")
    b = symbolic_structure_matrix(q)
    m = [row + [MPoly.var(n, i)] for i, row in enumerate(b)]
    m.append([-MPoly.var(n, i) for i in range(n)] + [MPoly.zero(n)])
    return symbolic_pfaffian(m, limit=limit + 1).canonical()


@dataclass
class CoadjointReport:
    dim: int
    index: int
    method: str
    witness_alpha: tuple
    index_failure_bound: float
    contact: Optional[bool] = None
    contact_certified: Optional[bool] = None
    contact_method: Optional[str] = None
    contact_witness: Optional[tuple] = None
    contact_failure_bound: Optional[float] = None
    stable: Optional[bool] = None
    generic_conical: Optional[bool] = None
    stabiliser_class: str = "n/a"
    stabiliser_central: Optional[bool] = None
    p: Optional[MPoly] = None
    f: Optional[MPoly] = None
    codim2: Optional[bool] = None


def analyze(q, rng=None, sampling=Sampling(), mode="probabilistic", symbolic=True):
    """Aggregate the coadjoint predicates into a :class:`CoadjointReport`.

    Symbolic quantities (``p``, ``f``) are computed when ``symbolic`` is set
    and the dimension is within the corresponding limits.
    """
    rng = _rng(rng)
    res = index(q, mode=mode, rng=rng, sampling=sampling)
    rep = CoadjointReport(q.dim, res.index, res.method, res.witness, res.failure_bound)
    alpha = res.witness
    if q.dim:
        rep.generic_conical = is_conical_orbit(q, alpha)
        rep.stable = is_stable_point(q, alpha)
    if q.dim % 2 == 1:
        v = is_contact_algebra(q, rng=rng, sampling=sampling, symbolic=symbolic)
        rep.contact = v.contact
        rep.contact_certified = v.certified
        rep.contact_method = v.method
        rep.contact_witness = v.witness
        rep.contact_failure_bound = v.failure_bound
        if symbolic and q.dim <= SYMBOLIC_F_LIMIT:
            rep.f = v.f if v.f is not None else contact_semi_invariant(q)
    if res.index == 1:
        cls = classify_generic_stabiliser(q, rng=rng, sampling=sampling)
        rep.stabiliser_class = cls.kind
        rep.stabiliser_central = cls.central
    if symbolic and q.dim <= SYMBOLIC_P_LIMIT:
        try:
            rep.p = fundamental_semi_invariant(q, rng=rng)
        except ValueError:
            rep.p = None
        if rep.p is not None:
            rep.codim2 = rep.p.is_constant()
    return rep
