"""Semi-direct products ``q = l + V`` with an Abelian ideal ``V``.

The contact question for index-1 products reduces to data attached to a
generic ``gamma`` in ``V*``: its stabiliser ``l_gamma`` in ``l`` and the
normaliser ``l_<gamma>`` of the line through it.  :func:`analyze_semidirect`
walks that decision procedure and records each step.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg
from .coadjoint import (
    Sampling,
    _rng,
    classify_element,
    index,
    is_contact_algebra,
)
from .lie import LieAlgebra, Subspace, bracket, coordinate_subspace, is_subalgebra, structure_matrix, subalgebra


class RepresentationError(ValueError):
    pass


@dataclass
class SemidirectDecomposition:
    """``q = levi + ideal`` with ``ideal`` Abelian and ``[levi, ideal] ⊆ ideal``."""

    q: LieAlgebra
    levi: Subspace
    ideal: Subspace
    name: str = ""

    def __post_init__(self):
        q = self.q
        if self.levi.dim + self.ideal.dim != q.dim or (self.levi + self.ideal).dim != q.dim:
            raise ValueError("levi and ideal must span q as a direct sum")
        for a, u in enumerate(self.ideal.basis):
            for v in self.ideal.basis[a + 1:]:
                if any(bracket(q, u, v)):
                    raise ValueError("ideal is not Abelian")
        for x in self.levi.basis:
            for v in self.ideal.basis:
                if not self.ideal.contains(bracket(q, x, v)):
                    raise ValueError("ideal is not stable under levi")
        if not is_subalgebra(q, self.levi):
            raise ValueError("levi is not a subalgebra")

    def to_splitting(self):
        """Index lists for the JSON ``splitting`` field (coordinate subspaces only)."""
        return {"levi": _coordinate_indices(self.levi), "ideal": _coordinate_indices(self.ideal)}


def _coordinate_indices(s):
    idx = []
    for v in s.basis:
        nz = [i for i, x in enumerate(v) if x]
        if len(nz) != 1:
            raise ValueError("not a coordinate subspace")
        idx.append(nz[0])
    return idx


def from_splitting(q, splitting):
    return SemidirectDecomposition(
        q, coordinate_subspace(q, splitting["levi"]), coordinate_subspace(q, splitting["ideal"])
    )


def build_semidirect(l, action, ideal_labels=None, name=None):
    """``l ⋉ V`` for a representation given by matrices ``action[i] = rho(x_i)``.

    Column ``a`` of ``rho(x_i)`` holds the coordinates of ``x_i . v_a``.
    """
    m = len(action[0]) if action else 0
    if len(action) != l.dim:
        raise ValueError("one action matrix per basis element of l")
    act = [[[linalg.to_rat(x) for x in row] for row in mat] for mat in action]
    for i in range(l.dim):
        for j in range(i + 1, l.dim):
            lhs = [[Fraction(0)] * m for _ in range(m)]
            for k, c in l.bracket_basis(i, j).items():
                for r in range(m):
                    for s in range(m):
                        if act[k][r][s]:
                            lhs[r][s] += c * act[k][r][s]
            comm = linalg.mat_mul(act[i], act[j])
            other = linalg.mat_mul(act[j], act[i])
            rhs = [[comm[r][s] - other[r][s] for s in range(m)] for r in range(m)]
            if lhs != rhs:
                raise RepresentationError(f"not a representation at ({i},{j})")
    n = l.dim
    labels = list(l.basis) + list(ideal_labels or [f"v{a + 1}" for a in range(m)])
    br = {}
    for (i, j), coeffs in l.structure_constants().items():
        br[(i, j)] = dict(coeffs)
    for i in range(n):
        for a in range(m):
            col = {n + b: act[i][b][a] for b in range(m) if act[i][b][a]}
            if col:
                br[(i, n + a)] = col
    q = LieAlgebra(labels, br, name=name)
    return SemidirectDecomposition(q, coordinate_subspace(q, range(n)), coordinate_subspace(q, range(n, n + m)))


def _functional_on_ideal(d, gamma):
    """Extend ``gamma`` (coordinates on the ideal basis) to q by zero on levi."""
    # values gamma on the ideal basis and zero on the levi basis
    rows = [list(v) for v in d.ideal.basis] + [list(v) for v in d.levi.basis]
    rhs = list(gamma) + [Fraction(0)] * d.levi.dim
    sol = linalg.solve(rows, rhs)
    return sol


def orbit_tangent(d, gamma_q):
    """``{x . gamma : x in levi}`` restricted to the ideal, as vectors on the ideal basis."""
    q = d.q
    out = []
    for x in d.levi.basis:
        out.append(tuple(-linalg.dot(gamma_q, bracket(q, x, v)) for v in d.ideal.basis))
    return out


def levi_stabiliser(d, gamma_q):
    """``l_gamma = {x in l : gamma([x, V]) = 0}``."""
    q = d.q
    lb = d.levi.basis
    rows = [[linalg.dot(gamma_q, bracket(q, x, v)) for x in lb] for v in d.ideal.basis]
    ker = linalg.kernel(rows, len(lb)) if rows else [linalg.unit_vec(len(lb), i) for i in range(len(lb))]
    return Subspace(q, [_combine(lb, c) for c in ker])


def line_normaliser(d, gamma_q):
    """``l_<gamma> = {x in l : x . gamma in k gamma}``."""
    if not any(gamma_q):
        raise ValueError("gamma must be non-zero")
    q = d.q
    lb = d.levi.basis
    g_on_v = [linalg.dot(gamma_q, v) for v in d.ideal.basis]
    # unknowns: coefficients of x in levi basis, plus scalar c: x.gamma = c gamma
    rows = []
    for v, gv in zip(d.ideal.basis, g_on_v):
        rows.append([-linalg.dot(gamma_q, bracket(q, x, v)) for x in lb] + [-gv])
    ker = linalg.kernel(rows, len(lb) + 1)
    vecs = [_combine(lb, c[:-1]) for c in ker]
    return Subspace(q, [v for v in vecs if any(v)])


def _combine(basis, coeffs):
    n = len(basis[0]) if basis else 0
    out = [Fraction(0)] * n
    for c, b in zip(coeffs, basis):
        if c:
            for k in range(n):
                if b[k]:
                    out[k] += c * b[k]
    return tuple(out)


def sample_gamma(d, rng, sampling):
    """A point of ``V*`` (extended by zero on levi) with maximal orbit dimension."""
    best = None
    for _ in range(sampling.trials):
        g = sampling.point(rng, d.ideal.dim)
        gq = _functional_on_ideal(d, g)
        dim_orbit = linalg.rank(orbit_tangent(d, gq)) if d.levi.dim else 0
        if best is None or dim_orbit > best[0]:
            best = (dim_orbit, gq)
        if dim_orbit == d.ideal.dim:
            break
    return best[1], best[0]


@dataclass
class RaisCheck:
    lhs: int
    rhs: int
    ok: bool
    index_l_gamma: int = 0
    dim_ideal: int = 0
    dim_orbit: int = 0
    failure_bound: float = 0.0

    def __iter__(self):
        yield self.lhs
        yield self.rhs
        yield self.ok


def rais_check(d, rng=None, sampling=Sampling()):
    """Compare ``ind q`` with ``ind l_gamma + dim V - dim L gamma``."""
    rng = _rng(rng)
    res_q = index(d.q, rng=rng, sampling=sampling)
    gq, dim_orbit = sample_gamma(d, rng, sampling)
    lg = levi_stabiliser(d, gq)
    res_lg = index(subalgebra(d.q, lg), rng=rng, sampling=sampling) if lg.dim else None
    ind_lg = res_lg.index if res_lg else 0
    rhs = ind_lg + d.ideal.dim - dim_orbit
    # a non-generic gamma would only lower dim L.gamma; the sampled maximum is
    # subject to the same Schwartz-Zippel bound as the index samples
    bound = max(res_q.failure_bound, res_lg.failure_bound if res_lg else 0.0)
    if dim_orbit < d.ideal.dim:
        bound = max(bound, sampling.miss_probability(d.ideal.dim))
    return RaisCheck(res_q.index, rhs, res_q.index == rhs, ind_lg, d.ideal.dim, dim_orbit, bound)


def principal_element(h, beta):
    """The unique ``s`` with ``ad*(s) beta = beta``, i.e. ``B(beta) s = beta``."""
    b = structure_matrix(h, beta)
    if linalg.rank(b) != h.dim:
        raise ValueError("not a Frobenius point")
    s = linalg.solve(b, [Fraction(x) for x in beta])
    # ad*(s)beta = -beta([s, .])
    for j in range(h.dim):
        val = -linalg.dot(beta, bracket(h, s, linalg.unit_vec(h.dim, j)))
        assert val == beta[j]
    return s


@dataclass
class SemidirectAnalysis:
    gamma: tuple
    case: str  # A | B | neither
    l_gamma: Subspace
    l_line: Optional[Subspace]
    verdict: str  # contact | not-contact | undecided
    chain: list = field(default_factory=list)
    index_l_gamma: Optional[int] = None
    index_l_line: Optional[int] = None
    l_gamma_contact: Optional[bool] = None
    principal: Optional[tuple] = None
    agrees_with_direct: Optional[bool] = None


def analyze_semidirect(d, rng=None, sampling=Sampling(), check=True):
    """Decide contactness of an index-1 semi-direct product via ``l_gamma``.

    Case A (``dim L gamma = dim V - 1``, ``ind l_gamma = 0``): contact iff
    the generic ``L``-orbit on ``V*`` is not conical.  Case B (open orbit,
    ``ind l_gamma = 1``): if ``l_gamma`` is not contact, contact iff
    ``ind l_<gamma> = 0``; if ``l_gamma`` is contact and
    ``ind l_<gamma> != 0``, contact; otherwise contact iff the principal
    element ``s`` of ``l_<gamma>`` has ``ad*(s) gamma != gamma``.

    With ``check`` the verdict is compared with the direct test and a
    disagreement raises ``AssertionError``.
    """
    rng = _rng(rng)
    q = d.q
    ind_q = index(q, rng=rng, sampling=sampling).index
    if ind_q != 1:
        raise ValueError(f"analyze_semidirect needs ind q = 1, got {ind_q}")
    gq, dim_orbit = sample_gamma(d, rng, sampling)
    lg = levi_stabiliser(d, gq)
    lg_alg = subalgebra(q, lg) if lg.dim else None
    ind_lg = index(lg_alg, rng=rng, sampling=sampling).index if lg_alg else 0
    chain = [f"dim V = {d.ideal.dim}, dim L.gamma = {dim_orbit}, dim l_gamma = {lg.dim}, ind l_gamma = {ind_lg}"]
    dv = d.ideal.dim
    if dim_orbit == dv - 1 and ind_lg == 0:
        case = "A"
        tangent = orbit_tangent(d, gq)
        g_on_v = tuple(linalg.dot(gq, v) for v in d.ideal.basis)
        span = linalg.span_basis(tangent, dv)
        conical = linalg.in_span(span, g_on_v)
        verdict = "not-contact" if conical else "contact"
        chain.append(f"case A: generic L-orbit on V* {'is' if conical else 'is not'} conical")
        res = SemidirectAnalysis(gq, case, lg, None, verdict, chain, ind_lg, None)
    elif dim_orbit == dv and ind_lg == 1:
        case = "B"
        line = line_normaliser(d, gq)
        ind_line = index(subalgebra(q, line), rng=rng, sampling=sampling).index
        lg_contact = is_contact_algebra(lg_alg, rng=rng, sampling=sampling, symbolic=True).contact
        chain.append(f"case B: l_gamma {'is' if lg_contact else 'is not'} contact, ind l_<gamma> = {ind_line}")
        principal = None
        if not lg_contact:
            verdict = "contact" if ind_line == 0 else "not-contact"
            chain.append("l_gamma not contact: contact iff ind l_<gamma> = 0")
        elif ind_line != 0:
            verdict = "contact"
            chain.append("l_gamma contact and ind l_<gamma> != 0: contact")
        else:
            h = subalgebra(q, line)
            beta = _frobenius_point(h, rng, sampling)
            s_h = principal_element(h, beta)
            s = _combine(line.basis, s_h)
            fixed = all(
                -linalg.dot(gq, bracket(q, s, v)) == linalg.dot(gq, v) for v in d.ideal.basis
            )
            verdict = "not-contact" if fixed else "contact"
            principal = s
            chain.append(f"principal element s of l_<gamma>: ad*(s)gamma {'=' if fixed else '!='} gamma")
        res = SemidirectAnalysis(gq, case, lg, line, verdict, chain, ind_lg, ind_line, lg_contact, principal)
    else:
        raise ValueError(
            f"V matches neither case A nor case B (dim V = {dv}, dim L.gamma = {dim_orbit}, ind l_gamma = {ind_lg})"
        )
    if check:
        direct = is_contact_algebra(q, rng=rng, sampling=sampling, symbolic=True).contact
        res.agrees_with_direct = direct == (res.verdict == "contact")
        assert res.agrees_with_direct, f"semidirect verdict {res.verdict} disagrees with direct test"
    return res


def _frobenius_point(h, rng, sampling):
    for _ in range(max(sampling.trials, 8)):
        beta = tuple(Fraction(x) for x in sampling.point(rng, h.dim))
        if linalg.rank(structure_matrix(h, beta)) == h.dim:
            return beta
    raise ValueError("no Frobenius point found; l_<gamma> has positive index")


def principal_is_semisimple(h, s):
    kind, _ = classify_element(h, s)
    return kind == "semisimple"
