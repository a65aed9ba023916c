"""Regression suites over the named families.

A suite is a list of *cells*; each cell builds one algebra, computes one
quantity and compares it with the expected value exactly.  Cells are
independent, carry their own derived seed, and can run in worker
processes; results are merged back in cell order.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from . import coadjoint as co
from . import families as F
from . import linalg
from .lie import bracket, subalgebra, vector_string
from .semidirect import analyze_semidirect, principal_element, rais_check
from .semiinv import (
    canonical_truncation,
    semi_invariants_up_to_degree,
    weight_relation_and_generator,
)

SW1_QBAR = [(2, 4), (4, 2), (2, 8), (8, 2), (4, 6), (6, 4)]
SW1_RBAR = [(2, 2), (4, 2), (2, 6)]
NOTC_QBAR = [(1, 1), (1, 3), (1, 5)]
EXK_PAIRS = [(1, 1), (1, 2), (2, 3), (3, 3)]


@dataclass(frozen=True)
class Cell:
    kind: str
    instance: str
    family: str
    params: tuple = ()
    expected: object = None


@dataclass
class VerifyResult:
    suite: str
    cases: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c["status"] == "pass" for c in self.cases)

    @property
    def max_failure_bound(self):
        return max((c.get("failure_bound", 0.0) for c in self.cases), default=0.0)

    def to_dict(self):
        return {
            "suite": self.suite,
            "passed": self.passed,
            "max_failure_bound": self.max_failure_bound,
            "cases": self.cases,
        }


def _build(cell):
    return F.construct(F.FamilySpec(cell.family, list(cell.params)))


def _label(family, params):
    return f"{family}({','.join(str(p) for p in params)})"


# ---------------------------------------------------------------------------
# cell kinds


def _cell_index(cell, rng, sampling):
    q, _ = _build(cell)
    r = co.index(q, rng=rng, sampling=sampling)
    return r.index, r.failure_bound


def _cell_contact_certified(cell, rng, sampling):
    q, _ = _build(cell)
    ind = co.index(q, rng=rng, sampling=sampling)
    v = co.is_contact_algebra(q, rng=rng, sampling=sampling)
    return {"index": ind.index, "contact": v.contact, "certified": v.certified}, ind.failure_bound


def _cell_not_contact(cell, rng, sampling):
    q, _ = _build(cell)
    ind = co.index(q, rng=rng, sampling=sampling)
    v = co.is_contact_algebra(q, rng=rng, sampling=sampling, symbolic=True)
    out = {"index": ind.index, "contact": v.contact}
    return out, max(ind.failure_bound, v.failure_bound)


def _cell_semidirect(cell, rng, sampling):
    q, decs = _build(cell)
    direct = co.is_contact_algebra(q, rng=rng, sampling=sampling, symbolic=True)
    verdicts = {}
    for name, d in sorted(decs.items()):
        verdicts[name] = analyze_semidirect(d, rng=rng, sampling=sampling).verdict == "contact"
    return {"direct": direct.contact, **verdicts}, direct.failure_bound


def _cell_principal(cell, rng, sampling):
    h = F.frobenius_2d()
    s = principal_element(h, (0, 1))
    sx = bracket(h, s, (0, 1))
    return {"s": [str(c) for c in s], "[s,x]": [str(c) for c in sx]}, 0.0


def equivalence_data(q, rng, sampling):
    """Contact verdict, generic non-conicity, generic stability, stabiliser type."""
    ind = co.index(q, rng=rng, sampling=sampling)
    alpha = ind.witness
    contact = co.is_contact_algebra(q, rng=rng, sampling=sampling)
    nonconical = not co.is_conical_orbit(q, alpha)
    stable = co.is_stable_point(q, alpha)
    out = {"index": ind.index, "contact": contact.contact, "nonconical": nonconical, "stable": stable}
    if not contact.contact:
        out["stabiliser"] = co.classify_generic_stabiliser(q, rng=rng, sampling=sampling).kind
    return out, max(ind.failure_bound, contact.failure_bound)


def _cell_equivalence(cell, rng, sampling):
    q, _ = _build(cell)
    data, bound = equivalence_data(q, rng, sampling)
    ok = data["index"] == 1 and data["contact"] == data["nonconical"] == data["stable"]
    if not data["contact"]:
        ok = ok and data["stabiliser"] == "nilpotent"
    return ("agree" if ok else f"disagree {data}"), bound


def _cell_rais(cell, rng, sampling):
    q, decs = _build(cell)
    out, bound = {}, 0.0
    for name, d in sorted(decs.items()):
        r = rais_check(d, rng=rng, sampling=sampling)
        out[name] = r.ok
        bound = max(bound, r.failure_bound)
    return out, bound


def _cell_dirpr(cell, rng, sampling):
    q, _ = _build(cell)
    alpha = [0] * q.dim
    alpha[q.index_of("E12")] = 1
    alpha[q.index_of("y")] = 1
    stab = co.stabiliser(q, alpha)
    (u,) = stab.basis
    return {
        "stabiliser": vector_string(q, u),
        "alpha(u)": str(linalg.dot(alpha, u)),
        "conical": co.is_conical_orbit(q, alpha),
        "stable": co.is_stable_point(q, alpha),
    }, 0.0


def _cell_heisenberg(cell, rng, sampling):
    q, _ = _build(cell)
    p = co.fundamental_semi_invariant(q, rng=rng)
    f = co.contact_semi_invariant(q)
    return {"p": p.to_string(q.basis), "f": f.to_string(q.basis)}, 0.0


def _cell_borel(cell, rng, sampling):
    q = F.borel_sl3()
    sis = semi_invariants_up_to_degree(q, 2)
    rel = weight_relation_and_generator(sis)
    inv4 = [s for s in semi_invariants_up_to_degree(q, 4) if s.is_invariant()]
    f = co.contact_semi_invariant(q)
    prod = sis[0].poly * sis[1].poly
    return {
        "generators": [s.to_string(q.basis) for s in sis],
        "p": co.fundamental_semi_invariant(q, rng=rng).to_string(q.basis),
        "f_over_product": _quotient_string(f, prod, q.basis),
        "rational": f"({rel.numerator.to_string(q.basis)}) / ({rel.denominator.to_string(q.basis)})",
        "invariants_deg4": len(inv4),
    }, 0.0


def _quotient_string(f, g, labels):
    quo = f.divide_exact(g)
    return quo.to_string(labels) if quo is not None else "not divisible"


def _cell_sp4(cell, rng, sampling):
    q = F.sp4_parabolic()
    v = co.is_contact_algebra(q, rng=rng, sampling=sampling)
    p = co.fundamental_semi_invariant(q, rng=rng)
    f = co.contact_semi_invariant(q)
    lin = [s for s in semi_invariants_up_to_degree(q, 1)]
    z = lin[0].poly
    h2 = f.divide_exact(z)
    return {
        "contact": v.contact and v.certified,
        "p": p.to_string(q.basis),
        "z": z.to_string(q.basis),
        "deg_H2": h2.degree() if h2 is not None else None,
    }, 0.0


def _cell_truncation(cell, rng, sampling):
    q = F.borel_sl3()
    tr = canonical_truncation(q, 2)
    qtr = subalgebra(q, tr.subalgebra, name="borel_tr")
    res = co.index(qtr, rng=rng, sampling=sampling)
    out = {"dim": tr.subalgebra.dim, "index": res.index, "m": tr.m}
    bound = res.failure_bound
    for k in (1, 2, 3):
        res = co.index(F.takiff(qtr, k), rng=rng, sampling=sampling)
        out[f"takiff{k}"] = res.index
        bound = max(bound, res.failure_bound)
    return out, bound


def _cell_modes(cell, rng, sampling):
    q, _ = _build(cell)
    res = co.index(q, mode="probabilistic", rng=rng, sampling=sampling)
    a = res.index
    b = co.index(q, mode="symbolic", rng=rng, sampling=sampling).index
    return ("agree" if a == b else f"probabilistic {a} != symbolic {b}"), res.failure_bound


KINDS = {
    "index": _cell_index,
    "contact-certified": _cell_contact_certified,
    "not-contact": _cell_not_contact,
    "semidirect": _cell_semidirect,
    "principal": _cell_principal,
    "equivalence": _cell_equivalence,
    "rais": _cell_rais,
    "dirpr": _cell_dirpr,
    "heisenberg": _cell_heisenberg,
    "borel": _cell_borel,
    "sp4": _cell_sp4,
    "truncation": _cell_truncation,
    "modes": _cell_modes,
}


def cell_seed(seed, cell):
    return f"{seed}:{cell.kind}:{cell.instance}"


def run_cell(cell, seed=0, trials=co.DEFAULT_TRIALS, bound=co.DEFAULT_BOUND):
    rng = random.Random(cell_seed(seed, cell))
    sampling = co.Sampling(trials, bound)
    try:
        computed, fb = KINDS[cell.kind](cell, rng, sampling)
    except Exception as exc:  # reported as a failing case
        computed, fb = f"error: {exc}", 0.0
    return {
        "instance": cell.instance,
        "expected": cell.expected,
        "computed": computed,
        "status": "pass" if computed == cell.expected else "fail",
        "failure_bound": fb,
    }


# ---------------------------------------------------------------------------
# suites


def _t_ind(max_ab=5):
    cells = []
    for a in range(max_ab + 1):
        for b in range(max_ab + 1):
            if a == b == 0:
                continue
            cells.append(Cell("index", _label("q", (a, b)), "q", (a, b), gcd(2 * a, a + b)))
            cells.append(Cell("index", _label("r", (a, b)), "r", (a, b), gcd(2 * a, b)))
    return cells


def _bar_shift(max_ab=5):
    cells = []
    for a in range(max_ab + 1):
        for b in range(max_ab + 1):
            if a == b == 0:
                continue
            cells.append(Cell("index", _label("qbar", (a, b)), "qbar", (a, b), gcd(2 * a, a + b) - 1))
            if b >= 1:
                cells.append(Cell("index", _label("rbar", (a, b)), "rbar", (a, b), gcd(2 * a, b) - 1))
    return cells


def _sw1():
    exp = {"index": 1, "contact": True, "certified": True}
    cells = [Cell("contact-certified", _label("qbar", p), "qbar", p, exp) for p in SW1_QBAR]
    cells += [Cell("contact-certified", _label("rbar", p), "rbar", p, exp) for p in SW1_RBAR]
    return cells


def _notc():
    cells = [Cell("not-contact", _label("qbar", p), "qbar", p, {"index": 1, "contact": False}) for p in NOTC_QBAR]
    cells.append(Cell("not-contact", _label("rbar", (1, 2)), "rbar", (1, 2), {"index": 1, "contact": True}))
    return cells


def _ex_k():
    cells = []
    for lam, mu in EXK_PAIRS:
        c = lam != mu
        cells.append(
            Cell("semidirect", _label("k_two_characters", (lam, mu)), "k_two_characters", (lam, mu),
                 {"direct": c, "line": c, "torus": c})
        )
    cells.append(Cell("principal", "aff1 principal element", "aff1", (), {"s": ["-1", "0"], "[s,x]": ["0", "-1"]}))
    return cells


def equivalence_instances():
    """Index-1 instances: the contact examples, the non-contact family and the small examples."""
    inst = [("qbar", p) for p in SW1_QBAR] + [("rbar", p) for p in SW1_RBAR]
    inst += [("qbar", p) for p in NOTC_QBAR] + [("rbar", (1, 2))]
    inst += [("k_two_characters", p) for p in EXK_PAIRS]
    inst += [("heisenberg", (n,)) for n in range(1, 5)]
    inst += [("sp4_parabolic", ()), ("dirpr", ()), ("borel_sl3", ()), ("sl", (2,))]
    return inst


def _equivalence(families="all"):
    wanted = None if families in (None, "all") else set(families.split(","))
    cells = []
    for fam, p in equivalence_instances():
        label = _label(fam, p)
        if wanted is None or fam in wanted or label in wanted:
            cells.append(Cell("equivalence", label, fam, p, "agree"))
    return cells


def decomposition_instances():
    inst = [("q", (a, b)) for a, b in [(1, 1), (1, 2), (2, 3), (2, 2)]]
    inst += [("qbar", (a, b)) for a, b in [(1, 1), (1, 3), (2, 4)]]
    inst += [("r", (1, 2)), ("r", (2, 1)), ("rbar", (1, 2)), ("rbar", (2, 2))]
    inst += [("k_two_characters", p) for p in EXK_PAIRS]
    inst += [("dirpr", ()), ("heisenberg", (1,)), ("sl2_m_copies", (4,)), ("sl_plus_torus_4copies", (0,))]
    return inst


def _rais():
    cells = []
    for fam, p in decomposition_instances():
        q, decs = F.construct(F.FamilySpec(fam, list(p)))
        cells.append(Cell("rais", _label(fam, p), fam, p, {name: True for name in sorted(decs)}))
    return cells


def _examples():
    cells = [
        Cell("dirpr", "dirpr", "dirpr", (), {"stabiliser": "E12 + 2*y", "alpha(u)": "3", "conical": False, "stable": True}),
        Cell("borel", "borel_sl3", "borel_sl3", (), {
            "generators": ["z", "h*z + 3*x*y"],
            "p": "1",
            "f_over_product": "1",
            "rational": "(h*z + 3*x*y) / (z)",
            "invariants_deg4": 0,
        }),
        Cell("sp4", "sp4_parabolic", "sp4_parabolic", (), {"contact": True, "p": "1", "z": "X14", "deg_H2": 3}),
    ]
    for n in range(1, 5):
        cells.append(Cell("heisenberg", _label("heisenberg", (n,)), "heisenberg", (n,),
                          {"p": "z" if n == 1 else f"z^{n}", "f": f"z^{n + 1}"}))
    return cells


def _truncation():
    return [Cell("truncation", "borel_sl3 truncation", "borel_sl3", (),
                 {"dim": 4, "index": 2, "m": 2, "takiff1": 2, "takiff2": 4, "takiff3": 6})]


def _not_free():
    return [
        Cell("index", "sl2_m_copies(4)", "sl2_m_copies", (4,), 5),
        Cell("index", "sl_plus_torus_4copies(0)", "sl_plus_torus_4copies", (0,), 1),
        # literal (sl_4 + 4k) x M_4: generic Levi stabiliser is a 3-dim torus
        Cell("index", "sl_plus_torus_4copies(1)", "sl_plus_torus_4copies", (1,), 3),
    ]


def mode_instances():
    inst = [("heisenberg", (n,)) for n in range(1, 6)]
    inst += [("sl", (2,)), ("sl", (3,)), ("gl", (2,)), ("gl", (3,)), ("borel_sl3", ()), ("sp4_parabolic", ())]
    inst += [("seaweed_sl", (3, "1,1,1", "3")), ("seaweed_sl", (3, "1,2", "3")), ("seaweed_sl", (4, "2,2", "1,3"))]
    inst += [("q", (1, 1)), ("qbar", (1, 1)), ("q", (1, 2)), ("qbar", (1, 2)), ("r", (1, 1)), ("rbar", (1, 1)), ("r", (1, 2)), ("rbar", (1, 2)), ("r", (2, 0))]
    inst += [("k_two_characters", p) for p in EXK_PAIRS]
    inst += [("dirpr", ()), ("sl2_m_copies", (2,)), ("abelian", (3,)), ("takiff", (2, "sl", 2))]
    return inst


def _modes():
    return [Cell("modes", _label(f, p), f, p, "agree") for f, p in mode_instances()]


SUITES = {
    "t-ind": lambda o: _t_ind(o.get("max", 5)),
    "bar-shift": lambda o: _bar_shift(o.get("max", 5)),
    "sw1": lambda o: _sw1(),
    "notc": lambda o: _notc(),
    "ex-k": lambda o: _ex_k(),
    "equivalence": lambda o: _equivalence(o.get("families", "all")),
    "rais": lambda o: _rais(),
    "examples": lambda o: _examples(),
    "truncation": lambda o: _truncation(),
    "not-free": lambda o: _not_free(),
    "modes": lambda o: _modes(),
}


def suite_cells(name, **options):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    return SUITES[name](options)


def _run_star(args):
    return run_cell(*args)


def run_suite(name, seed=0, trials=co.DEFAULT_TRIALS, bound=co.DEFAULT_BOUND, jobs=1, **options):
    cells = suite_cells(name, **options)
    args = [(c, seed, trials, bound) for c in cells]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cases = list(pool.map(_run_star, args))
    else:
        cases = [run_cell(*a) for a in args]
    return VerifyResult(name, cases)
