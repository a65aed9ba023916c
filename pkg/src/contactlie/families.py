"""Constructors for the algebras used throughout the library.

Most families are realised inside a matrix model.  Elements are sparse
maps from *unit keys* (a block name plus a row and a column) to
rationals, and a family supplies a bracket rule for pairs of units.  The
chosen basis is a list of such sparse elements; structure constants are
read off by expressing each bracket in that basis, and closure is checked
exactly.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import linalg
from .lie import LieAlgebra, coordinate_subspace
from .semidirect import SemidirectDecomposition, build_semidirect


class FamilyError(ValueError):
    pass


# ---------------------------------------------------------------------------
# sparse element engine


def _add_into(acc, elem, c=1):
    for k, v in elem.items():
        nv = acc.get(k, 0) + c * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


class _Coordinates:
    """Reads coordinates of sparse elements in a fixed basis.

    Basis elements that are a single unit not shared with any other basis
    element are read off directly; the remaining ones (typically a few
    diagonal combinations) are handled by a small dense solve.
    """

    def __init__(self, basis):
        self.basis = basis
        usage = {}
        for b in basis:
            for k in b:
                usage[k] = usage.get(k, 0) + 1
        self.direct = {}
        rest = []
        for idx, b in enumerate(basis):
            if len(b) == 1:
                (k, c), = b.items()
                if usage[k] == 1:
                    self.direct[k] = (idx, Fraction(c))
                    continue
            rest.append(idx)
        self.rest = rest
        keys = sorted({k for idx in rest for k in basis[idx]}, key=repr)
        self.rest_keys = keys
        if rest:
            m = [[Fraction(basis[idx].get(k, 0)) for idx in rest] for k in keys]
            _, piv = linalg.rref(linalg.transpose(m), len(keys))
            self.piv_keys = [keys[p] for p in piv]
            if len(piv) != len(rest):
                raise FamilyError("basis is linearly dependent")
            square = [[Fraction(basis[idx].get(k, 0)) for idx in rest] for k in self.piv_keys]
            self.inverse_cols = [linalg.solve(square, linalg.unit_vec(len(rest), i)) for i in range(len(rest))]
        else:
            self.piv_keys = []
            self.inverse_cols = []

    def __call__(self, elem):
        coords = {}
        for k, v in elem.items():
            hit = self.direct.get(k)
            if hit is not None:
                idx, c = hit
                coords[idx] = coords.get(idx, 0) + Fraction(v) / c
        if self.rest:
            rhs = [Fraction(elem.get(k, 0)) for k in self.piv_keys]
            for i, col in enumerate(self.inverse_cols):
                if rhs[i]:
                    for r, idx in enumerate(self.rest):
                        if col[r]:
                            coords[idx] = coords.get(idx, 0) + rhs[i] * col[r]
        check = {}
        for idx, c in coords.items():
            _add_into(check, self.basis[idx], c)
        clean = {k: v for k, v in elem.items() if v}
        if check != clean:
            raise FamilyError("bracket leaves the span of the basis")
        return {idx: c for idx, c in coords.items() if c}


def _sparse_bracket(rule, u, v):
    out = {}
    for k1, c1 in u.items():
        for k2, c2 in v.items():
            r = rule(k1, k2)
            if r:
                _add_into(out, r, c1 * c2)
    return out


def algebra_from_rule(labels, basis, rule, name=None):
    """Validated :class:`LieAlgebra` spanned by ``basis`` under ``rule``."""
    coords = _Coordinates(basis)
    br = {}
    n = len(basis)
    for i in range(n):
        for j in range(i + 1, n):
            b = _sparse_bracket(rule, basis[i], basis[j])
            if b:
                c = coords(b)
                if c:
                    br[(i, j)] = c
    return LieAlgebra(labels, br, name=name)


def _matrix_rule(k1, k2):
    """Commutator of matrix units ``('E', i, j)``."""
    _, i, j = k1
    _, k, l = k2
    out = {}
    if j == k:
        out[("E", i, l)] = 1
    if l == i:
        key = ("E", k, j)
        out[key] = out.get(key, 0) - 1
        if not out[key]:
            del out[key]
    return out


def matrix_algebra(labels, mats, name=None):
    """Lie algebra spanned by the given square matrices (closed under commutator)."""
    basis = []
    for m in mats:
        basis.append({("E", i, j): Fraction(x) for i, row in enumerate(m) for j, x in enumerate(row) if x})
    return algebra_from_rule(labels, basis, _matrix_rule, name=name)


def _unit(key):
    return {key: 1}


def _diag_trace_zero(keys):
    """``E_k - E_last`` for a list of diagonal unit keys."""
    last = keys[-1]
    return [{k: 1, last: -1} for k in keys[:-1]]


def _sub(i):
    return str(i + 1)


# ---------------------------------------------------------------------------
# classical matrix families


def gl(n):
    if n < 1:
        raise FamilyError("gl needs n >= 1")
    labels, basis = [], []
    for i in range(n):
        for j in range(n):
            labels.append(f"E{_sub(i)}{_sub(j)}" if n < 10 else f"E{_sub(i)}_{_sub(j)}")
            basis.append(_unit(("E", i, j)))
    return algebra_from_rule(labels, basis, _matrix_rule, name=f"gl({n})")


def sl(n):
    if n < 2:
        raise FamilyError("sl needs n >= 2")
    return seaweed_sl(n, (n,), (n,), name=f"sl({n})")


def _blocks(comp):
    out = []
    for b, size in enumerate(comp):
        out.extend([b] * size)
    return out


def seaweed_sl(n, top, bottom, name=None):
    """Seaweed of ``sl_n`` cut out by two compositions of ``n``.

    Spanned by ``E_ij`` with ``top_block(i) <= top_block(j)`` and
    ``bottom_block(i) >= bottom_block(j)``, intersected with trace zero.
    """
    top, bottom = tuple(top), tuple(bottom)
    if n < 2:
        raise FamilyError("seaweed needs n >= 2")
    if any(c <= 0 for c in top + bottom) or sum(top) != n or sum(bottom) != n:
        raise FamilyError(f"compositions must be of {n}")
    bt, bb = _blocks(top), _blocks(bottom)
    wide = n >= 10
    labels, basis = [], []
    for i in range(n):
        for j in range(n):
            if i != j and bt[i] <= bt[j] and bb[i] >= bb[j]:
                labels.append(f"E{_sub(i)}_{_sub(j)}" if wide else f"E{_sub(i)}{_sub(j)}")
                basis.append(_unit(("E", i, j)))
    for k, b in enumerate(_diag_trace_zero([("E", i, i) for i in range(n)])):
        labels.append(f"H{_sub(k)}")
        basis.append(b)
    if name is None:
        name = f"seaweed_sl({n};{','.join(map(str, top))}|{','.join(map(str, bottom))})"
    return algebra_from_rule(labels, basis, _matrix_rule, name=name)


def heisenberg(n):
    """Heisenberg algebra of dimension ``2n+1``: ``[x_i, y_i] = z``."""
    if n < 1:
        raise FamilyError("heisenberg needs n >= 1")
    if n == 1:
        labels = ["x", "y", "z"]
    else:
        labels = [f"x{i + 1}" for i in range(n)] + [f"y{i + 1}" for i in range(n)] + ["z"]
    br = {(i, n + i): {2 * n: 1} for i in range(n)}
    return LieAlgebra(labels, br, name=f"heisenberg({n})")


def borel_sl3():
    """Borel of ``sl_3`` in the basis ``h, h1, x, y, z``."""
    mats = [
        [[1, 0, 0], [0, -2, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 0, 0], [0, 0, -1]],
        [[0, 1, 0], [0, 0, 0], [0, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
    ]
    return matrix_algebra(["h", "h1", "x", "y", "z"], mats, name="borel_sl3")


SP4_J = [[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]]


def sp4_parabolic():
    """Stabiliser in ``sp_4`` of the isotropic line ``k e1``.

    ``sp_4 = {X : X^T J + J X = 0}`` with ``J`` antidiagonal; the parabolic
    additionally has ``X_i1 = 0`` for ``i > 1``.  Its Levi factor is
    ``gl_1 + sp_2`` and its nilpotent radical is a 3-dimensional Heisenberg
    algebra.  The basis is the reduced echelon basis of that solution
    space; labels name the leading matrix entry.
    """
    rows = []
    idx = lambda i, j: 4 * i + j
    for i in range(4):
        for j in range(4):
            # (X^T J + J X)_{ij} = sum_k X_ki J_kj + J_ik X_kj
            row = [Fraction(0)] * 16
            for k in range(4):
                row[idx(k, i)] += SP4_J[k][j]
                row[idx(k, j)] += SP4_J[i][k]
            rows.append(row)
    for i in (1, 2, 3):
        rows.append(linalg.unit_vec(16, idx(i, 0)))
    basis_vecs, piv = linalg.rref(linalg.kernel(rows, 16), 16)
    mats, labels = [], []
    for v, p in zip(basis_vecs, piv):
        mats.append([[v[idx(i, j)] for j in range(4)] for i in range(4)])
        labels.append(f"X{p // 4 + 1}{p % 4 + 1}")
    if len(mats) != 7:
        raise FamilyError("sp4 parabolic has the wrong dimension")
    return matrix_algebra(labels, mats, name="sp4_parabolic")


# ---------------------------------------------------------------------------
# q(a,b), r(a,b) and their bar variants

# Unit keys: ("A",i,j) in gl_a, ("B",i,j) in gl_b, ("M",i,j) in the Abelian
# copy of gl_a, and a x b blocks ("W",...), ("V",...), ("V1",...), ("V2",...).
_AB_MODULES = ("W", "V", "V1", "V2")


def _qr_rule(k1, k2, with_m):
    t1, i, j = k1
    t2, k, l = k2
    if t1 > t2 or (t1 == t2 and (i, j) > (k, l)):
        r = _qr_rule_ordered(k2, k1, with_m)
        return {key: -c for key, c in r.items()}
    return _qr_rule_ordered(k1, k2, with_m)


def _comm(t, i, j, k, l):
    out = {}
    if j == k:
        out[(t, i, l)] = 1
    if l == i:
        key = (t, k, j)
        out[key] = out.get(key, 0) - 1
        if not out[key]:
            del out[key]
    return out


def _qr_rule_ordered(k1, k2, with_m):
    t1, i, j = k1
    t2, k, l = k2
    if t1 == "A" and t2 == "A":
        return _comm("A", i, j, k, l)
    if t1 == "B" and t2 == "B":
        return _comm("B", i, j, k, l)
    if t1 == "A" and t2 == "M":
        return _comm("M", i, j, k, l)
    if t1 == "A" and t2 in _AB_MODULES:
        return {(t2, i, l): 1} if j == k else {}
    if t1 == "B" and t2 in _AB_MODULES:
        # w -> -w Y
        return {(t2, k, j): -1} if l == i else {}
    if with_m and t1 == "M" and t2 == "W":
        return {("V", i, l): 1} if j == k else {}
    return {}


def _levi(a, b, bar):
    wide = max(a, b) >= 10
    labels, basis = [], []
    for i in range(a):
        for j in range(a):
            if i != j or not bar:
                labels.append(f"A_{_pair(i, j, wide)}")
                basis.append(_unit(("A", i, j)))
    for i in range(b):
        for j in range(b):
            if i != j or not bar:
                labels.append(f"B_{_pair(i, j, wide)}")
                basis.append(_unit(("B", i, j)))
    if bar:
        diag = [("A", i, i) for i in range(a)] + [("B", i, i) for i in range(b)]
        if diag:
            for k, el in enumerate(_diag_trace_zero(diag)):
                labels.append(f"D{_sub(k)}")
                basis.append(el)
    return labels, basis


def _pair(i, j, wide):
    return f"{i + 1}.{j + 1}" if wide else f"{i + 1}{j + 1}"


def _block(tag, rows, cols):
    wide = max(rows, cols) >= 10
    labels, basis = [], []
    for i in range(rows):
        for j in range(cols):
            labels.append(f"{tag}_{_pair(i, j, wide)}")
            basis.append(_unit((tag, i, j)))
    return labels, basis


def _check_ab(a, b):
    if a < 0 or b < 0 or (a == 0 and b == 0):
        raise FamilyError("need a, b >= 0, not both zero")


def _q_model(a, b, bar):
    _check_ab(a, b)
    lab_l, bas_l = _levi(a, b, bar)
    lab_1, bas_1 = _block("V1", a, b)
    lab_2, bas_2 = _block("V2", a, b)
    labels = lab_l + lab_1 + lab_2
    name = f"{'qbar' if bar else 'q'}({a},{b})"
    q = algebra_from_rule(labels, bas_l + bas_1 + bas_2, lambda x, y: _qr_rule(x, y, False), name=name)
    nl, nv = len(bas_l), len(bas_1)
    levi = list(range(nl))
    v1 = list(range(nl, nl + nv))
    v2 = list(range(nl + nv, nl + 2 * nv))
    decs = {}
    if nv:
        decs["levi"] = SemidirectDecomposition(q, coordinate_subspace(q, levi), coordinate_subspace(q, v1 + v2), "levi")
        decs["sw1"] = SemidirectDecomposition(q, coordinate_subspace(q, levi + v1), coordinate_subspace(q, v2), "sw1")
    return q, decs


def q_ab(a, b):
    """``q(a,b) = (gl_a + gl_b) ⋉ 2 k^a ⊗ k^b`` with ``(X,Y).w = Xw - wY``."""
    return _q_model(a, b, False)


def qbar_ab(a, b):
    """``q(a,b)`` with the Levi restricted to total trace zero."""
    return _q_model(a, b, True)


def _r_model(a, b, bar):
    _check_ab(a, b)
    lab_l, bas_l = _levi(a, b, bar)
    lab_m, bas_m = _block("M", a, a)
    lab_w, bas_w = _block("W", a, b)
    lab_v, bas_v = _block("V", a, b)
    labels = lab_l + lab_m + lab_w + lab_v
    name = f"{'rbar' if bar else 'r'}({a},{b})"
    q = algebra_from_rule(labels, bas_l + bas_m + bas_w + bas_v, lambda x, y: _qr_rule(x, y, True), name=name)
    nl, nm, nw = len(bas_l), len(bas_m), len(bas_w)
    levi = list(range(nl))
    m = list(range(nl, nl + nm))
    w = list(range(nl + nm, nl + nm + nw))
    v = list(range(nl + nm + nw, nl + nm + 2 * nw))
    decs = {}
    if nm or nw:
        decs["levi+M"] = SemidirectDecomposition(q, coordinate_subspace(q, levi + m), coordinate_subspace(q, w + v), "levi+M")
    if nw:
        decs["levi+W"] = SemidirectDecomposition(q, coordinate_subspace(q, levi + w), coordinate_subspace(q, m + v), "levi+W")
    return q, decs


def r_ab(a, b):
    """``r(a,b) = (gl_a + gl_b) ⋉ ((gl_a^ab + W) + V)`` with ``[m, w] = m w`` in ``V``."""
    return _r_model(a, b, False)


def rbar_ab(a, b):
    return _r_model(a, b, True)


# ---------------------------------------------------------------------------
# semi-direct examples


def sl2_m_copies(m):
    """``sl_2 ⋉ m k^2`` (dimension ``3 + 2m``)."""
    if m < 1:
        raise FamilyError("need m >= 1")
    l = sl(2)
    # sl(2) basis order: E12, E21, H1 = E11 - E22
    gens = {"E12": [[0, 1], [0, 0]], "E21": [[0, 0], [1, 0]], "H1": [[1, 0], [0, -1]]}
    action = []
    for label in l.basis:
        g = gens[label]
        mat = [[0] * (2 * m) for _ in range(2 * m)]
        for c in range(m):
            for r in range(2):
                for s in range(2):
                    mat[2 * c + r][2 * c + s] = g[r][s]
        action.append(mat)
    if m == 1:
        ideal = ["x", "y"]
    else:
        ideal = [f"{v}{c + 1}" for c in range(m) for v in ("x", "y")]
    d = build_semidirect(l, action, ideal, name=f"sl2_x_{m}k2")
    return d.q, {"levi": d}


def dirpr():
    """``sl_2 ⋉ k^2`` with ``[E12, y] = x``, ``[E12, x] = 0``."""
    q, decs = sl2_m_copies(1)
    return q, decs


def k_two_characters(lam, mu):
    """``k ⋉ k^2`` where ``s`` acts by ``diag(lam, mu)``."""
    lam, mu = Fraction(lam), Fraction(mu)
    if not lam or not mu:
        raise FamilyError("characters must be non-zero")
    q = LieAlgebra(["s", "x", "y"], {(0, 1): {1: lam}, (0, 2): {2: mu}}, name=f"k_x_k2({lam},{mu})")
    decs = {
        "torus": SemidirectDecomposition(q, coordinate_subspace(q, [0]), coordinate_subspace(q, [1, 2]), "torus"),
        "line": SemidirectDecomposition(q, coordinate_subspace(q, [0, 1]), coordinate_subspace(q, [2]), "line"),
    }
    return q, decs


def frobenius_2d():
    """``[a, x] = x``."""
    return LieAlgebra(["a", "x"], {(0, 1): {1: 1}}, name="aff1")


def heisenberg_split(n=1):
    q = heisenberg(n)
    if n != 1:
        return q, {}
    d = SemidirectDecomposition(q, coordinate_subspace(q, [0]), coordinate_subspace(q, [1, 2]), "x")
    return q, {"x": d}


def sl_plus_torus_4copies(n=1):
    """``(sl_{2n+2} + 4k) ⋉ 4 k^{2n+2}``: each copy of the natural module is
    also scaled by its own torus coordinate.

    With ``n = 0`` this is ``sl_2 ⋉ 4k^2`` extended by a Cartan subalgebra
    of the centraliser ``gl_4``.
    """
    if n < 0:
        raise FamilyError("need n >= 0")
    N = 2 * n + 2
    size = N + 4
    mats, labels = [], []
    for i in range(N):
        for j in range(N):
            if i != j:
                m = [[0] * size for _ in range(size)]
                m[i][j] = 1
                mats.append(m)
                labels.append(f"E{_sub(i)}_{_sub(j)}")
    for k in range(N - 1):
        m = [[0] * size for _ in range(size)]
        m[k][k] = 1
        m[N - 1][N - 1] = -1
        mats.append(m)
        labels.append(f"H{_sub(k)}")
    for c in range(4):
        m = [[0] * size for _ in range(size)]
        m[N + c][N + c] = 1
        mats.append(m)
        labels.append(f"t{c + 1}")
    nl = len(mats)
    for c in range(4):
        for i in range(N):
            m = [[0] * size for _ in range(size)]
            m[i][N + c] = 1
            mats.append(m)
            labels.append(f"v{c + 1}_{_sub(i)}")
    q = matrix_algebra(labels, mats, name=f"sl{N}_plus_torus_4copies")
    d = SemidirectDecomposition(q, coordinate_subspace(q, range(nl)), coordinate_subspace(q, range(nl, q.dim)), "levi")
    return q, {"levi": d}


def takiff(base, k):
    """Truncated current algebra ``base[t]/(t^k)``."""
    if k < 1:
        raise FamilyError("takiff needs k >= 1")
    n = base.dim
    labels = [lab if s == 0 else f"{lab}_t{s}" for s in range(k) for lab in base.basis]
    br = {}
    for (i, j), coeffs in base.structure_constants().items():
        for s in range(k):
            for r in range(k - s):
                a, b = s * n + i, r * n + j
                target = {(s + r) * n + kk: c for kk, c in coeffs.items()}
                if a < b:
                    _merge(br, (a, b), target, 1)
                else:
                    _merge(br, (b, a), target, -1)
    name = f"takiff({base.name or 'q'},{k})"
    return LieAlgebra(labels, br, name=name)


def _merge(br, key, target, sign):
    d = br.setdefault(key, {})
    for kk, c in target.items():
        nv = d.get(kk, 0) + sign * c
        if nv:
            d[kk] = nv
        else:
            d.pop(kk, None)
    if not d:
        del br[key]


def abelian(n):
    return LieAlgebra([f"a{i + 1}" for i in range(n)], {}, name=f"abelian({n})")


# ---------------------------------------------------------------------------
# registry


@dataclass
class FamilySpec:
    name: str
    params: list = field(default_factory=list)


ALIASES = {
    "q": "q_ab",
    "qbar": "qbar_ab",
    "r": "r_ab",
    "rbar": "rbar_ab",
    "seaweed-sl": "seaweed_sl",
    "borel-sl3": "borel_sl3",
    "borel_sl3_paper": "borel_sl3",
    "sp4-parabolic": "sp4_parabolic",
    "sl2-copies": "sl2_m_copies",
    "k-two-characters": "k_two_characters",
    "sl-plus-torus": "sl_plus_torus_4copies",
}

FAMILY_NAMES = (
    "heisenberg",
    "gl",
    "sl",
    "borel_sl3",
    "sp4_parabolic",
    "seaweed_sl",
    "q_ab",
    "qbar_ab",
    "r_ab",
    "rbar_ab",
    "sl2_m_copies",
    "k_two_characters",
    "takiff",
    "sl_plus_torus_4copies",
    "dirpr",
    "abelian",
)


def _composition(p):
    if isinstance(p, str):
        return tuple(int(x) for x in p.split(","))
    return tuple(p)


def _ints(params, count, name):
    if len(params) != count:
        raise FamilyError(f"{name} takes {count} parameter(s)")
    try:
        return [int(p) for p in params]
    except (TypeError, ValueError):
        raise FamilyError(f"{name} parameters must be integers")


def construct(spec):
    """Build ``(algebra, decompositions)`` for a :class:`FamilySpec`.

    ``decompositions`` maps a short name to a :class:`SemidirectDecomposition`.
    """
    name = ALIASES.get(spec.name, spec.name)
    p = list(spec.params)
    if name == "heisenberg":
        (n,) = _ints(p, 1, name)
        return heisenberg_split(n)
    if name == "gl":
        (n,) = _ints(p, 1, name)
        return gl(n), {}
    if name == "sl":
        (n,) = _ints(p, 1, name)
        return sl(n), {}
    if name == "abelian":
        (n,) = _ints(p, 1, name)
        return abelian(n), {}
    if name == "borel_sl3":
        _ints(p, 0, name)
        return borel_sl3(), {}
    if name == "sp4_parabolic":
        _ints(p, 0, name)
        return sp4_parabolic(), {}
    if name == "dirpr":
        _ints(p, 0, name)
        return dirpr()
    if name == "seaweed_sl":
        if len(p) != 3:
            raise FamilyError("seaweed_sl takes n, top, bottom")
        return seaweed_sl(int(p[0]), _composition(p[1]), _composition(p[2])), {}
    if name in ("q_ab", "qbar_ab", "r_ab", "rbar_ab"):
        a, b = _ints(p, 2, name)
        return {"q_ab": q_ab, "qbar_ab": qbar_ab, "r_ab": r_ab, "rbar_ab": rbar_ab}[name](a, b)
    if name == "sl2_m_copies":
        (m,) = _ints(p, 1, name)
        return sl2_m_copies(m)
    if name == "k_two_characters":
        if len(p) != 2:
            raise FamilyError("k_two_characters takes lambda, mu")
        try:
            lam, mu = Fraction(p[0]), Fraction(p[1])
        except (TypeError, ValueError):
            raise FamilyError("characters must be rationals")
        return k_two_characters(lam, mu)
    if name == "sl_plus_torus_4copies":
        if len(p) > 1:
            raise FamilyError("sl_plus_torus_4copies takes at most one parameter")
        n = _ints(p, 1, name)[0] if p else 1
        return sl_plus_torus_4copies(n)
    if name == "takiff":
        if len(p) < 2:
            raise FamilyError("takiff takes k, a base family and its parameters")
        k = _ints(p[:1], 1, name)[0]
        base, _ = construct(FamilySpec(str(p[1]), p[2:]))
        return takiff(base, k), {}
    raise FamilyError(f"unknown family {spec.name!r}")


def dim_q(a, b):
    return a * a + b * b + 2 * a * b


def dim_r(a, b):
    return 2 * a * a + b * b + 2 * a * b


def ind_q(a, b):
    return gcd(2 * a, a + b)


def ind_r(a, b):
    return gcd(2 * a, b)


# ---------------------------------------------------------------------------
# cross-checks


def fingerprint(q, rng=None):
    """Isomorphism invariants: dimension, index, centre, derived and lower central series."""
    from .coadjoint import index
    from .lie import derived_and_center, derived_series_dims, lower_central_dims

    _, center = derived_and_center(q)
    return {
        "dim": q.dim,
        "index": index(q, rng=rng).index,
        "center": center.dim,
        "derived_series": derived_series_dims(q),
        "lower_central": lower_central_dims(q),
    }


def stabiliser_cross_check(a, b, rng=None):
    """Fingerprints of ``l_gamma`` inside ``q(a,b)`` (``a <= b``) and of ``r(a, b-a)``.

    ``q(a,b)`` is split as ``(gl_a + gl_b + V1) ⋉ V2`` and ``gamma`` is a
    generic point of ``V2*``.
    """
    from random import Random

    from .coadjoint import Sampling
    from .lie import subalgebra
    from .semidirect import levi_stabiliser, sample_gamma

    if not 0 < a <= b:
        raise FamilyError("cross-check needs 0 < a <= b")
    rng = rng if rng is not None else Random(0)
    q, decs = q_ab(a, b)
    d = decs["sw1"]
    gamma, _ = sample_gamma(d, rng, Sampling())
    lg = subalgebra(q, levi_stabiliser(d, gamma))
    r, _ = r_ab(a, b - a)
    return fingerprint(lg, rng), fingerprint(r, rng)
