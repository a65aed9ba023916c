"""Lie algebras given by rational structure constants.

A :class:`LieAlgebra` stores ``[x_i, x_j] = sum_k c_ij^k x_k`` only for
``i < j``; antisymmetry is by construction.  The Jacobi identity is checked
on every construction, so every downstream computation can rely on it.
"""

import json
from fractions import Fraction
from math import lcm

from . import linalg
from .linalg import to_rat
from .poly import MPoly


class JacobiError(ValueError):
    def __init__(self, triple, residual):
        self.triple = triple
        self.residual = residual
        super().__init__(f"jacobi violation at {triple}: residual {residual}")


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q.

    ``brackets`` maps ``(i, j)`` (any order, ``i != j``) to a mapping
    ``{k: c}``; pairs that are not listed bracket to zero.  Construction
    raises :class:`JacobiError` if the Jacobi identity fails.
    """

    def __init__(self, basis, brackets, name=None):
        basis = [str(b) for b in basis]
        if len(set(basis)) != len(basis):
            raise ValueError("basis labels must be unique")
        self.dim = len(basis)
        self.basis = tuple(basis)
        self.name = name
        table = {}
        for (i, j), coeffs in brackets.items():
            if i == j:
                if any(to_rat(c) for c in coeffs.values()):
                    raise ValueError(f"[x_{i}, x_{i}] must vanish")
                continue
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError(f"bracket index out of range: {(i, j)}")
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            clean = {}
            for k, c in coeffs.items():
                k = int(k)
                if not 0 <= k < self.dim:
                    raise ValueError(f"bracket index out of range: {k}")
                c = sign * to_rat(c)
                if c:
                    clean[k] = c
            if (i, j) in table:
                raise ValueError(f"bracket {(i, j)} given twice")
            if clean:
                table[(i, j)] = clean
        self._table = table
        self._ad = [dict() for _ in range(self.dim)]
        for (i, j), coeffs in table.items():
            self._ad[i][j] = coeffs
            self._ad[j][i] = {k: -c for k, c in coeffs.items()}
        self._pairs = [
            (i, j, [(k, c) for k, c in sorted(coeffs.items())]) for (i, j), coeffs in sorted(table.items())
        ]
        self._den = None
        self._ipairs = None
        _check_jacobi(self)

    def __repr__(self):
        return f"LieAlgebra({self.name or 'unnamed'}, dim={self.dim})"

    def index_of(self, label):
        return self.basis.index(label)

    def bracket_basis(self, i, j):
        """``[x_i, x_j]`` as a sparse dict ``{k: c}``."""
        return self._ad[i].get(j, {})

    def structure_constants(self):
        """``{(i, j): {k: c}}`` for ``i < j``; a copy."""
        return {key: dict(v) for key, v in self._table.items()}

    def is_abelian(self):
        return not self._table

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.basis == other.basis
            and self._table == other._table
        )

    def __hash__(self):
        return hash((self.basis, frozenset((k, frozenset(v.items())) for k, v in self._table.items())))

    def _denominator(self):
        if self._den is None:
            d = 1
            for _, _, coeffs in self._pairs:
                for _, c in coeffs:
                    d = lcm(d, c.denominator)
            self._den = d
        return self._den

    def _int_pairs(self):
        if self._ipairs is None:
            d = self._denominator()
            self._ipairs = [(i, j, [(k, int(c * d)) for k, c in coeffs]) for i, j, coeffs in self._pairs]
        return self._ipairs


def _check_jacobi(q):
    # Each nonzero [x_a, x_b] (a < b) contributes [[x_a, x_b], x_c] to the
    # cyclic Jacobi sum of the triple {a, b, c}, with sign -1 iff a < c < b.
    n = q.dim
    ad = q._ad
    acc = {}
    for a, b, coeffs in q._pairs:
        for c in range(n):
            if c == a or c == b:
                continue
            out = {}
            for k, ck in coeffs:
                row = ad[k].get(c)
                if row:
                    for m, v in row.items():
                        out[m] = out.get(m, 0) + ck * v
            if not out:
                continue
            sign = -1 if a < c < b else 1
            key = tuple(sorted((a, b, c)))
            tgt = acc.get(key)
            if tgt is None:
                tgt = acc[key] = {}
            for m, v in out.items():
                tgt[m] = tgt.get(m, 0) + sign * v
    for key in sorted(acc):
        res = {m: v for m, v in acc[key].items() if v}
        if res:
            vec = tuple(Fraction(res.get(m, 0)) for m in range(n))
            raise JacobiError(key, vec)


def validate(basis, brackets, name=None):
    """Build a :class:`LieAlgebra`, raising :class:`JacobiError` on failure."""
    return LieAlgebra(basis, brackets, name=name)


def bracket(q, u, v):
    if len(u) != q.dim or len(v) != q.dim:
        raise ValueError("length mismatch")
    out = [Fraction(0)] * q.dim
    for i, ui in enumerate(u):
        if not ui:
            continue
        adi = q._ad[i]
        for j, coeffs in adi.items():
            vj = v[j]
            if vj:
                f = ui * vj
                for k, c in coeffs.items():
                    out[k] += f * c
    return tuple(out)


def ad_matrix(q, u):
    """Matrix of ``ad(u)``: column ``j`` is ``[u, x_j]``."""
    n = q.dim
    cols = [bracket(q, u, linalg.unit_vec(n, j)) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def structure_matrix(q, alpha):
    """``B(alpha)_ij = alpha([x_i, x_j])``."""
    n = q.dim
    if len(alpha) != n:
        raise ValueError("length mismatch")
    alpha = [to_rat(a) for a in alpha]
    m = [[Fraction(0)] * n for _ in range(n)]
    for i, j, coeffs in q._pairs:
        s = Fraction(0)
        for k, c in coeffs:
            if alpha[k]:
                s += c * alpha[k]
        if s:
            m[i][j] = s
            m[j][i] = -s
    return m


def integer_structure_matrix(q, alpha):
    """``B(alpha)`` scaled row-wise to integers, for rank computations.

    ``alpha`` must be a sequence of ints.
    """
    n = q.dim
    den = q._denominator()
    rows = [[0] * n for _ in range(n)]
    for i, j, coeffs in q._int_pairs():
        s = 0
        for k, c in coeffs:
            s += c * alpha[k]
        if s:
            rows[i][j] = s
            rows[j][i] = -s
    return rows, den


def symbolic_structure_matrix(q):
    """``B(x)`` with linear polynomial entries ``sum_k c_ij^k x_k``."""
    n = q.dim
    zero = MPoly.zero(n)
    m = [[zero] * n for _ in range(n)]
    for i, j, coeffs in q._pairs:
        lin = [0] * n
        for k, c in coeffs:
            lin[k] = c
        p = MPoly.linear(lin)
        m[i][j] = p
        m[j][i] = -p
    return m


class Subspace:
    """Subspace of a Lie algebra with a reduced echelon basis."""

    def __init__(self, ambient, vectors):
        self.ambient = ambient
        self.basis = tuple(linalg.span_basis([tuple(to_rat(x) for x in v) for v in vectors], ambient.dim))

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def contains(self, v):
        return linalg.in_span(list(self.basis), v)

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, v):
        return linalg.coordinates(list(self.basis), v)

    def intersect(self, other):
        return Subspace(self.ambient, linalg.intersect(list(self.basis), list(other.basis), self.ambient.dim))

    def __add__(self, other):
        return Subspace(self.ambient, list(self.basis) + list(other.basis))

    def labels(self):
        """Readable form of the basis vectors in terms of basis labels."""
        return [vector_string(self.ambient, v) for v in self.basis]

    def __repr__(self):
        return f"Subspace(dim={self.dim}, {self.labels()})"


def vector_string(q, v):
    n = q.dim
    p = MPoly.linear(list(v)) if n else None
    return p.to_string(q.basis) if p is not None else "0"


def span_of(q, vectors):
    return Subspace(q, vectors)


def whole(q):
    return Subspace(q, [linalg.unit_vec(q.dim, i) for i in range(q.dim)])


def coordinate_subspace(q, indices):
    return Subspace(q, [linalg.unit_vec(q.dim, i) for i in indices])


def derived_and_center(q):
    n = q.dim
    derived = Subspace(q, [tuple(Fraction(c.get(k, 0)) for k in range(n)) for c in q._table.values()])
    # center: xi with [xi, x_j] = 0 for all j; rows indexed by (j, k)
    rows = []
    for j in range(n):
        for k in range(n):
            row = [Fraction(0)] * n
            for i in range(n):
                c = q._ad[i].get(j, {}).get(k)
                if c:
                    row[i] = c
            if any(row):
                rows.append(row)
    center = Subspace(q, linalg.kernel(rows, n) if rows else [linalg.unit_vec(n, i) for i in range(n)])
    return derived, center


def is_subalgebra(q, s):
    return all(s.contains(bracket(q, u, v)) for a, u in enumerate(s.basis) for v in s.basis[a + 1:])


def is_ideal(q, s):
    return all(s.contains(bracket(q, linalg.unit_vec(q.dim, i), v)) for i in range(q.dim) for v in s.basis)


def subalgebra(q, s, labels=None, name=None):
    """The subalgebra spanned by ``s`` as a standalone :class:`LieAlgebra`.

    Basis element ``i`` of the result is ``s.basis[i]``.
    """
    basis = list(s.basis)
    if labels is None:
        labels = [vector_string(q, v) for v in basis]
        if len(set(labels)) != len(labels):
            labels = [f"u{i}" for i in range(len(basis))]
    br = {}
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            w = bracket(q, basis[a], basis[b])
            if not any(w):
                continue
            coords = s.coordinates(w)
            if coords is None:
                raise ValueError("subspace is not a subalgebra")
            br[(a, b)] = {k: c for k, c in enumerate(coords) if c}
    return LieAlgebra(labels, br, name=name)


def lower_central_dims(q, steps=None):
    """Dimensions of the lower central series (for fingerprinting)."""
    dims = [q.dim]
    cur = whole(q)
    for _ in range(steps or q.dim):
        nxt = Subspace(
            q, [bracket(q, linalg.unit_vec(q.dim, i), v) for i in range(q.dim) for v in cur.basis]
        )
        dims.append(nxt.dim)
        if nxt.dim == cur.dim or nxt.dim == 0:
            break
        cur = nxt
    return dims


def derived_series_dims(q):
    dims = [q.dim]
    cur = whole(q)
    while True:
        nxt = Subspace(q, [bracket(q, u, v) for a, u in enumerate(cur.basis) for v in cur.basis[a + 1:]])
        dims.append(nxt.dim)
        if nxt.dim == cur.dim or nxt.dim == 0:
            break
        cur = nxt
    return dims


# ---------------------------------------------------------------------------
# JSON algebra format


def to_dict(q, splitting=None):
    brackets = []
    for (i, j), coeffs in sorted(q._table.items()):
        brackets.append({"i": i, "j": j, "c": {str(k): str(c) for k, c in sorted(coeffs.items())}})
    out = {"dim": q.dim, "basis": list(q.basis), "brackets": brackets}
    if q.name:
        out["name"] = q.name
    if splitting is not None:
        out["splitting"] = splitting
    return out


def to_json(q, splitting=None):
    """Deterministic JSON text of the algebra file format."""
    return json.dumps(to_dict(q, splitting), indent=1) + "\n"


def from_dict(obj):
    try:
        n = int(obj["dim"])
        basis = obj["basis"]
        raw = obj["brackets"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed algebra file: missing {exc}") from None
    if len(basis) != n:
        raise ValueError("basis length does not match dim")
    brackets = {}
    for entry in raw:
        i, j = int(entry["i"]), int(entry["j"])
        if not i < j:
            raise ValueError(f"bracket indices must satisfy i < j, got {(i, j)}")
        brackets[(i, j)] = {int(k): Fraction(v) for k, v in entry["c"].items()}
    return LieAlgebra(basis, brackets, name=obj.get("name"))


def from_json(text):
    """Parse the JSON algebra format; returns ``(algebra, splitting_or_None)``."""
    obj = json.loads(text)
    return from_dict(obj), obj.get("splitting")
