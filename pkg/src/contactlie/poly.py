"""Sparse multivariate polynomials with rational coefficients.

Terms are stored as ``{exponent_tuple: Fraction}`` with no zero
coefficients.  The term order is graded lexicographic with
``x_0 > x_1 > ...``; together with primitive integer coefficients and a
positive leading coefficient it fixes a canonical representative of every
polynomial up to a non-zero scalar (see :meth:`MPoly.canonical`).
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .linalg import to_rat

DEFAULT_SYMBOLIC_LIMIT = 16


def grlex_key(exp):
    return (sum(exp), exp)


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        if terms is None:
            terms = {}
        elif any(not c for c in terms.values()):
            terms = {e: c for e, c in terms.items() if c}
        self.terms = terms

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars, c):
        c = to_rat(c)
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def linear(cls, coeffs):
        """``sum_k coeffs[k] * x_k``."""
        n = len(coeffs)
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[k] = 1
                terms[tuple(e)] = to_rat(c)
        return cls(n, terms)

    @classmethod
    def monomial(cls, exp, c=1):
        return cls(len(exp), {tuple(exp): to_rat(c)})

    # -- basic queries ---------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def __len__(self):
        return len(self.terms)

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, v):
        if not self.terms:
            return -1
        return max(e[v] for e in self.terms)

    def variables(self):
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        return sorted(used)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self):
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        return MPoly.const(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return MPoly(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = to_rat(c)
        if not c:
            return MPoly(self.nvars, {})
        return MPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        if not self.terms or not other.terms:
            return MPoly(self.nvars, {})
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        t = {}
        get = t.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                t[e] = get(e, 0) + ca * cb
        return MPoly(self.nvars, {e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        result = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, point):
        return self.evaluate(point)

    def evaluate(self, point):
        pt = [to_rat(x) for x in point]
        s = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x**k
            s += v
        return s

    def derivative(self, i):
        t = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = list(e)
                e2[i] -= 1
                t[tuple(e2)] = c * k
        return MPoly(self.nvars, t)

    def substitute_linear(self, images):
        """Substitute ``x_i -> images[i]`` (polynomials)."""
        out = MPoly.zero(images[0].nvars if images else self.nvars)
        for e, c in self.terms.items():
            m = MPoly.const(out.nvars, c)
            for i, k in enumerate(e):
                if k:
                    m = m * images[i] ** k
            out = out + m
        return out

    # -- division ----------------------------------------------------------
    def divide_exact(self, other):
        """Quotient ``self / other`` if the division is exact, else ``None``."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return MPoly(self.nvars, {})
        le, lc = other.leading_term()
        if len(other.terms) == 1:
            t = {}
            for e, c in self.terms.items():
                q = tuple(x - y for x, y in zip(e, le))
                if min(q) < 0:
                    return None
                t[q] = c / lc
            return MPoly(self.nvars, t)
        rem = dict(self.terms)
        quot = {}
        others = [(e, c) for e, c in other.terms.items() if e != le]
        while rem:
            e = max(rem, key=grlex_key)
            c = rem[e]
            q = tuple(x - y for x, y in zip(e, le))
            if min(q) < 0:
                return None
            qc = c / lc
            quot[q] = qc
            del rem[e]
            for oe, oc in others:
                ne = tuple(x + y for x, y in zip(q, oe))
                v = rem.get(ne, 0) - qc * oc
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        return MPoly(self.nvars, quot)

    def divides(self, other):
        """Whether ``self`` divides ``other``."""
        return other.divide_exact(self) is not None

    # -- normalisation -------------------------------------------------------
    def content(self):
        """Positive rational ``c`` with ``self / c`` primitive over Z."""
        if not self.terms:
            return Fraction(0)
        nums = [c.numerator for c in self.terms.values()]
        dens = [c.denominator for c in self.terms.values()]
        return Fraction(abs(reduce(gcd, nums)), reduce(lcm, dens))

    def canonical(self):
        """Primitive integer coefficients and positive grlex-leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return MPoly(self.nvars, {e: v / c for e, v in self.terms.items()})

    def proportional_to(self, other):
        """Whether ``self = c * other`` for a non-zero rational ``c``."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.canonical() == other.canonical()

    # -- display -------------------------------------------------------------
    def to_string(self, labels=None):
        if labels is None:
            labels = [f"x{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                labels[i] if k == 1 else f"{labels[i]}^{k}" for i, k in enumerate(e) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"MPoly({self.to_string()})"


# ---------------------------------------------------------------------------
# gcd


def _coeffs_in(f, v):
    out = {}
    for e, c in f.terms.items():
        k = e[v]
        e2 = e[:v] + (0,) + e[v + 1:]
        out.setdefault(k, {})[e2] = c
    return {k: MPoly(f.nvars, t) for k, t in out.items()}


def _shift(f, v, k):
    if k == 0:
        return f
    return MPoly(f.nvars, {e[:v] + (e[v] + k,) + e[v + 1:]: c for e, c in f.terms.items()})


def _content_in(f, v):
    return _gcd_pair_list(list(_coeffs_in(f, v).values()))


def _prem(a, b, v):
    """Pseudo-remainder of ``a`` by ``b`` as polynomials in ``x_v``."""
    db = b.degree_in(v)
    lcb = _coeffs_in(b, v)[db]
    r = a
    while not r.is_zero():
        dr = r.degree_in(v)
        if dr < db:
            break
        lcr = _coeffs_in(r, v)[dr]
        r = r * lcb - _shift(lcr * b, v, dr - db)
    return r


def _gcd_pair_list(ps):
    g = None
    for p in ps:
        g = p if g is None else _gcd2(g, p)
        if g.is_constant() and not g.is_zero():
            return MPoly.const(p.nvars, 1)
    return g


def _gcd2(f, g):
    """gcd of two polynomials, up to a rational scalar."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    n = f.nvars
    if f.is_constant() or g.is_constant():
        return MPoly.const(n, 1)
    fv, gv = set(f.variables()), set(g.variables())
    common = fv & gv
    if not common:
        # gcd divides every coefficient; strip one variable at a time
        v = min(fv | gv)
        if v in fv:
            return _gcd2(_content_in(f, v), g)
        return _gcd2(f, _content_in(g, v))
    v = min(common)
    cf, cg = _content_in(f, v), _content_in(g, v)
    c = _gcd2(cf, cg)
    a = f.divide_exact(cf)
    b = g.divide_exact(cg)
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    while not b.is_zero():
        r = _prem(a, b, v)
        a = b
        if r.is_zero():
            b = r
        elif r.degree_in(v) == 0:
            a = MPoly.const(n, 1)
            break
        else:
            b = r.divide_exact(_content_in(r, v)).canonical()
    return (c * a.divide_exact(_content_in(a, v))).canonical()


def poly_gcd(ps):
    """Canonical gcd of a list of polynomials.

    The result divides every input, has primitive integer coefficients and
    a positive grlex-leading coefficient.
    """
    ps = [p for p in ps if not p.is_zero()]
    if not ps:
        raise ValueError("zero gcd")
    ps.sort(key=lambda p: (len(p.terms), p.degree()))
    g = ps[0]
    for p in ps[1:]:
        if g.is_constant():
            break
        # cheap path: exact division
        if p.divide_exact(g) is not None:
            continue
        g = _gcd2(g, p)
    return g.canonical()


# ---------------------------------------------------------------------------
# Pfaffians and ranks over the fraction field


class SymbolicPfaffians:
    """Pfaffians of the principal submatrices of a skew polynomial matrix.

    Expansion along the first row with memoisation on the index subset, so
    all principal sub-Pfaffians share one cache.
    """

    def __init__(self, m, limit=DEFAULT_SYMBOLIC_LIMIT):
        self.n = len(m)
        if self.n > limit:
            raise ValueError("symbolic size limit")
        self.m = m
        self.nvars = m[0][0].nvars if self.n else 0
        self._cache = {0: MPoly.const(self.nvars, 1)}

    def of(self, indices):
        indices = sorted(indices)
        if len(indices) % 2:
            raise ValueError("odd-size Pfaffian")
        mask = 0
        for i in indices:
            mask |= 1 << i
        return self._pf(mask)

    def _pf(self, mask):
        hit = self._cache.get(mask)
        if hit is not None:
            return hit
        idx = [i for i in range(self.n) if mask >> i & 1]
        i0 = idx[0]
        row = self.m[i0]
        total = MPoly.zero(self.nvars)
        for k in range(1, len(idx)):
            a = row[idx[k]]
            if a.is_zero():
                continue
            sub = self._pf(mask & ~(1 << i0) & ~(1 << idx[k]))
            if sub.is_zero():
                continue
            term = a * sub
            total = total + term if k % 2 else total - term
        self._cache[mask] = total
        return total


def symbolic_pfaffian(m, limit=DEFAULT_SYMBOLIC_LIMIT):
    """Pfaffian of a skew matrix of polynomials (``Pf([[0,1],[-1,0]]) = 1``)."""
    n = len(m)
    if n % 2:
        raise ValueError("odd-size Pfaffian")
    if n == 0:
        raise ValueError("empty matrix")
    return SymbolicPfaffians(m, limit).of(range(n))


def poly_matrix_rank(m, max_terms=200000):
    """Rank of a polynomial matrix over the rational function field.

    Fraction-free (Bareiss) elimination over Q[x] with full pivoting on the
    sparsest available entry.  ``max_terms`` bounds the size of any
    intermediate entry; exceeding it raises ``ValueError``.
    """
    rows = [list(r) for r in m]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    prev = None
    r = 0
    active_cols = list(range(nc))
    while r < nr:
        best = None
        for i in range(r, nr):
            for j in active_cols:
                a = rows[i][j]
                if a:
                    key = (len(a.terms), a.degree())
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        rows[r], rows[pi] = rows[pi], rows[r]
        active_cols.remove(pj)
        prow = rows[r]
        pv = prow[pj]
        for i in range(r + 1, nr):
            row = rows[i]
            f = row[pj]
            for j in active_cols:
                x = pv * row[j]
                if f and prow[j]:
                    x = x - f * prow[j]
                if prev is not None and x:
                    q = x.divide_exact(prev)
                    if q is None:
                        raise ArithmeticError("inexact Bareiss division")
                    x = q
                if len(x.terms) > max_terms:
                    raise ValueError("symbolic size limit")
                row[j] = x
            row[pj] = MPoly.zero(pv.nvars)
        prev = pv
        r += 1
    return r
