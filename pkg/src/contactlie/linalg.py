"""Exact rational linear algebra.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  Vectors are tuples of Fractions; matrices are lists of rows.
Elimination is fraction-free (Bareiss) over the integers after clearing row
denominators, which keeps the hot path -- ranks of structure matrices at
integer points -- in plain integer arithmetic.
"""

from fractions import Fraction
from math import lcm

from gmpy2 import mpz

Rat = Fraction


def to_rat(x):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vec(xs):
    return tuple(to_rat(x) for x in xs)


def zero_vec(n):
    return (Fraction(0),) * n


def unit_vec(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def is_zero_vec(v):
    return not any(v)


def dot(u, v):
    s = Fraction(0)
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def transpose(m):
    return [list(col) for col in zip(*m)]


def mat_mul(a, b):
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def integer_rows(m):
    """Scale each row by the lcm of its denominators; returns int rows."""
    out = []
    for row in m:
        den = 1
        for x in row:
            if type(x) is Fraction and x._denominator != 1:
                den = lcm(den, x._denominator)
        out.append([mpz(int(x * den)) if den != 1 else mpz(int(x)) for x in row])
    return out


def bareiss(rows, ncols, reduce=False):
    """Fraction-free elimination, in place on a list of integer rows.

    Returns ``(pivot_cols, d)``.  The first ``len(pivot_cols)`` rows are the
    pivot rows in order.  With ``reduce=True`` the elimination is also
    applied above each pivot (fraction-free Gauss-Jordan); afterwards every
    pivot entry equals ``d`` and the reduced row echelon form is ``rows/d``.
    """
    nrows = len(rows)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = None
        best = 0
        for i in range(r, nrows):
            x = rows[i][c]
            if x:
                ax = -x if x < 0 else x
                if p is None or ax < best:
                    best, p = ax, i
                    if ax == 1:
                        break
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        pv = prow[c]
        lo = c + 1 if not reduce else 0
        nz = [j for j in range(lo, ncols) if prow[j] and j != c]
        span = range(lo, ncols)
        others = range(nrows) if reduce else range(r + 1, nrows)
        for i in others:
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if prev == 1:
                if pv != 1:
                    for j in span:
                        if row[j]:
                            row[j] *= pv
                if f:
                    for j in nz:
                        row[j] -= f * prow[j]
            else:
                if f:
                    for j in span:
                        if row[j] or prow[j]:
                            row[j] = (pv * row[j] - f * prow[j]) // prev
                elif pv != prev:
                    for j in span:
                        if row[j]:
                            row[j] = (pv * row[j]) // prev
            row[c] = 0
        prev = pv
        pivots.append(c)
        r += 1
    return pivots, prev


def rank(m):
    """Rank of a rational matrix (list of rows)."""
    if not m or not m[0]:
        return 0
    rows = [r for r in integer_rows(m) if any(r)]
    pivots, _ = bareiss(rows, len(m[0]))
    return len(pivots)


def int_rank(rows, ncols):
    """Rank of an integer matrix; ``rows`` is consumed."""
    rows = [[mpz(x) for x in r] for r in rows if any(r)]
    if not rows:
        return 0
    pivots, _ = bareiss(rows, ncols)
    return len(pivots)


def rref(m, ncols=None):
    """Reduced row echelon form: ``(nonzero_rows, pivot_cols)``."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    rows = [r for r in integer_rows(m) if any(r)]
    if not rows:
        return [], []
    pivots, d = bareiss(rows, ncols, reduce=True)
    out = []
    for i in range(len(pivots)):
        out.append(tuple(Fraction(int(x), int(d)) for x in rows[i]))
    return out, pivots


def rank_kernel(m, ncols=None):
    """Rank and a reduced-echelon basis of the right kernel ``{v : m v = 0}``."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    red, pivots = rref(m, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(tuple(v))
    if basis:
        basis, _ = rref(basis, ncols)
    return len(pivots), basis


def kernel(m, ncols=None):
    return rank_kernel(m, ncols)[1]


def span_basis(vectors, n):
    """Reduced echelon basis of the span of ``vectors`` (length ``n``)."""
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return []
    return rref(vectors, n)[0]


def in_span(basis, v):
    """Whether ``v`` lies in the span of a reduced echelon ``basis``."""
    return coordinates(basis, v) is not None


def coordinates(basis, v):
    """Coordinates of ``v`` in a reduced echelon basis, or ``None``."""
    coords = []
    w = list(v)
    for b in basis:
        pc = next(i for i, x in enumerate(b) if x)
        c = w[pc]
        coords.append(c)
        if c:
            for j, bj in enumerate(b):
                if bj:
                    w[j] -= c * bj
    if any(w):
        return None
    return tuple(coords)


def intersect(basis_a, basis_b, n):
    """Reduced echelon basis of the intersection of two spans."""
    if not basis_a or not basis_b:
        return []
    # solve sum a_i A_i = sum b_j B_j
    cols = list(basis_a) + [tuple(-x for x in b) for b in basis_b]
    m = [[c[k] for c in cols] for k in range(n)]
    ker = kernel(m, len(cols))
    vecs = []
    na = len(basis_a)
    for kv in ker:
        w = [Fraction(0)] * n
        for i in range(na):
            if kv[i]:
                for k in range(n):
                    w[k] += kv[i] * basis_a[i][k]
        vecs.append(tuple(w))
    return span_basis(vecs, n)


def solve(m, b):
    """A solution ``x`` of ``m x = b`` or ``None`` when inconsistent."""
    n = len(m[0]) if m else 0
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    red, pivots = rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(red, pivots):
        x[pc] = row[n]
    return tuple(x)


def determinant(m):
    """Determinant via fraction-free elimination."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in m:
        den = 1
        for x in row:
            x = to_rat(x)
            if x.denominator != 1:
                den = lcm(den, x.denominator)
        scale /= den
        rows.append([int(to_rat(x) * den) for x in row])
    sign = 1
    prev = 1
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            sign = -sign
        pv = rows[c][c]
        for i in range(c + 1, n):
            row = rows[i]
            f = row[c]
            for j in range(c + 1, n):
                row[j] = (pv * row[j] - f * rows[c][j]) // prev
            row[c] = 0
        prev = pv
    return sign * prev * scale


def pfaffian(m):
    """Pfaffian of a skew-symmetric rational matrix.

    Convention ``Pf([[0, 1], [-1, 0]]) = 1``.  Uses skew Gaussian
    elimination: with ``m = [[0, a, u], [-a, 0, v], [-u, -v, C]]`` one has
    ``Pf(m) = a * Pf(C + (v u^T - u v^T) / a)``.
    """
    n = len(m)
    if n % 2:
        raise ValueError("odd-size Pfaffian")
    a = [[to_rat(x) for x in row] for row in m]
    if not is_skew(a):
        raise ValueError("Pfaffian of a non-skew matrix")
    result = Fraction(1)
    idx = list(range(n))
    while idx:
        i0 = idx[0]
        j = next((k for k in idx[1:] if a[i0][k]), None)
        if j is None:
            return Fraction(0)
        # bring j to the second position: a transposition flips the sign
        pos = idx.index(j)
        if pos != 1:
            idx[1], idx[pos] = idx[pos], idx[1]
            result = -result
        i1 = idx[1]
        piv = a[i0][i1]
        result *= piv
        rest = idx[2:]
        u = [a[i0][k] for k in rest]
        v = [a[i1][k] for k in rest]
        for p, ip in enumerate(rest):
            row = a[ip]
            vp, up = v[p], u[p]
            if not (vp or up):
                continue
            for q, iq in enumerate(rest):
                if q == p:
                    continue
                d = vp * u[q] - up * v[q]
                if d:
                    row[iq] += d / piv
        idx = rest
    return result


def is_skew(m):
    n = len(m)
    return all(m[i][i] == 0 for i in range(n)) and all(
        m[i][j] == -m[j][i] for i in range(n) for j in range(i + 1, n)
    )


# ---------------------------------------------------------------------------
# Univariate polynomials as coefficient lists, lowest degree first.


def upoly_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def upoly_divmod(a, b):
    a = upoly_trim(a)
    b = upoly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lb
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[i + k] -= c * bi
        a = upoly_trim(a)
    return q, a


def upoly_gcd(a, b):
    a, b = upoly_trim(a), upoly_trim(b)
    while b:
        _, r = upoly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    return [c / a[-1] for c in a]


def upoly_derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


def upoly_eval(p, x):
    s = Fraction(0)
    for c in reversed(p):
        s = s * x + c
    return s


def is_squarefree(p):
    """Whether ``p`` has no repeated roots (over an algebraic closure)."""
    p = upoly_trim(p)
    return len(upoly_gcd(p, upoly_derivative(p))) <= 1


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p):
    """Distinct rational roots of ``p`` and the leftover factor without them.

    Returns ``(roots, rest)`` where ``rest`` is monic with no rational roots.
    """
    p = upoly_trim(p)
    if not p:
        raise ValueError("zero polynomial")
    g = upoly_gcd(p, upoly_derivative(p))
    sq, _ = upoly_divmod(p, g) if len(g) > 1 else (p, None)
    sq = upoly_trim(sq)
    roots = []
    if not sq[0]:
        roots.append(Fraction(0))
        while sq and not sq[0]:
            sq = sq[1:]
    den = 1
    for c in sq:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in sq]
    lead, const = ints[-1], ints[0]
    if len(sq) > 1:
        for dn in _divisors(lead):
            for nm in _divisors(const):
                for cand in (Fraction(nm, dn), Fraction(-nm, dn)):
                    if cand not in roots and not upoly_eval(sq, cand):
                        roots.append(cand)
    rest = upoly_trim(p)
    for r in roots:
        while True:
            q, rem = upoly_divmod(rest, [-r, Fraction(1)])
            if rem:
                break
            rest = q
    rest = [c / rest[-1] for c in rest]
    return sorted(roots), rest


def _upoly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _apply_poly(m, p, v):
    """``p(m) v`` by Horner's rule."""
    acc = [Fraction(0)] * len(v)
    for c in reversed(p):
        acc = mat_vec(m, acc)
        if c:
            acc = [a + c * x for a, x in zip(acc, v)]
    return acc


def _vector_minimal_polynomial(m, v):
    """Monic generator of ``{p : p(m) v = 0}``."""
    krylov = [list(v)]
    while True:
        nxt = mat_vec(m, krylov[-1])
        cols = [[k[i] for k in krylov] for i in range(len(v))]
        sol = solve(cols, nxt)
        if sol is not None:
            return [-c for c in sol] + [Fraction(1)]
        krylov.append(nxt)


def minimal_polynomial(m):
    """Minimal polynomial of a square matrix (monic, lowest degree first).

    Computed as the lcm of the minimal polynomials of the standard basis
    vectors; vectors already killed by the running lcm are skipped.
    """
    n = len(m)
    if n == 0:
        return [Fraction(1)]
    m = [[to_rat(x) for x in row] for row in m]
    result = [Fraction(1)]
    for i in range(n):
        e = unit_vec(n, i)
        if not any(_apply_poly(m, result, e)):
            continue
        pv = _vector_minimal_polynomial(m, e)
        g = upoly_gcd(result, pv)
        quotient, _ = upoly_divmod(pv, g)
        result = _upoly_mul(result, quotient)
        lead = result[-1]
        result = [c / lead for c in result]
    return result
