"""Bivariate helpers: polynomials in Q[x, y] viewed as y-polynomials with
Z[x] coefficients.

Resultants go through the Sylvester matrix with Bareiss fraction-free
elimination (exact divisions ride the Kronecker-packed kernel, with a
Hadamard-style bit bound so packed division is safe).  The bivariate gcd
is a primitive-PRS in y; it certifies non-zero-divisor denominators and
names the offending common component otherwise.
"""

import math
from fractions import Fraction

from . import _zpoly as zp
from .errors import PreconditionError
from .mpoly import MPoly, var_index
from .unipoly import UPoly

_XI = var_index("x")
_YI = var_index("y")


def to_y_dense(p: MPoly):
    """MPoly in x, y  ->  dense list over y of Z[x] coefficient lists
    (a common rational denominator is dropped; roots and ideals survive)."""
    if p.degree_in("s") > 0 or p.degree_in("t") > 0:
        raise PreconditionError("expected a polynomial in x, y only")
    if p.is_zero():
        return []
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    dy = max(e[_YI] for e in p.terms)
    dx = max(e[_XI] for e in p.terms)
    rows = [[0] * (dx + 1) for _ in range(dy + 1)]
    for e, c in p.terms.items():
        rows[e[_YI]][e[_XI]] = int(c * den)
    return [zp.ztrim(r) for r in rows]


def _trim_y(rows):
    n = len(rows)
    while n and not rows[n - 1]:
        n -= 1
    return rows[:n]


def from_y_dense(rows) -> MPoly:
    terms = {}
    for j, row in enumerate(rows):
        for i, c in enumerate(row):
            if c:
                e = [0, 0, 0, 0]
                e[_XI], e[_YI] = i, j
                terms[tuple(e)] = Fraction(c)
    return MPoly(terms)


def y_content(rows):
    """True gcd in Z[x] of all y-coefficients (Gauss: integer content gcd
    times the gcd of primitive parts)."""
    ic = 0
    g = None
    for row in rows:
        if not row:
            continue
        ic = math.gcd(ic, zp.zcontent(row))
        g = zp.zprimitive(row) if g is None else zp.zgcd(g, row)
        if g == [1] and ic == 1:
            return [1]
    if g is None:
        return []
    return zp.zscale(g, ic)


def y_primitive(rows):
    """Divide out the Z[x] content; leading y-coefficient made positive-lc."""
    rows = _trim_y(rows)
    if not rows:
        return rows
    g = y_content(rows)
    if g != [1]:
        rows = [zp.zdivexact(r, g) if r else [] for r in rows]
    if rows[-1][-1] < 0:
        rows = [zp.zneg(r) for r in rows]
    return rows


def _prem_y(a, b):
    """Pseudo-remainder in y; coefficients in Z[x]."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return _trim_y([list(row) for row in a])
    lb = b[-1]
    r = [list(row) for row in a]
    for k in range(da - db, -1, -1):
        r = _trim_y(r)
        if len(r) - 1 != k + db:
            r = [zp.zmul(row, lb) for row in r]
            continue
        top = r[-1]
        r = r[:-1]
        new = []
        for i, row in enumerate(r):
            t1 = zp.zmul(row, lb)
            j = i - k
            if 0 <= j <= db - 1:
                t1 = zp.zsub(t1, zp.zmul(b[j], top))
            new.append(t1)
        r = new
    return _trim_y(r)


def bivariate_gcd(p: MPoly, q: MPoly) -> MPoly:
    """gcd of two polynomials of Q[x, y], primitive over Z with positive
    leading coefficient; constant 1 when coprime."""
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    a, b = to_y_dense(p), to_y_dense(q)
    ca, cb = y_content(a), y_content(b)
    cg = zp.zgcd(ca, cb)
    pa, pb = y_primitive(a), y_primitive(b)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while len(pb) > 1:
        r = _prem_y(pa, pb)
        if not r:
            gy = pb
            break
        pa, pb = pb, y_primitive(r)
    else:
        gy = [[1]] if pb else pa
    gy = y_primitive(gy)
    out = [zp.zmul(row, cg) for row in gy]
    return from_y_dense(out)


# ---------------------------------------------------------------------------
# Sylvester resultant via Bareiss
# ---------------------------------------------------------------------------

def resultant_y(p: MPoly, q: MPoly) -> UPoly:
    """Res_y(p, q) as a polynomial in x over Q (up to a positive rational
    factor, which is irrelevant for its roots)."""
    a, b = to_y_dense(p), to_y_dense(q)
    m, n = len(a) - 1, len(b) - 1
    if m < 0 or n < 0:
        raise PreconditionError("resultant of the zero polynomial")
    if m == 0:
        return UPoly("x", [Fraction(c) for c in _zpow(a[0], n)])
    if n == 0:
        return UPoly("x", [Fraction(c) for c in _zpow(b[0], m)])
    size = m + n
    mat = []
    for i in range(n):  # rows of a-coefficients
        row = [[] for _ in range(size)]
        for j, c in enumerate(reversed(a)):
            row[i + j] = list(c)
        mat.append(row)
    for i in range(m):  # rows of b-coefficients
        row = [[] for _ in range(size)]
        for j, c in enumerate(reversed(b)):
            row[i + j] = list(c)
        mat.append(row)
    det = _bareiss(mat)
    return UPoly("x", [Fraction(c) for c in det])


def _zpow(base, n):
    acc = [1]
    for _ in range(n):
        acc = zp.zmul(acc, base)
    return acc


def _bareiss(mat):
    """Fraction-free determinant of a matrix of Z[x] entries."""
    n = len(mat)
    # Hadamard-style bound on minor coefficient bits, for packed division
    total_bits = 16 + n.bit_length() * n
    for row in mat:
        total_bits += max((zp._max_bits(e) for e in row), default=0)
        total_bits += max((len(e) for e in row), default=1).bit_length()
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not mat[k][k]:
            for i in range(k + 1, n):
                if mat[i][k]:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return []
        pivot = mat[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = zp.zsub(zp.zmul(mat[i][j], pivot), zp.zmul(mat[i][k], mat[k][j]))
                mat[i][j] = zp.zdivexact(num, prev, quot_bits=total_bits) if num else []
            mat[i][k] = []
        prev = pivot
    out = mat[n - 1][n - 1]
    return zp.zneg(out) if sign < 0 else out


def bivariate_divexact_y(p: MPoly, g: MPoly) -> MPoly:
    """Exact quotient p / g of polynomials in Q[x, y] (long division in y;
    each leading-coefficient division is exact in Q[x] by Gauss)."""
    from .unipoly import UPoly

    def rows_to_upolys(rows):
        return [UPoly("x", [Fraction(c) for c in r]) for r in rows]

    a = rows_to_upolys(to_y_dense(p))
    b = rows_to_upolys(to_y_dense(g))
    db = len(b) - 1
    quot = [UPoly("x", ()) for _ in range(len(a) - db)]
    while a and len(a) - 1 >= db:
        while a and a[-1].is_zero():
            a.pop()
        if not a or len(a) - 1 < db:
            break
        q, r = a[-1].divmod(b[-1])
        assert r.is_zero(), "inexact bivariate division"
        k = len(a) - 1 - db
        quot[k] = q
        for i in range(db + 1):
            a[k + i] = a[k + i] - q * b[i]
        a.pop()
    assert all(c.is_zero() for c in a), "inexact bivariate division"
    out = MPoly()
    for j, q in enumerate(quot):
        for i, c in enumerate(q.coeffs):
            if c:
                e = [0, 0, 0, 0]
                e[_XI], e[_YI] = i, j
                out = out + MPoly({tuple(e): c})
    return out


def squarefree_part_y(p: MPoly) -> MPoly:
    """Squarefree part of p with respect to y (same distinct y-roots over
    the function field Q(x))."""
    d = p.deriv("y")
    if d.is_zero():
        return p
    g = bivariate_gcd(p, d)
    if g.is_constant():
        return p
    return bivariate_divexact_y(p, g)
