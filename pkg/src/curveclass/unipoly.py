"""Univariate polynomials over Q and over algebraic extension towers.

UPoly is a dense coefficient sequence (lowest degree first) in one named
variable.  Coefficients are Fractions in the rational case and tower
elements (numfield.NFElement) otherwise; both support field arithmetic
through operator overloading, so the generic gcd / squarefree routines
below serve both.  Rational-only operations (Sturm counting, real root
isolation) go through the primitive integer kernel in _zpoly.
"""

import math
from fractions import Fraction
from typing import NamedTuple

from . import _zpoly as zp
from .errors import DegenerateInputError, PreconditionError


class UPoly:
    __slots__ = ("var", "coeffs")

    def __init__(self, var, coeffs):
        n = len(coeffs)
        while n and not coeffs[n - 1]:
            n -= 1
        self.var = var
        self.coeffs = tuple(coeffs[:n])

    @classmethod
    def from_ints(cls, var, ints):
        return cls(var, [Fraction(c) for c in ints])

    @classmethod
    def zero(cls, var):
        return cls(var, ())

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, UPoly)
            and self.var == other.var
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(self.var, out)

    def __sub__(self, other):
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] - c
        return UPoly(self.var, out)

    def __neg__(self):
        return UPoly(self.var, [-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            return UPoly(self.var, [c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly(self.var, ())
        out = [None] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                prod = ca * cb
                out[i + j] = prod if out[i + j] is None else out[i + j] + prod
        return UPoly(self.var, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        acc = UPoly(self.var, [1])
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def scale(self, k):
        return UPoly(self.var, [c * k for c in self.coeffs])

    def shift(self, n):
        if not self.coeffs:
            return self
        zero = self.coeffs[0] - self.coeffs[0]
        return UPoly(self.var, (zero,) * n + self.coeffs)

    def derivative(self):
        return UPoly(self.var, [i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return UPoly(self.var, [c / lc for c in self.coeffs])

    def eval(self, x):
        """Horner evaluation; x may be any ring element compatible with the
        coefficients (Fraction, tower element, UPoly for composition)."""
        if not self.coeffs:
            return x - x
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc

    def divmod(self, other):
        """Synthetic division; coefficient domain must be a field."""
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lc()
        q = []
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] / lb
            q.append(c)
            if c:
                for i, cb in enumerate(other.coeffs):
                    r[k + i] = r[k + i] - c * cb
        q.reverse()
        return UPoly(self.var, q), UPoly(self.var, r[: db if db > 0 else 0])

    def __repr__(self):
        terms = " + ".join(
            f"({c})*{self.var}^{i}" for i, c in enumerate(self.coeffs) if c
        )
        return f"UPoly[{terms or '0'}]"


def is_rational_poly(p: UPoly) -> bool:
    return all(isinstance(c, (Fraction, int)) for c in p.coeffs)


def to_zpoly(p: UPoly):
    """Clear denominators: returns (integer coefficient list, denominator)."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in p.coeffs], den


def from_zpoly(var, zcoeffs):
    return UPoly(var, [Fraction(c) for c in zcoeffs])


# ---------------------------------------------------------------------------
# Spec operations
# ---------------------------------------------------------------------------

def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic greatest common divisor over the coefficient field."""
    if a.is_zero() and b.is_zero():
        raise DegenerateInputError("gcd of two zero polynomials")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if is_rational_poly(a) and is_rational_poly(b):
        za, _ = to_zpoly(a)
        zb, _ = to_zpoly(b)
        return from_zpoly(a.var, zp.zgcd(za, zb)).monic()
    while b:
        b = b.monic()
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic()


def squarefree_part(a: UPoly) -> UPoly:
    """a / gcd(a, a'), monic: same distinct roots, all simple."""
    if a.is_zero():
        raise DegenerateInputError("zero polynomial has no squarefree part")
    if a.degree == 0:
        return a.monic()
    g = upoly_gcd(a, a.derivative())
    if g.degree == 0:
        return a.monic()
    q, r = a.divmod(g)
    assert r.is_zero()
    return q.monic()


def count_distinct_complex_roots(a: UPoly) -> int:
    if a.is_zero():
        raise DegenerateInputError("zero polynomial")
    return squarefree_part(a).degree


def _deflate_rational_root(zcoeffs, root):
    """Exact division by (x - root) for a rational root."""
    num, den = root.numerator, root.denominator
    # divide by (den*x - num), then the quotient keeps integer-primitivity
    q, r = zp.zdivmod(zcoeffs, [-num, den])
    assert not r
    den_l = 1
    for c in q:
        den_l = den_l * c.denominator // math.gcd(den_l, c.denominator)
    return [int(c * den_l) for c in q]


def sturm_count(a: UPoly, lo=None, hi=None) -> int:
    """Distinct real roots of squarefree rational a in the open interval
    (lo, hi); None means the corresponding infinity."""
    if a.is_zero():
        raise DegenerateInputError("zero polynomial")
    if not is_rational_poly(a):
        raise PreconditionError("sturm_count needs rational coefficients")
    za, _ = to_zpoly(a)
    if zp.zdeg(zp.zgcd(za, zp.zderiv(za))) > 0:
        raise PreconditionError("sturm_count needs a squarefree polynomial")
    za = zp.zprimitive(za)
    for endpoint in (lo, hi):
        if endpoint is not None:
            while zp.zsign_at(za, Fraction(endpoint)) == 0:
                za = _deflate_rational_root(za, Fraction(endpoint))
    if zp.zdeg(za) <= 0:
        return 0
    chain = zp.sturm_chain(za)
    return zp.sturm_count(
        chain,
        None if lo is None else Fraction(lo),
        None if hi is None else Fraction(hi),
    )


class IsolatingInterval(NamedTuple):
    low: Fraction
    high: Fraction

    def width(self):
        return self.high - self.low

    def mid(self):
        return (self.low + self.high) / 2


def isolate_real_roots(a: UPoly):
    """Disjoint isolating intervals, one per distinct real root of the
    squarefree part of a, ascending and Sturm-certified."""
    if a.is_zero():
        raise DegenerateInputError("zero polynomial")
    if not is_rational_poly(a):
        raise PreconditionError("isolate_real_roots needs rational coefficients")
    za, _ = to_zpoly(a)
    return [IsolatingInterval(lo, hi) for lo, hi in zp.zisolate(za)]


def refine_interval(a: UPoly, interval: IsolatingInterval, width) -> IsolatingInterval:
    za, _ = to_zpoly(squarefree_part(a))
    lo, hi = zp.zrefine(za, interval.low, interval.high, Fraction(width))
    return IsolatingInterval(lo, hi)


def rational_roots(a: UPoly):
    za, _ = to_zpoly(a)
    return zp.zrational_roots(za)


def sign_at(a: UPoly, x) -> int:
    za, _ = to_zpoly(a)
    return zp.zsign_at(za, Fraction(x))
