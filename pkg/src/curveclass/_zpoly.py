"""Dense integer-polynomial kernel.

Polynomials are plain lists of Python ints, lowest degree first, with no
trailing zeros (the zero polynomial is the empty list).  Everything exact;
the only floating point anywhere in the package lives in the numeric fuzz
oracles of the test suite.

Multiplication and exact division switch to Kronecker substitution (pack
the coefficients into one big integer, use CPython's fast bignum ops,
unpack balanced digits) once operands are large enough; big-degree gcds go
through a verified evaluation bound (divide-and-check) with a subresultant
remainder sequence as the fallback.  Sturm chains stay on primitive-part
pseudo-remainders so sign sequences are preserved.
"""

from fractions import Fraction
from math import gcd as int_gcd

_KRONECKER_CUTOFF = 24  # schoolbook below this many coefficient products


def ztrim(a):
    """Strip trailing zero coefficients in place-free fashion."""
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def zdeg(a):
    return len(a) - 1


def zadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return ztrim(out)


def zsub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return ztrim(out)


def zneg(a):
    return [-c for c in a]


def zscale(a, k):
    if k == 0:
        return []
    return [c * k for c in a]


def zshift(a, n):
    """Multiply by x**n."""
    if not a:
        return []
    return [0] * n + list(a)


def _max_bits(a):
    return max((c.bit_length() for c in a), default=0)


def _pack(a, width):
    """Evaluate a at 2**width (Horner on ints)."""
    acc = 0
    for c in reversed(a):
        acc = (acc << width) + c
    return acc


def _unpack(n, width, count):
    """Balanced base-2**width digits of n; inverse of _pack when digits fit."""
    base = 1 << width
    half = base >> 1
    out = []
    for _ in range(count):
        if n == 0:
            break
        r = n & (base - 1)
        if r >= half:
            r -= base
        out.append(r)
        n = (n - r) >> width
    return ztrim(out)


def zmul(a, b):
    if not a or not b:
        return []
    la, lb = len(a), len(b)
    if la * lb <= _KRONECKER_CUTOFF * _KRONECKER_CUTOFF:
        out = [0] * (la + lb - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return ztrim(out)
    width = _max_bits(a) + _max_bits(b) + min(la, lb).bit_length() + 2
    prod = _pack(a, width) * _pack(b, width)
    return _unpack(prod, width, la + lb - 1)


def zdivmod(a, b):
    """Long division over Q, returned as Fraction lists (exact)."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lb = Fraction(b[-1])
    db = len(b) - 1
    while len(ztrim(r)) - 1 >= db and ztrim(r):
        r = ztrim(r)
        k = len(r) - 1 - db
        c = r[-1] / lb
        q[k] = c
        for i, cb in enumerate(b):
            r[k + i] -= c * cb
        r = r[: len(r) - 1]
    return q, [Fraction(c) for c in ztrim(r)]


def zdivexact(a, b, quot_bits=None):
    """Exact quotient a // b in Z[x]; raises ValueError if not divisible.

    If quot_bits bounds the quotient's coefficient size, Kronecker division
    is used and verified; otherwise classical top-down division.
    """
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    dq = len(a) - len(b)
    if dq < 0:
        raise ValueError("not divisible")
    if quot_bits is not None and len(a) > _KRONECKER_CUTOFF:
        width = max(quot_bits, _max_bits(a), _max_bits(b)) + 4
        qa, qb = _pack(a, width), _pack(b, width)
        quot, rem = divmod(qa, qb)
        if rem == 0:
            q = _unpack(quot, width, dq + 1)
            if zmul(q, b) == ztrim(list(a)):
                return q
        # bound was optimistic; fall through to the classical path
    r = list(a)
    q = [0] * (dq + 1)
    lb = b[-1]
    db = len(b) - 1
    for k in range(dq, -1, -1):
        top = r[k + db]
        if top % lb:
            raise ValueError("not divisible")
        c = top // lb
        q[k] = c
        if c:
            for i, cb in enumerate(b):
                r[k + i] -= c * cb
    if any(r[:db]):
        raise ValueError("not divisible")
    return ztrim(q)


def zcontent(a):
    g = 0
    for c in a:
        g = int_gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def zprimitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return []
    g = zcontent(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def zderiv(a):
    return ztrim([i * c for i, c in enumerate(a)][1:])


def zeval_int(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def zeval_frac(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def zsign_at(a, x):
    """Sign of a at the rational point x (x a Fraction or int)."""
    if not a:
        return 0
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    # sign(a(n/d)) = sign(sum c_i n^i d^(deg-i)) since d > 0
    acc = a[-1]
    dpow = 1
    for c in reversed(a[:-1]):
        dpow *= den
        acc = acc * num + c * dpow
    return (acc > 0) - (acc < 0)


def zsign_inf(a, positive):
    """Sign of a at +infinity (positive=True) or -infinity."""
    if not a:
        return 0
    lc = a[-1]
    s = 1 if lc > 0 else -1
    if not positive and zdeg(a) % 2 == 1:
        s = -s
    return s


# ---------------------------------------------------------------------------
# gcd: verified evaluation for large inputs, subresultant PRS fallback
# ---------------------------------------------------------------------------

def _prem(a, b):
    """Pseudo-remainder: (lc(b) ** (deg a - deg b + 1)) * a  rem  b."""
    da, db = zdeg(a), zdeg(b)
    if da < db:
        return list(a)
    lb = b[-1]
    r = list(a)
    for k in range(da - db, -1, -1):
        r = ztrim(r)
        if zdeg(r) != k + db:
            r = zscale(r, lb)
            continue
        top = r[-1]
        r = zsub(zscale(r[:-1], lb), zscale(zshift(b[:-1], k), top))
    return ztrim(r)


def _gcd_prs(a, b):
    """Primitive-PRS gcd of primitive inputs (subresultant-free, adequate
    at the sizes that reach this fallback)."""
    while b:
        r = _prem(a, b)
        a, b = b, zprimitive(r)
    return zprimitive(a)


def _mignotte_bits(a):
    """Bit bound on coefficients of any monic-content divisor of a."""
    return len(a) + _max_bits(a) + len(a).bit_length() + 2


def zgcd(a, b):
    """gcd in Z[x], primitive with positive leading coefficient."""
    a, b = zprimitive(a), zprimitive(b)
    if not a:
        return b
    if not b:
        return a
    if zdeg(a) < zdeg(b):
        a, b = b, a
    if zdeg(b) == 0:
        return [1]
    if len(a) <= 12:
        return _gcd_prs(a, b)
    # verified evaluation: pick xi so large that a reconstructed common
    # divisor passing both exact divisions must be the full gcd
    guard = max(_mignotte_bits(a), _mignotte_bits(b)) + len(a).bit_length() + 4
    for attempt in range(5):
        width = guard + attempt * 32
        xi = 1 << width
        g_int = int_gcd(zeval_int(a, xi), zeval_int(b, xi))
        g = zprimitive(_unpack(g_int, width, zdeg(b) + 1))
        if not g:
            continue
        try:
            qb = max(_max_bits(a), _max_bits(b)) + guard
            zdivexact(a, g, quot_bits=qb)
            zdivexact(b, g, quot_bits=qb)
            return g
        except ValueError:
            continue
    return _gcd_prs(a, b)


def zsquarefree(a):
    """Squarefree part, primitive, positive leading coefficient."""
    if not a:
        raise ValueError("zero polynomial has no squarefree part")
    a = zprimitive(a)
    if zdeg(a) == 0:
        return [1]
    g = zgcd(a, zderiv(a))
    if zdeg(g) == 0:
        return a
    return zprimitive(zdivexact(a, g, quot_bits=_mignotte_bits(a)))


def zyun(a):
    """Yun squarefree decomposition: list of (multiplicity, factor) with
    a = content * prod(factor ** multiplicity); factors primitive,
    squarefree, pairwise coprime, nonconstant."""
    a = zprimitive(a)
    if zdeg(a) <= 0:
        return []
    d = zderiv(a)
    g = zgcd(a, d)
    if zdeg(g) == 0:
        return [(1, a)]
    qb = _mignotte_bits(a)
    w = zdivexact(a, g, quot_bits=qb)
    z = zsub(zdivexact(d, g, quot_bits=qb), zderiv(w))
    out = []
    i = 1
    while zdeg(w) > 0:
        h = zgcd(w, z)
        if zdeg(h) > 0:
            out.append((i, h))
        w = zdivexact(w, h, quot_bits=qb)
        z = zsub(zdivexact(z, h, quot_bits=qb), zderiv(w))
        i += 1
    return out


def zrational_roots(a, max_den_bits=24):
    """Rational roots of a (no multiplicity), ascending.

    Roots are recognised from tightly refined isolating intervals and
    verified exactly, so coefficient size never hurts; denominators above
    2**max_den_bits are out of recognition range (desk-scale roots are
    small rationals).
    """
    if not a:
        raise ValueError("zero polynomial")
    sf = zsquarefree(a)
    if zdeg(sf) == 0:
        return []
    width = Fraction(1, 1 << (2 * max_den_bits + 4))
    roots = []
    for lo, hi in zisolate(sf):
        lo, hi = zrefine(sf, lo, hi, width)
        cand = ((lo + hi) / 2).limit_denominator(1 << max_den_bits)
        if lo < cand < hi and zsign_at(sf, cand) == 0:
            roots.append(cand)
    return roots


# ---------------------------------------------------------------------------
# Sturm chains (primitive-part pseudo-remainders, sign-preserving)
# ---------------------------------------------------------------------------

def zprimitive_pos(a):
    """Divide out the (positive) content, keeping the sign of a."""
    if not a:
        return []
    g = zcontent(a)
    return [c // g for c in a]


def sturm_chain(a):
    """Sturm chain of a squarefree primitive polynomial.

    Pseudo-remainders with the multiplier forced positive, then positive
    content divided out, so the chain has the exact sign behaviour of the
    classical rational Sturm sequence.
    """
    chain = [a]
    b = zprimitive_pos(zderiv(a))
    while b:
        chain.append(b)
        prev = chain[-2]
        r = _prem(prev, b)
        # prem multiplied prev by lc(b)**(delta+1); flip if that factor < 0
        if b[-1] < 0 and (zdeg(prev) - zdeg(b) + 1) % 2 == 1:
            r = zneg(r)
        b = zprimitive_pos(zneg(r))
    return chain


def _variations(signs):
    prev = 0
    count = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def sturm_count(chain, lo=None, hi=None):
    """Distinct real roots in the open interval (lo, hi); None = infinity.

    Finite endpoints must not be roots of chain[0]; callers deflate exact
    rational roots first (see unipoly.sturm_count).
    """
    if lo is not None and zsign_at(chain[0], lo) == 0:
        raise ValueError("endpoint is a root; deflate it first")
    if hi is not None and zsign_at(chain[0], hi) == 0:
        raise ValueError("endpoint is a root; deflate it first")
    if lo is None:
        va = _variations([zsign_inf(p, positive=False) for p in chain])
    else:
        va = _variations([zsign_at(p, lo) for p in chain])
    if hi is None:
        vb = _variations([zsign_inf(p, positive=True) for p in chain])
    else:
        vb = _variations([zsign_at(p, hi) for p in chain])
    return va - vb


def zroot_bound(a):
    """Cauchy bound: all real roots lie in (-B, B)."""
    lc = abs(a[-1])
    m = max((abs(c) for c in a[:-1]), default=0)
    return Fraction(m, lc) + 2


def zisolate(a):
    """Disjoint open isolating intervals for the real roots of the
    squarefree part of a, ascending, each certified by a Sturm count of 1
    and nonzero endpoint signs."""
    if not a:
        raise ValueError("zero polynomial")
    sf = zsquarefree(a)
    if zdeg(sf) == 0:
        return []
    chain = sturm_chain(sf)
    total = sturm_count(chain)
    if total == 0:
        return []
    bound = zroot_bound(sf)

    def endpoint(x):
        # nudge until the endpoint is not a root (keeps intervals open/clean)
        step = Fraction(1, 2)
        while zsign_at(sf, x) == 0:
            x += step / 64
            step /= 2
        return x

    out = []
    stack = [(endpoint(-bound), endpoint(bound), total)]
    while stack:
        lo, hi, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        mid = endpoint((lo + hi) / 2)
        left = sturm_count(chain, lo, mid)
        stack.append((mid, hi, count - left))
        stack.append((lo, mid, left))
    out.sort()
    return out


def zrefine(a, lo, hi, width):
    """Shrink an isolating interval of squarefree a below the given width."""
    slo = zsign_at(a, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = zsign_at(a, mid)
        if sm == 0:
            # the root is exactly mid; box it well inside the old interval
            eps = min(mid - lo, hi - mid, width) / 4
            return mid - eps, mid + eps
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi
