"""Algebraic extension towers of depth <= 2 with dynamic evaluation.

A NumberField is a chain  Q -> Q[a]/(m1(a)) -> Q[a][b]/(m2(a, b))  whose
level polynomials are monic and squarefree over their base but are allowed
to be reducible: no factorization is ever performed up front.  Arithmetic
proceeds as if the tower were a field; the moment an inversion meets a
nontrivial zero divisor the offending factor is thrown as a SplitEvent
(classical dynamic evaluation) and the caller re-runs on each branch.

Real embeddings pair the tower with isolating intervals, one per level,
and narrow them on demand; sign queries combine interval refinement with
exact zero tests, so they are certified, never numeric guesses.

Element representations are nested tuples, trimmed of trailing zeros and
reduced modulo every level: depth 0 is a Fraction, depth k >= 1 is a tuple
of depth-(k-1) reps.
"""

from fractions import Fraction

from . import _zpoly as zp
from .intervals import Interval, eval_poly
from .unipoly import UPoly, to_zpoly


class SplitEvent(Exception):
    """A zero divisor revealed a factor of a level polynomial.

    level: index of the tower level whose minimal polynomial splits;
    factor_rep: monic dense rep of the factor over that level's base.
    """

    def __init__(self, level, factor_rep):
        self.level = level
        self.factor_rep = factor_rep
        super().__init__(f"zero divisor splits level {level}")


# ---------------------------------------------------------------------------
# raw rep arithmetic; `mps` is the tuple of minpoly reps of the ambient tower
# (mps[k] has depth-k coefficient reps), `depth` the rep's own depth
# ---------------------------------------------------------------------------

def _rzero(depth):
    return Fraction(0) if depth == 0 else ()


def _rone(depth):
    return Fraction(1) if depth == 0 else (_rone(depth - 1),)


def _is_rzero(rep, depth):
    return rep == 0 if depth == 0 else rep == ()


def _rtrim(seq, depth):
    n = len(seq)
    while n and _is_rzero(seq[n - 1], depth - 1):
        n -= 1
    return tuple(seq[:n])


def _radd(a, b, depth):
    if depth == 0:
        return a + b
    out = list(a) + [_rzero(depth - 1)] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = _radd(out[i], c, depth - 1)
    return _rtrim(out, depth)


def _rneg(a, depth):
    if depth == 0:
        return -a
    return tuple(_rneg(c, depth - 1) for c in a)


def _rsub(a, b, depth):
    return _radd(a, _rneg(b, depth), depth)


def _rmul(mps, a, b, depth):
    """Fully reduced product of two depth-`depth` reps."""
    if depth == 0:
        return a * b
    if not a or not b:
        return ()
    out = [_rzero(depth - 1)] * (len(a) + len(b) - 1)
    sub = mps[: depth - 1]
    for i, ca in enumerate(a):
        if _is_rzero(ca, depth - 1):
            continue
        for j, cb in enumerate(b):
            out[i + j] = _radd(out[i + j], _rmul(sub, ca, cb, depth - 1), depth - 1)
    return _rmod(mps, out, depth)


def _rscale(mps, a, k, depth):
    """Multiply a depth-`depth` rep by a depth-(depth-1) coefficient."""
    sub = mps[: depth - 1]
    return _rtrim([_rmul(sub, c, k, depth - 1) for c in a], depth)


def _rmod(mps, a, depth):
    """Reduce the top variable of rep a modulo the monic mps[depth-1]."""
    a = list(_rtrim(a, depth))
    m = mps[depth - 1]
    dm = len(m) - 1
    sub = mps[: depth - 1]
    while len(a) - 1 >= dm:
        top = a[-1]
        k = len(a) - 1 - dm
        if not _is_rzero(top, depth - 1):
            for i in range(dm):
                a[k + i] = _rsub(a[k + i], _rmul(sub, top, m[i], depth - 1), depth - 1)
        a = list(_rtrim(a[:-1], depth))
    return tuple(a)


def _rdivmod(mps, a, b, depth):
    """Division of depth-`depth` reps with monic b (no modular reduction of
    the quotient/remainder beyond coefficient arithmetic)."""
    a = list(_rtrim(a, depth))
    db = len(b) - 1
    q = [_rzero(depth - 1)] * max(0, len(a) - db)
    sub = mps[: depth - 1]
    while a and len(a) - 1 >= db:
        top = a[-1]
        k = len(a) - 1 - db
        q[k] = top
        if not _is_rzero(top, depth - 1):
            for i in range(db):
                a[k + i] = _rsub(a[k + i], _rmul(sub, top, b[i], depth - 1), depth - 1)
        a = list(_rtrim(a[:-1], depth))
    return _rtrim(q, depth), tuple(a)


def _rinv_scalar(mps, c, depth):
    """Inverse of a depth-`depth` coefficient rep (c lives one level below a
    polynomial being inverted at depth+1)."""
    if depth == 0:
        if c == 0:
            raise ZeroDivisionError("inverting zero")
        return 1 / c
    return _rinv(mps, c, depth)


def _rinv(mps, a, depth):
    """Inverse of rep a modulo mps[depth-1]; SplitEvent on zero divisors."""
    if depth == 0:
        if a == 0:
            raise ZeroDivisionError("inverting zero")
        return 1 / a
    if _is_rzero(a, depth):
        raise ZeroDivisionError("inverting zero tower element")
    m = mps[depth - 1]
    sub = mps[: depth - 1]
    # extended Euclid with the invariant  r_i == s_i * a  (mod m)
    r0, s0 = tuple(m), _rzero(depth)
    r1, s1 = _rtrim(a, depth), (_rone(depth - 1),)
    while True:
        if not r1:
            g = _rmonic(mps, r0, depth)
            if len(g) - 1 <= 0:
                raise ArithmeticError("degenerate gcd in tower inversion")
            raise SplitEvent(depth - 1, g)
        if len(r1) == 1:
            c_inv = _rinv_scalar(sub, r1[0], depth - 1)
            return _rmod(mps, _rscale(mps, s1, c_inv, depth), depth)
        lc_inv = _rinv_scalar(sub, r1[-1], depth - 1)
        r1m = _rscale(mps, r1, lc_inv, depth)
        s1m = _rscale(mps, s1, lc_inv, depth)
        q, rem = _rdivmod(mps, r0, r1m, depth)
        s_next = _rmod(mps, _rsub(s0, _rmul_poly(mps, q, s1m, depth), depth), depth)
        r0, s0 = r1m, s1m
        r1, s1 = _rtrim(rem, depth), s_next


def _rmul_poly(mps, a, b, depth):
    """Convolution of two depth-`depth` reps without top-level reduction
    (coefficient products are still reduced)."""
    if not a or not b:
        return ()
    out = [_rzero(depth - 1)] * (len(a) + len(b) - 1)
    sub = mps[: depth - 1]
    for i, ca in enumerate(a):
        if _is_rzero(ca, depth - 1):
            continue
        for j, cb in enumerate(b):
            out[i + j] = _radd(out[i + j], _rmul(sub, ca, cb, depth - 1), depth - 1)
    return _rtrim(out, depth)


def _rmonic(mps, g, depth):
    lc_inv = _rinv_scalar(mps[: depth - 1], g[-1], depth - 1)
    return _rscale(mps, g, lc_inv, depth)


# ---------------------------------------------------------------------------
# fields and elements
# ---------------------------------------------------------------------------

class NumberField:
    """Tower of monic squarefree extensions over Q; depth 0, 1 or 2."""

    __slots__ = ("levels", "_mp")

    def __init__(self, levels=()):
        self.levels = tuple((str(v), tuple(m)) for v, m in levels)
        self._mp = tuple(m for _, m in self.levels)
        for k, m in enumerate(self._mp):
            if len(m) < 2:
                raise ValueError("level polynomial must be nonconstant")
            if not _is_rzero(_rsub(m[-1], _rone(k), k), k):
                raise ValueError("level polynomial must be monic")

    @property
    def depth(self):
        return len(self.levels)

    def level_degree(self, k):
        return len(self._mp[k]) - 1

    def degree(self):
        d = 1
        for k in range(self.depth):
            d *= self.level_degree(k)
        return d

    def var(self, k):
        return self.levels[k][0]

    def sub_field(self, k):
        return NumberField(self.levels[:k])

    def minpoly(self, k) -> UPoly:
        if k == 0:
            return UPoly(self.var(0), [Fraction(c) for c in self._mp[0]])
        base = self.sub_field(k)
        return UPoly(self.var(k), [NFElement(base, c) for c in self._mp[k]])

    def zero(self):
        return NFElement(self, _rzero(self.depth))

    def one(self):
        return NFElement(self, _rone(self.depth))

    def from_fraction(self, c):
        rep = Fraction(c)
        for d in range(1, self.depth + 1):
            rep = () if _is_rzero(rep, d - 1) else (rep,)
        return NFElement(self, rep)

    def gen(self, k):
        """Generator of level k as an element of the full tower."""
        if self.level_degree(k) == 1:
            # the generator is determined: m = var + c  =>  var = -c
            c = _rneg(self._mp[k][0], k)
            rep = () if _is_rzero(c, k) else (c,)
        else:
            rep = (_rzero(k), _rone(k))
        for _ in range(k + 1, self.depth):
            rep = (rep,) if rep else ()
        return NFElement(self, rep)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.levels == other.levels

    def __hash__(self):
        return hash(self.levels)

    def __repr__(self):
        parts = [f"{v}:deg{len(m) - 1}" for v, m in self.levels]
        return f"NumberField({', '.join(parts) or 'Q'})"

    # -- dynamic evaluation -------------------------------------------------

    def split_level(self, level, factor_rep):
        """Split the level polynomial by a monic factor; returns branch
        fields, factor branch first."""
        m = self._mp[level]
        f = tuple(factor_rep)
        q, rem = _rdivmod(self._mp[: level + 1], list(m), f, level + 1)
        if rem:
            raise ValueError("factor does not divide the level polynomial")
        fields = []
        for part in (f, q):
            if len(part) < 2:
                continue
            new_levels = [list(lv) for lv in self.levels]
            new_levels[level][1] = part
            if level == 0 and self.depth > 1:
                # re-reduce the level-1 polynomial's coefficients mod the branch
                sub_mps = (part,)
                m2 = [_rmod(sub_mps, c, 1) for c in self._mp[1]]
                new_levels[1][1] = _rtrim(m2, 2)
            fields.append(NumberField([tuple(lv) for lv in new_levels]))
        return fields

    def transfer(self, elem, target):
        """Re-reduce an element of this tower into a branch tower."""
        rep = elem.rep if isinstance(elem, NFElement) else elem
        return NFElement(target, _transfer_rep(rep, target, target.depth))


def _transfer_rep(rep, field, depth):
    if depth == 0:
        return rep
    red = [_transfer_rep(c, field.sub_field(depth - 1), depth - 1) for c in rep]
    return _rmod(field._mp[:depth], _rtrim(red, depth), depth)


class NFElement:
    """An element of a NumberField tower."""

    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep

    def is_zero(self):
        return _is_rzero(self.rep, self.field.depth)

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("elements of different towers")
            return other
        return self.field.from_fraction(other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, NFElement)):
            try:
                o = self._coerce(other)
            except ValueError:
                return False
            return self.rep == o.rep
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.rep))

    def __add__(self, other):
        o = self._coerce(other)
        return NFElement(self.field, _radd(self.rep, o.rep, self.field.depth))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, _rneg(self.rep, self.field.depth))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        d = self.field.depth
        return NFElement(self.field, _rmul(self.field._mp, self.rep, o.rep, d))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.field.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def inverse(self):
        """Multiplicative inverse; ZeroDivisionError on zero, SplitEvent on
        a nontrivial zero divisor."""
        return NFElement(self.field, _rinv(self.field._mp, self.rep, self.field.depth))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def is_rational(self):
        rep = self.rep
        d = self.field.depth
        while d > 0:
            if _is_rzero(rep, d):
                return True
            if len(rep) > 1:
                return False
            rep = rep[0]
            d -= 1
        return True

    def as_fraction(self):
        rep = self.rep
        d = self.field.depth
        while d > 0:
            if _is_rzero(rep, d):
                return Fraction(0)
            if len(rep) > 1:
                raise ValueError("element is not rational")
            rep = rep[0]
            d -= 1
        return Fraction(rep)

    def __repr__(self):
        return f"NFElement({self.rep!r} over {self.field!r})"


def nf_arith(op, a, b=None):
    """Spec-surface dispatcher; returns the SplitEvent instead of raising."""
    try:
        if op == "add":
            return a + b
        if op == "mul":
            return a * b
        if op == "invert":
            return a.inverse()
        if op == "is_zero":
            return a.is_zero()
    except SplitEvent as ev:
        return ev
    raise ValueError(f"unknown operation {op!r}")


def is_zero_or_split(e: NFElement) -> bool:
    """Definite zero test: True/False valid on the whole tower, SplitEvent
    when the answer differs between branches."""
    if e.is_zero():
        return True
    try:
        e.inverse()
        return False
    except ZeroDivisionError:
        return True


# ---------------------------------------------------------------------------
# real embeddings and certified signs
# ---------------------------------------------------------------------------

_BISECT_CAP = 64  # refinement rounds before escalating to the exact test


class RealEmbedding:
    """One real point of the tower: an isolating interval per level.

    Intervals only ever narrow, so sharing an embedding across queries is
    sound; the tower polynomial of each level certifies isolation.
    """

    __slots__ = ("field", "intervals")

    def __init__(self, field, intervals):
        self.field = field
        self.intervals = [Interval(lo, hi) for lo, hi in intervals]

    def clone_for(self, field):
        return RealEmbedding(field, [(iv.lo, iv.hi) for iv in self.intervals])

    def interval(self, k):
        return self.intervals[k]

    def refine(self, k):
        """Halve the level-k isolating interval."""
        iv = self.intervals[k]
        if k == 0:
            m1, _ = to_zpoly(self.field.minpoly(0))
            lo, hi = zp.zrefine(m1, iv.lo, iv.hi, iv.width() / 2)
            self.intervals[0] = Interval(lo, hi)
            return
        # level 1: bisect using the sign of m2(alpha, mid) at this embedding
        m2 = self.field.minpoly(1)
        mid = iv.mid()
        sm = nf_sign(m2.eval(_const_at(self.field, mid, 1)), self)
        if sm == 0:
            eps = min(mid - iv.lo, iv.hi - mid) / 4
            self.intervals[1] = Interval(mid - eps, mid + eps)
            return
        slo = nf_sign(m2.eval(_const_at(self.field, iv.lo, 1)), self)
        if sm == slo:
            self.intervals[1] = Interval(mid, iv.hi)
        else:
            self.intervals[1] = Interval(iv.lo, mid)

    def approx(self, digits=6):
        """Decimal point approximation (refined to the needed width)."""
        out = []
        width = Fraction(1, 10 ** digits)
        for k, iv in enumerate(self.intervals):
            while iv.width() > width:
                self.refine(k)
                iv = self.intervals[k]
            out.append(float(iv.mid()))
        return tuple(out)


def _const_at(field, c, depth_below):
    """Fraction c as an element of the sub-tower below the given level."""
    return field.sub_field(depth_below).from_fraction(c)


def _rep_intervals(e: NFElement, emb: RealEmbedding) -> Interval:
    """Interval enclosure of the element's value at the embedding."""
    return _rep_ival(e.rep, e.field.depth, emb)


def _rep_ival(rep, depth, emb):
    if depth == 0:
        return Interval(rep)
    coeffs = [_rep_ival(c, depth - 1, emb) for c in rep]
    if not coeffs:
        return Interval(0)
    return eval_poly(coeffs, emb.interval(depth - 1))


def nf_sign(e: NFElement, emb: RealEmbedding) -> int:
    """Exact sign of the element's value at the real embedding.

    Interval refinement up to a bisection cap, then the exact zero test;
    zero divisors surface as SplitEvents for the caller to branch on.
    """
    depth = e.field.depth
    if depth == 0:
        v = e.as_fraction()
        return (v > 0) - (v < 0)
    for round_no in range(_BISECT_CAP):
        iv = _rep_intervals(e, emb)
        if not iv.contains_zero():
            return iv.sign()
        emb.refine(round_no % depth)
    if is_zero_or_split(e):
        return 0
    # nonzero on the whole tower: keep narrowing, termination guaranteed
    for round_no in range(4096):
        iv = _rep_intervals(e, emb)
        if not iv.contains_zero():
            return iv.sign()
        emb.refine(round_no % depth)
    raise ArithmeticError("sign refinement failed to converge")


def real_embedding_sign(e: NFElement, emb: RealEmbedding) -> int:
    """Spec surface name for nf_sign."""
    return nf_sign(e, emb)


def level0_real_embeddings(field):
    """Embeddings of a depth-1 tower (one per real root of the level-0
    polynomial), ascending."""
    m1, _ = to_zpoly(field.minpoly(0))
    return [RealEmbedding(field, [(lo, hi)]) for lo, hi in zp.zisolate(m1)]


# ---------------------------------------------------------------------------
# polynomials with tower coefficients
# ---------------------------------------------------------------------------

def tower_poly_from_q(field, p: UPoly):
    """Lift a rational polynomial coefficientwise into the tower."""
    return UPoly(p.var, [field.from_fraction(c) for c in p.coeffs])


def tower_sturm_chain(p: UPoly):
    """Signed remainder chain over the tower field (true remainders;
    SplitEvents propagate from coefficient inversions)."""
    chain = [p]
    d = p.derivative()
    while d:
        chain.append(d)
        _, r = chain[-2].divmod(d)
        d = -r
    return chain


def tower_sturm_count(p: UPoly, emb: RealEmbedding, lo=None, hi=None) -> int:
    """Distinct real roots of squarefree p (tower coefficients) at the
    embedding, in the open interval (lo, hi); None = infinity.  Finite
    endpoints must not be roots."""
    chain = tower_sturm_chain(p)

    def var_at(point, positive=None):
        signs = []
        for q in chain:
            if not q:
                signs.append(0)
                continue
            if point is None:
                s = nf_sign(q.lc(), emb)
                if positive is False and q.degree % 2 == 1:
                    s = -s
            else:
                s = nf_sign(q.eval(_elem_const(q, point)), emb)
            signs.append(s)
        prev = 0
        count = 0
        for s in signs:
            if s == 0:
                continue
            if prev and s != prev:
                count += 1
            prev = s
        return count

    if lo is not None and nf_sign(p.eval(_elem_const(p, lo)), emb) == 0:
        raise ValueError("endpoint is a root")
    if hi is not None and nf_sign(p.eval(_elem_const(p, hi)), emb) == 0:
        raise ValueError("endpoint is a root")
    return var_at(lo, positive=False) - var_at(hi, positive=True)


def _elem_const(p: UPoly, c):
    """Fraction constant in the same coefficient domain as p."""
    lead = p.lc()
    if isinstance(lead, NFElement):
        return lead.field.from_fraction(c)
    return Fraction(c)


def tower_root_bound(p: UPoly, emb: RealEmbedding):
    """Rational B with all real roots of p at the embedding inside (-B, B)."""
    lc = p.lc()
    while True:
        iv = _rep_intervals(lc, emb) if isinstance(lc, NFElement) else Interval(lc)
        if not iv.contains_zero():
            break
        if nf_sign(lc, emb) == 0:  # splits or refines; sign 0 impossible: lc != 0
            raise ArithmeticError("vanishing leading coefficient")
    low = iv.abs_lower()
    top = Fraction(0)
    for c in p.coeffs[:-1]:
        civ = _rep_intervals(c, emb) if isinstance(c, NFElement) else Interval(c)
        top = max(top, civ.abs_upper())
    return top / low + 2


def isolate_tower_roots(p: UPoly, emb: RealEmbedding):
    """Disjoint isolating intervals for the real roots of squarefree p at
    the embedding, ascending."""
    if not p:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return []
    total = tower_sturm_count(p, emb)
    if total == 0:
        return []
    bound = tower_root_bound(p, emb)

    def sign_at(x):
        return nf_sign(p.eval(_elem_const(p, x)), emb)

    def endpoint(x):
        step = Fraction(1, 64)
        while sign_at(x) == 0:
            x += step
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
        left = tower_sturm_count(p, emb, lo, mid)
        stack.append((mid, hi, count - left))
        stack.append((lo, mid, left))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# construction helpers
# ---------------------------------------------------------------------------

def field_from_qpoly(var, p: UPoly) -> NumberField:
    """Depth-1 tower Q[var]/(p) from a rational polynomial (made monic)."""
    q = p.monic()
    return NumberField([(var, tuple(Fraction(c) for c in q.coeffs))])


def extend_field(base: NumberField, var, coeffs) -> NumberField:
    """Extend a depth-1 tower by a monic polynomial whose coefficients are
    base elements (NFElement list, low degree first)."""
    reps = tuple(c.rep if isinstance(c, NFElement) else base.from_fraction(c).rep for c in coeffs)
    return NumberField(list(base.levels) + [(var, reps)])


def rational_point_field(xvar, yvar, x0, y0) -> NumberField:
    """Degenerate tower for an exact rational point (x0, y0)."""
    f1 = NumberField([(xvar, (Fraction(-x0), Fraction(1)))])
    return extend_field(f1, yvar, [f1.from_fraction(-y0), f1.from_fraction(1)])
