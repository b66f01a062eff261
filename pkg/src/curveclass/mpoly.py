"""Multivariate polynomials over Q in the fixed universe {s, t, x, y},
monomial orders, Buchberger's algorithm, normal forms, elimination and
saturation.

s is reserved for the 1 - s*q saturation trick; t carries graph/fiber
variables; x, y are the plane coordinates.  Coefficients stay in Q the
whole way (no modular shortcuts): exactness is the product.  Everything is
deterministic: term order, pair selection and tie-breaking are all fixed,
so certificates reproduce byte-for-byte.
"""

import math
from fractions import Fraction

from .errors import PreconditionError

VARS = ("s", "t", "x", "y")
NVARS = len(VARS)
_ZERO_EXPS = (0, 0, 0, 0)


def var_index(name):
    try:
        return VARS.index(name)
    except ValueError:
        raise PreconditionError(f"unknown variable {name!r}; universe is {VARS}")


class MPoly:
    """Immutable sparse polynomial: exponent 4-tuples -> nonzero Fractions."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if type(c) is not Fraction:
                    c = Fraction(c)
                if c:
                    clean[tuple(e)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _raw(cls, terms):
        """Internal: terms already canonical (tuple keys, nonzero Fractions)."""
        self = cls.__new__(cls)
        object.__setattr__(self, "terms", terms)
        return self

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({_ZERO_EXPS: Fraction(c)})

    @classmethod
    def var(cls, name, power=1):
        e = [0] * NVARS
        e[var_index(name)] = power
        return cls({tuple(e): Fraction(1)})

    # -- basic queries ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name):
        i = var_index(name)
        return max((e[i] for e in self.terms), default=-1)

    def uses_only(self, names):
        allowed = {var_index(n) for n in names}
        return all(
            all(e[i] == 0 for i in range(NVARS) if i not in allowed)
            for e in self.terms
        )

    def variables(self):
        used = set()
        for e in self.terms:
            for i, p in enumerate(e):
                if p:
                    used.add(VARS[i])
        return used

    def is_constant(self):
        return all(e == _ZERO_EXPS for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[_ZERO_EXPS]

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return MPoly.const(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MPoly()
            return MPoly._raw({e: cc * c for e, cc in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        acc = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def deriv(self, name):
        i = var_index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MPoly(out)

    def primitive(self):
        """Scale to integer coefficients, content 1; sign preserved."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = math.gcd(num, abs(c.numerator * (den // c.denominator)))
        k = Fraction(den, num)
        return MPoly._raw({e: c * k for e, c in self.terms.items()})

    def __repr__(self):
        try:
            from .parsing import format_poly

            return f"MPoly({format_poly(self)})"
        except ImportError:
            return f"MPoly({sorted(self.terms.items())!r})"


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """Total order on exponent tuples; bigger key = bigger monomial."""

    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def key(self, exps):
        if self.name == "lex":
            return exps
        if self.name == "grevlex":
            return (sum(exps), tuple(-e for e in reversed(exps)))
        if self.name == "grlex":
            return (sum(exps), exps)
        raise ValueError(self.name)

    def __repr__(self):
        return f"MonomialOrder({self.name})"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")
GRLEX = MonomialOrder("grlex")


def leading_term(p: MPoly, order: MonomialOrder):
    e = max(p.terms, key=order.key)
    return e, p.terms[e]


def _divides(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


def _ediv(e1, e2):
    return tuple(a - b for a, b in zip(e1, e2))


def _elcm(e1, e2):
    return tuple(max(a, b) for a, b in zip(e1, e2))


def _mono_mul(p: MPoly, exps, coeff):
    if not coeff:
        return MPoly()
    return MPoly._raw(
        {tuple(a + b for a, b in zip(e, exps)): c * coeff for e, c in p.terms.items()}
    )


# ---------------------------------------------------------------------------
# division, Buchberger, reduced bases
# ---------------------------------------------------------------------------

class PolyIdeal:
    __slots__ = ("generators",)

    def __init__(self, generators):
        gens = tuple(g for g in generators if g)
        if not gens:
            raise PreconditionError("ideal needs at least one nonzero generator")
        self.generators = gens

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return f"PolyIdeal({len(self.generators)} generators)"


class GroebnerBasis:
    __slots__ = ("order", "basis", "reps")

    def __init__(self, order, basis, reps=None):
        self.order = order
        self.basis = tuple(basis)
        self.reps = reps  # per basis element: tuple of MPoly vs original gens

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def leading_exps(self):
        return [leading_term(g, self.order)[0] for g in self.basis]

    def __repr__(self):
        return f"GroebnerBasis({self.order.name}, {len(self.basis)} elements)"


def normal_form(p: MPoly, gb: GroebnerBasis, with_quotients=False):
    """Full remainder of multivariate division by the basis; zero iff p is
    in the ideal.  Divisor choice is the first basis element (fixed basis
    order) whose leading monomial divides, so the result is deterministic;
    on a reduced basis it is canonical regardless."""
    order = gb.order
    key = order.key
    lead = [leading_term(g, order) for g in gb.basis]
    tails = [
        [(e, c) for e, c in g.terms.items() if e != le]
        for g, (le, _) in zip(gb.basis, lead)
    ]
    quots = [{} for _ in gb.basis] if with_quotients else None
    rem = {}
    cur = dict(p.terms)
    while cur:
        e = max(cur, key=key)
        c = cur.pop(e)
        for i, (le, lc) in enumerate(lead):
            if all(a <= b for a, b in zip(le, e)):
                fe = tuple(a - b for a, b in zip(e, le))
                fc = c / lc
                for ge, gc in tails[i]:
                    ne = tuple(a + b for a, b in zip(ge, fe))
                    v = cur.get(ne, 0) - gc * fc
                    if v:
                        cur[ne] = v
                    else:
                        cur.pop(ne, None)
                if with_quotients:
                    quots[i][fe] = quots[i].get(fe, 0) + fc
                break
        else:
            rem[e] = c
    rem_poly = MPoly._raw(rem)
    if with_quotients:
        return rem_poly, [MPoly(qd) for qd in quots]
    return rem_poly


def spoly(f, g, order):
    ef, cf = leading_term(f, order)
    eg, cg = leading_term(g, order)
    l = _elcm(ef, eg)
    return _mono_mul(f, _ediv(l, ef), 1 / cf) - _mono_mul(g, _ediv(l, eg), 1 / cg)


def buchberger(ideal, order: MonomialOrder, with_reps=False) -> GroebnerBasis:
    """Reduced Groebner basis (product + chain criteria, normal selection).

    with_reps additionally tracks each basis element as a combination of
    the input generators, enabling membership certificates.
    """
    import heapq

    gens = list(ideal.generators if isinstance(ideal, PolyIdeal) else ideal)
    gens = [g for g in gens if g]
    if not gens:
        raise PreconditionError("no nonzero generators")

    key = order.key
    basis = []
    leads = []  # (exps, coeff) cached per basis element
    reps = []  # reps[i][j] = coefficient of gens[j] in basis[i]

    def push(p, rep):
        p_prim = p.primitive()
        e = max(p_prim.terms, key=key)
        if with_reps:
            scale = p_prim.terms[e] / p.terms[e]
            reps.append(tuple(r * scale for r in rep))
        basis.append(p_prim)
        leads.append((e, p_prim.terms[e]))

    for j, g in enumerate(gens):
        rep = [MPoly.const(1) if i == j else MPoly() for i in range(len(gens))] if with_reps else None
        push(g, rep)

    heap = []
    pending = set()

    def add_pair(i, j):
        l = _elcm(leads[i][0], leads[j][0])
        heapq.heappush(heap, (key(l), i, j))
        pending.add((i, j))

    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            add_pair(i, j)
    done = set()

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        done.add((i, j))
        li, lj = leads[i][0], leads[j][0]
        l = _elcm(li, lj)
        # product criterion
        if all(a + b == c for a, b, c in zip(li, lj, l)):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if _divides(leads[k][0], l):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    skip = True
                    break
        if skip:
            continue
        s = spoly(basis[i], basis[j], order)
        gb_now = GroebnerBasis(order, basis)
        if with_reps:
            ef, cf = leads[i]
            eg, cg = leads[j]
            rep_s = tuple(
                _mono_mul(a, _ediv(l, ef), 1 / cf) - _mono_mul(b, _ediv(l, eg), 1 / cg)
                for a, b in zip(reps[i], reps[j])
            )
            rem, quots = normal_form(s, gb_now, with_quotients=True)
            rep_rem = tuple(
                rs - sum((q * rb for q, rb in zip(quots, col)), MPoly())
                for rs, col in zip(rep_s, zip(*reps))
            )
        else:
            rem = normal_form(s, gb_now)
            rep_rem = None
        if rem:
            n = len(basis)
            push(rem, rep_rem)
            for k in range(n):
                add_pair(k, n)
    return _reduce_basis(basis, reps if with_reps else None, order)


def _reduce_basis(basis, reps, order):
    """Inter-reduce to the unique reduced basis (sorted by leading term)."""
    items = list(range(len(basis)))
    # drop elements whose leading monomial is divisible by another's
    keep = []
    for i in items:
        li = leading_term(basis[i], order)[0]
        dominated = False
        for j in items:
            if i == j:
                continue
            lj = leading_term(basis[j], order)[0]
            if _divides(lj, li) and (lj != li or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    kept = [basis[i] for i in keep]
    kept_reps = [reps[i] for i in keep] if reps is not None else None
    # reduce tails and normalize monic
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = GroebnerBasis(order, [kept[j] for j in range(len(kept)) if j != i])
            if not others.basis:
                continue
            if kept_reps is not None:
                rem, quots = normal_form(kept[i], others, with_quotients=True)
                other_reps = [kept_reps[j] for j in range(len(kept)) if j != i]
                new_rep = tuple(
                    rs - sum((q * rb for q, rb in zip(quots, col)), MPoly())
                    for rs, col in zip(kept_reps[i], zip(*other_reps))
                )
            else:
                rem = normal_form(kept[i], others)
                new_rep = None
            if rem != kept[i]:
                changed = True
            if not rem:
                kept.pop(i)
                if kept_reps is not None:
                    kept_reps.pop(i)
                break
            kept[i] = rem
            if kept_reps is not None:
                kept_reps[i] = new_rep
        else:
            continue
    final = []
    final_reps = []
    for idx, g in enumerate(kept):
        e, c = leading_term(g, order)
        final.append(g * (1 / c))
        if kept_reps is not None:
            final_reps.append(tuple(r * (1 / c) for r in kept_reps[idx]))
    orderkey = lambda t: order.key(leading_term(t[0], order)[0])  # noqa: E731
    packed = sorted(zip(final, final_reps if kept_reps is not None else [None] * len(final)), key=orderkey)
    basis_sorted = [p for p, _ in packed]
    reps_sorted = tuple(r for _, r in packed) if kept_reps is not None else None
    return GroebnerBasis(order, basis_sorted, reps_sorted)


# ---------------------------------------------------------------------------
# elimination, saturation, integrality witness
# ---------------------------------------------------------------------------

def eliminate(gb: GroebnerBasis, keep) -> PolyIdeal:
    """Generators of ideal(gb) intersected with Q[keep].

    Requires a lex basis whose eliminated variables all precede the kept
    ones in the s > t > x > y precedence.
    """
    if gb.order != LEX:
        raise PreconditionError("elimination needs a lex basis")
    keep = set(keep)
    dropped = [v for v in VARS if v not in keep]
    used = set()
    for g in gb.basis:
        used |= g.variables()
    max_keep = min((var_index(v) for v in keep), default=NVARS)
    for v in dropped:
        if v in used and var_index(v) > max_keep:
            raise PreconditionError(
                f"variable {v} must precede kept variables in the order"
            )
    kept = [g for g in gb.basis if g.uses_only(keep)]
    if not kept:
        raise PreconditionError("elimination ideal is zero")
    return PolyIdeal(kept)


def saturate_gb(ideal: PolyIdeal, q: MPoly) -> GroebnerBasis:
    """Lex basis of (ideal : q^infinity) via the 1 - s*q trick; returns the
    s-free part, which is the reduced lex basis of the saturation."""
    if not q:
        raise PreconditionError("saturating by zero")
    for g in ideal.generators:
        if g.degree_in("s") > 0:
            raise PreconditionError("generators must not involve s")
    if q.degree_in("s") > 0:
        raise PreconditionError("saturating polynomial must not involve s")
    helper = MPoly.const(1) - MPoly.var("s") * q
    full = buchberger(PolyIdeal(list(ideal.generators) + [helper]), LEX)
    kept = [g for g in full.basis if g.degree_in("s") == 0]
    if not kept:
        kept = [MPoly.const(1)]
    return GroebnerBasis(LEX, kept)


def saturate(ideal: PolyIdeal, q: MPoly) -> PolyIdeal:
    return PolyIdeal(saturate_gb(ideal, q).basis)


def monic_in_t_witness(gb: GroebnerBasis):
    """The minimal-degree basis element whose lex leading monomial is a pure
    power of t, i.e. a monic integral relation for t over Q[x, y]; None when
    t is not integral.  Expects a lex basis not involving s."""
    if gb.order != LEX:
        raise PreconditionError("witness needs a lex basis")
    best = None
    best_deg = None
    for g in gb.basis:
        if g.degree_in("s") > 0:
            raise PreconditionError("basis must not involve s")
        e, _ = leading_term(g, LEX)
        if e[var_index("t")] >= 1 and e[var_index("x")] == e[var_index("y")] == 0 and e[var_index("s")] == 0:
            if best_deg is None or e[var_index("t")] < best_deg:
                best, best_deg = g, e[var_index("t")]
    return best


def ideals_equal(a: PolyIdeal, b: PolyIdeal, order=LEX) -> bool:
    """Mutual containment via normal forms."""
    gba = buchberger(a, order)
    gbb = buchberger(b, order)
    return all(not normal_form(g, gba) for g in b.generators) and all(
        not normal_form(g, gbb) for g in a.generators
    )


# ---------------------------------------------------------------------------
# conversions and specialization
# ---------------------------------------------------------------------------

def from_upoly(p) -> MPoly:
    """UPoly with rational coefficients -> MPoly."""
    i = var_index(p.var)
    out = {}
    for k, c in enumerate(p.coeffs):
        if c:
            e = [0] * NVARS
            e[i] = k
            out[tuple(e)] = Fraction(c)
    return MPoly(out)


def to_upoly_in(p: MPoly, name):
    """MPoly using only one variable -> UPoly over Q."""
    from .unipoly import UPoly

    if not p.uses_only({name}):
        raise PreconditionError(f"polynomial involves more than {name}")
    i = var_index(name)
    coeffs = [Fraction(0)] * (p.degree_in(name) + 1 if p else 0)
    for e, c in p.terms.items():
        coeffs[e[i]] = c
    return UPoly(name, coeffs)


def specialize_to_t(p: MPoly, xval, yval):
    """Substitute x -> xval, y -> yval (ring elements with operators),
    returning the coefficient list of the result as a polynomial in t
    (lowest degree first).  s must be absent."""
    zero = xval - xval
    if p.degree_in("s") > 0:
        raise PreconditionError("polynomial involves s")
    dt = max((e[var_index("t")] for e in p.terms), default=0)
    coeffs = [zero] * (dt + 1)
    xi, yi, ti = var_index("x"), var_index("y"), var_index("t")
    xpow = {0: None}
    ypow = {0: None}

    def power(val, cache, k):
        if k == 0:
            return None  # means "one", avoided below
        if k not in cache:
            cache[k] = power(val, cache, k - 1) * val if k > 1 else val
        return cache[k]

    for e, c in p.terms.items():
        term = None
        if e[xi]:
            term = power(xval, xpow, e[xi])
        if e[yi]:
            yp = power(yval, ypow, e[yi])
            term = yp if term is None else term * yp
        contrib = c if term is None else term * c
        coeffs[e[ti]] = coeffs[e[ti]] + contrib
    return coeffs


def eval_at(p: MPoly, xval, yval):
    """Full evaluation of a polynomial in x, y at ring elements."""
    if p.degree_in("t") > 0 or p.degree_in("s") > 0:
        raise PreconditionError("polynomial involves t or s")
    return specialize_to_t(p, xval, yval)[0]


def lift_membership(p: MPoly, gb: GroebnerBasis):
    """Cofactors of p against the generators the basis was computed from
    (requires with_reps=True); None when p is not in the ideal."""
    if gb.reps is None:
        raise PreconditionError("basis computed without representation tracking")
    rem, quots = normal_form(p, gb, with_quotients=True)
    if rem:
        return None
    cof = [MPoly() for _ in gb.reps[0]]
    for q, rep in zip(quots, gb.reps):
        if not q:
            continue
        for j, r in enumerate(rep):
            cof[j] = cof[j] + q * r
    return cof
