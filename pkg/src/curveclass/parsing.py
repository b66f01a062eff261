"""Polynomial expression parsing and canonical printing.

Grammar: integer and a/b rational literals, named variables, binary
+ - * ^ with nonnegative integer exponents, parentheses, unary minus.
Implicit multiplication is a syntax error by construction.  Printing is
canonical: terms in graded-lex descending order, rational coefficients as
a/b, explicit '*' between coefficient and monomial, '^' exponents; the
output re-parses to an equal polynomial.
"""

from fractions import Fraction

from .errors import ParseError
from .mpoly import GRLEX, MPoly, VARS
from .unipoly import UPoly


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text):
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "/":
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ParseError("malformed rational literal", j)
                out.append(_Token("num", Fraction(int(text[i:j]), int(text[j + 1:k])), i))
                i = k
            else:
                out.append(_Token("num", Fraction(int(text[i:j])), i))
                i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()":
            out.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(_Token("end", None, n))
    return out


class _Parser:
    def __init__(self, tokens, variables):
        self.toks = tokens
        self.i = 0
        self.variables = variables

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.kind!r}", tok.pos)
        self.i += 1
        return tok

    def parse_expr(self):
        sign = 1
        if self.peek().kind in "+-":
            if self.take().kind == "-":
                sign = -1
        acc = self.parse_term() * sign
        while self.peek().kind in "+-":
            op = self.take().kind
            term = self.parse_term()
            acc = acc + term if op == "+" else acc - term
        return acc

    def parse_term(self):
        acc = self.parse_factor()
        while self.peek().kind == "*":
            self.take()
            acc = acc * self.parse_factor()
        return acc

    def parse_factor(self):
        base = self.parse_base()
        if self.peek().kind == "^":
            pos = self.take().pos
            neg = False
            if self.peek().kind == "-":
                self.take()
                neg = True
            tok = self.take("num")
            if neg:
                raise ParseError("negative exponent", pos)
            if tok.value.denominator != 1 or tok.value < 0:
                raise ParseError("exponent must be a nonnegative integer", tok.pos)
            return base ** int(tok.value)
        return base

    def parse_base(self):
        tok = self.peek()
        if tok.kind == "(":
            self.take()
            inner = self.parse_expr()
            self.take(")")
            return inner
        if tok.kind == "num":
            self.take()
            return MPoly.const(tok.value)
        if tok.kind == "name":
            self.take()
            if tok.value not in self.variables:
                raise ParseError(f"unknown variable {tok.value!r}", tok.pos)
            return MPoly.var(tok.value)
        if tok.kind == "-":
            self.take()
            return -self.parse_base()
        raise ParseError(f"unexpected token {tok.kind!r}", tok.pos)


def parse_poly(text, variables=("x", "y")) -> MPoly:
    """Parse an exact polynomial expression over the given variables."""
    tokens = _tokenize(text)
    parser = _Parser(tokens, frozenset(variables))
    poly = parser.parse_expr()
    end = parser.peek()
    if end.kind != "end":
        raise ParseError(f"trailing input starting with {end.kind!r}", end.pos)
    return poly


def parse_upoly(text, var) -> UPoly:
    """Parse a univariate polynomial in the named variable."""
    from .mpoly import to_upoly_in

    return to_upoly_in(parse_poly(text, (var,)), var)


# ---------------------------------------------------------------------------
# canonical printing
# ---------------------------------------------------------------------------

def _monomial_str(exps):
    parts = []
    for name, e in zip(VARS, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _coeff_str(c: Fraction):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_poly(p: MPoly) -> str:
    """Canonical string: graded-lex descending terms, explicit coefficients."""
    if p.is_zero():
        return "0"
    items = sorted(p.terms.items(), key=lambda ec: GRLEX.key(ec[0]), reverse=True)
    pieces = []
    for idx, (e, c) in enumerate(items):
        mono = _monomial_str(e)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{_coeff_str(mag)}*{mono}"
        else:
            body = _coeff_str(mag)
        if idx == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces)


def format_upoly(u: UPoly) -> str:
    from .mpoly import from_upoly

    return format_poly(from_upoly(u))


def format_value(v) -> str:
    """Canonical string for an assigned/singleton value: a rational number
    or a polynomial expression in the point's coordinates."""
    from .numfield import NFElement

    if isinstance(v, Fraction):
        return _coeff_str(v)
    if isinstance(v, NFElement):
        if v.is_rational():
            return _coeff_str(v.as_fraction())
        return format_poly(_nf_to_mpoly(v))
    return _coeff_str(Fraction(v))


def _nf_to_mpoly(v) -> MPoly:
    """Tower element as a polynomial in the tower variables x, y."""
    field = v.field
    terms = {}

    def walk(rep, depth, exps):
        if depth == 0:
            if rep:
                terms[tuple(exps)] = Fraction(rep)
            return
        name = field.var(depth - 1)
        idx = VARS.index(name)
        for k, c in enumerate(rep):
            e2 = list(exps)
            e2[idx] += k
            walk(c, depth - 1, e2)

    walk(v.rep, field.depth, [0, 0, 0, 0])
    return MPoly(terms)


def format_point(pt) -> str:
    """Canonical label of a point class: exact coordinates when rational,
    the triangular system otherwise."""
    if pt.is_rational():
        x0, y0 = pt.coords()
        return f"({_coeff_str(x0)}, {_coeff_str(y0)})"
    m1 = format_upoly(pt.m1())
    m2_terms = {}
    fld = pt.field
    for j, rep in enumerate(fld._mp[1]):
        for i, c in enumerate(rep):
            if c:
                m2_terms[(0, 0, i, j)] = Fraction(c)
    m2 = format_poly(MPoly(m2_terms))
    return f"{{{m1} = 0, {m2} = 0}}"
