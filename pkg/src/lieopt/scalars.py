"""Exact scalar arithmetic: rationals, rational functions of k, positive scales.

Rationals are ``fractions.Fraction`` (arbitrary precision, always in lowest
terms, positive denominator), re-exported as ``Rational``.  The one symbolic
layer the package needs on top of that is ``RationalFunction``: a quotient of
integer-coefficient polynomials in the real parameter k, kept in a canonical
form (coprime numerator/denominator, positive leading denominator
coefficient, jointly primitive integer coefficients) so that equal functions
compare equal.

``PosScale`` models the image t = e^eps > 0 of an exponential group
parameter.  Storing t instead of eps keeps one-parameter scaling actions
inside exact arithmetic: t^(p/q) is again rational exactly when t admits a
rational q-th root, and ``PosScale.pow_exact`` decides that.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from .errors import NonRationalPower, PoleAtK

Rational = Fraction

__all__ = [
    "Rational",
    "RationalFunction",
    "PosScale",
    "param_eval",
    "param_simplify",
    "parse_scalar",
    "rational_nth_root",
]


# --------------------------------------------------------------------------
# integer-coefficient polynomials, represented as tuples of ints (ascending
# degree, no trailing zeros, () is the zero polynomial)
# --------------------------------------------------------------------------

def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))


def _poly_neg(a):
    return tuple(-c for c in a)


def _poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _poly_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _poly_content(a):
    c = 0
    for v in a:
        c = gcd(c, abs(v))
    return c


def _frac_poly_mod(a, b):
    # remainder of a by b over Q; both lists of Fractions, b nonzero
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        q = a[-1] / lb
        shift = len(a) - 1 - db
        for i, cb in enumerate(b):
            a[shift + i] -= q * cb
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_gcd(a, b):
    """Primitive gcd in Z[k], normalized to a positive leading coefficient."""
    fa = [Fraction(c) for c in a]
    fb = [Fraction(c) for c in b]
    while fb:
        fa, fb = fb, _frac_poly_mod(fa, fb)
    if not fa:
        return ()
    # clear denominators, make primitive, fix the sign
    den = 1
    for c in fa:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fa]
    content = _poly_content(ints)
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def _poly_div_exact(a, g):
    """Divide a by g in Z[k]; a must be an exact multiple with int quotient."""
    if g == (1,):
        return a
    fa = [Fraction(c) for c in a]
    dg, lg = len(g) - 1, g[-1]
    out = [Fraction(0)] * (len(a) - len(g) + 1) if a else []
    while fa and len(fa) - 1 >= dg:
        q = fa[-1] / lg
        shift = len(fa) - 1 - dg
        out[shift] = q
        for i, cg in enumerate(g):
            fa[shift + i] -= q * cg
        while fa and fa[-1] == 0:
            fa.pop()
    if fa:
        raise ArithmeticError("inexact polynomial division")
    assert all(c.denominator == 1 for c in out)
    return _trim(int(c) for c in out)


def _poly_str(a):
    if not a:
        return "0"
    pieces = []
    for deg in range(len(a) - 1, -1, -1):
        c = a[deg]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if deg == 0:
            body = str(c)
        elif deg == 1:
            body = "k" if c == 1 else f"{c}*k"
        else:
            body = f"k^{deg}" if c == 1 else f"{c}*k^{deg}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += sign + body
    return text


def _poly_is_atomic(a):
    # safe to print unparenthesized on either side of '/'
    return len(a) == 1 or (len(a) == 2 and a[0] == 0 and a[1] == 1)


# --------------------------------------------------------------------------
# rational functions of k
# --------------------------------------------------------------------------

class RationalFunction:
    """A quotient of integer-coefficient polynomials in k, canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator polynomial")
        if not num:
            self.num, self.den = (), (1,)
            return
        g = _poly_gcd(num, den)
        num = _poly_div_exact(num, g)
        den = _poly_div_exact(den, g)
        c = gcd(_poly_content(num), _poly_content(den))
        sign = -1 if den[-1] < 0 else 1
        self.num = tuple(v * sign // c for v in num)
        self.den = tuple(v * sign // c for v in den)

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value):
        value = Fraction(value)
        return cls((value.numerator,), (value.denominator,))

    @classmethod
    def var(cls):
        return cls((0, 1))

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def as_constant(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant in k")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    # -- arithmetic ----------------------------------------------------------

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(
            _poly_add(_poly_mul(self.num, o.den), _poly_mul(o.num, self.den)),
            _poly_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        out = RationalFunction.zero()
        out.num = _poly_neg(self.num)
        out.den = self.den
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(_poly_mul(self.num, o.num),
                                _poly_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(_poly_mul(self.num, o.den),
                                _poly_mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return RationalFunction.one() / self ** (-n)
        out = RationalFunction.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.as_constant())
        return hash((self.num, self.den))

    # -- evaluation & printing ------------------------------------------------

    def __call__(self, k):
        k = Fraction(k)
        d = _poly_eval(self.den, k)
        if d == 0:
            raise PoleAtK(f"{self} has a pole at k = {k}")
        return _poly_eval(self.num, k) / d

    def __str__(self):
        if self.den == (1,):
            return _poly_str(self.num)
        num = _poly_str(self.num)
        if not (_poly_is_atomic(self.num)
                or (len(self.num) == 1)):
            num = f"({num})"
        elif num.startswith("-") and len(self.num) > 1:
            num = f"({num})"
        den = _poly_str(self.den)
        if not _poly_is_atomic(self.den):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"


K = RationalFunction.var


# --------------------------------------------------------------------------
# parsing
# --------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(k)|(\^|[-+*/()]))")


def _tokenize(text):
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ValueError(f"bad scalar syntax near {text[pos:]!r}")
            break
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1))))
        elif m.group(2) is not None:
            tokens.append(("var", "k"))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok in (("op", "*"), ("op", "/")):
                op = self.take()[1]
                rhs = self.factor()
                value = value * rhs if op == "*" else value / rhs
            elif tok is not None and (tok[0] in ("num", "var") or tok == ("op", "(")):
                value = value * self.factor()  # implicit multiplication
            else:
                return value

    def factor(self):
        sign = 1
        while self.peek() in (("op", "-"), ("op", "+")):
            if self.take()[1] == "-":
                sign = -sign
        value = self.primary()
        if self.peek() == ("op", "^"):
            self.take()
            # exponents are literal non-negative integers
            tok = self.take()
            if tok is None or tok[0] != "num":
                raise ValueError("exponent must be an integer literal")
            value = value ** tok[1]
        return value if sign == 1 else -value

    def primary(self):
        tok = self.take()
        if tok is None:
            raise ValueError("unexpected end of scalar expression")
        if tok[0] == "num":
            return RationalFunction.constant(tok[1])
        if tok[0] == "var":
            return RationalFunction.var()
        if tok == ("op", "("):
            value = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis in scalar expression")
            return value
        raise ValueError(f"unexpected token {tok!r} in scalar expression")


def parse_scalar(text):
    """Parse expressions like ``(k-1)/k``, ``1-k`` or ``-1/3`` exactly."""
    if isinstance(text, RationalFunction):
        return text
    if isinstance(text, (int, Fraction)):
        return RationalFunction.constant(text)
    parser = _Parser(_tokenize(str(text)))
    value = parser.expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input in scalar expression {text!r}")
    return value


def param_simplify(s):
    """Canonical lowest-terms form; accepts strings or RationalFunction."""
    return parse_scalar(s)


def param_eval(s, k):
    """Exact value of s at rational k; raises PoleAtK at denominator roots."""
    return parse_scalar(s)(k)


# --------------------------------------------------------------------------
# positive scales
# --------------------------------------------------------------------------

def _int_nth_root(n, q):
    """Exact integer q-th root of n >= 1, or None."""
    if n == 1:
        return 1
    x = max(1, int(round(n ** (1.0 / q))))
    # Newton polish around the float seed, then exact check
    for _ in range(64):
        nx = ((q - 1) * x + n // x ** (q - 1)) // q
        if nx >= x:
            break
        x = nx
    for cand in (x - 1, x, x + 1, x + 2):
        if cand >= 1 and cand ** q == n:
            return cand
    return None


def rational_nth_root(value, q):
    """Exact q-th root of a positive rational, or None if irrational."""
    value = Fraction(value)
    if value <= 0 or q <= 0:
        raise ValueError("rational_nth_root needs a positive value and order")
    rn = _int_nth_root(value.numerator, q)
    rd = _int_nth_root(value.denominator, q)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


class PosScale:
    """The image t = e^eps of an exponential group parameter, t > 0."""

    __slots__ = ("value",)

    def __init__(self, value):
        value = Fraction(value)
        if value <= 0:
            raise ValueError("PosScale must be positive")
        self.value = value

    def pow_exact(self, exponent):
        """t**(p/q) as an exact Fraction; NonRationalPower if it is not one."""
        exponent = Fraction(exponent)
        base = self.value ** exponent.numerator
        root = rational_nth_root(base, exponent.denominator)
        if root is None:
            raise NonRationalPower(
                f"{self.value}^({exponent}) is irrational; pick t as a "
                f"{exponent.denominator}-th power of a positive rational")
        return root

    def inverse(self):
        return PosScale(1 / self.value)

    def __mul__(self, other):
        if isinstance(other, PosScale):
            return PosScale(self.value * other.value)
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, PosScale) and self.value == other.value

    def __hash__(self):
        return hash(("PosScale", self.value))

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return f"PosScale({self.value})"
