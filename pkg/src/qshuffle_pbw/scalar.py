"""
Exact coefficients: Laurent polynomials in q over the integers and
reduced fractions of them (the rational function field Q(q)).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class SpecializationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# dense integer polynomials (lists, lowest degree first) used for gcd work

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _primitive(a):
    g = _content(a)
    if g == 0:
        return a
    if a[-1] < 0:
        g = -g
    if g == 1:
        return a
    return [c // g for c in a]


def _prem(a, b):
    """Pseudo-remainder of a by b."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        la = a[-1]
        shift = da - db
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        _trim(a)
    return a


def poly_gcd(a, b):
    """Gcd in Z[q] of two dense polynomials, positive leading coefficient."""
    a = _trim(list(a))
    b = _trim(list(b))
    if not a:
        return _primitive(b) if b else []
    if not b:
        return _primitive(a)
    c = gcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [c]
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else r)
    return [c * x for x in _primitive(a)]


def poly_divexact(a, b):
    """a / b in Z[q]; raises if the division is not exact."""
    a = _trim(list(a))
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        if a:
            raise ArithmeticError("inexact polynomial division")
        return []
    out = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c, r = divmod(a[k + db], lb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = c
        if c:
            for i, bc in enumerate(b):
                a[k + i] -= c * bc
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return _trim(out)


# ---------------------------------------------------------------------------

class LaurentPoly:
    """Finite sum of c_k q^k with integer c_k; immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms:
            terms = {e: c for e, c in terms.items() if c}
        self.terms = terms or {}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # caller guarantees no zero coefficients
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, coeff=1, exp=0):
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def from_dense(cls, coeffs, low=0):
        return cls._raw({low + i: c for i, c in enumerate(coeffs) if c})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        t = self.terms
        return not t or (len(t) == 1 and 0 in t)

    def low(self):
        return min(self.terms)

    def high(self):
        return max(self.terms)

    def lead(self):
        return self.terms[self.high()]

    def content(self):
        return _content(list(self.terms.values()))

    def dense(self):
        """(low exponent, coefficient list) with no trailing zeros."""
        lo, hi = self.low(), self.high()
        out = [0] * (hi - lo + 1)
        for e, c in self.terms.items():
            out[e - lo] = c
        return lo, out

    def shift(self, k):
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self.terms.items()})

    def scale(self, c):
        if not c:
            return ZERO_POLY
        if c == 1:
            return self
        return LaurentPoly._raw({e: c * v for e, v in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for e, c in b.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return ZERO_POLY
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = ONE_POLY
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __call__(self, q0):
        q0 = Fraction(q0)
        return sum((c * q0 ** e for e, c in self.terms.items()), Fraction(0))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


ZERO_POLY = LaurentPoly._raw({})
ONE_POLY = LaurentPoly._raw({0: 1})


# ---------------------------------------------------------------------------

class Scalar:
    """
    num/den with den an ordinary polynomial: nonzero constant term, positive
    leading coefficient, coprime to num. Zero is 0/1. Canonical, so ==
    compares representations.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        a, b = _parts(num)
        c, d = _parts(den)
        if c.is_zero():
            raise ZeroDivisionError("division by the zero Scalar")
        if b is ONE_POLY and c is ONE_POLY:
            n, dd = _canonical(a, d)
        else:
            n, dd = _canonical(a * d, b * c)
        self._set(n, dd)

    def _set(self, num, den):
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num, den=None):
        s = object.__new__(cls)
        s.num = num
        if den is None or den.terms == {0: 1}:
            den = ONE_POLY
        s.den = den
        s._hash = None
        return s

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return cls._raw(LaurentPoly.monomial(x))
        if isinstance(x, LaurentPoly):
            return cls._raw(x)
        if isinstance(x, Fraction):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    def is_zero(self):
        return not self.num.terms

    def is_laurent(self):
        return self.den.terms == {0: 1}

    def __bool__(self):
        return bool(self.num.terms)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den is ONE_POLY and other.den is ONE_POLY:
            return Scalar._raw(self.num + other.num)
        if self.den == other.den:
            return Scalar._from(self.num + other.num, self.den)
        return Scalar._from(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den is ONE_POLY and other.den is ONE_POLY:
            return Scalar._raw(self.num * other.num)
        return Scalar._from(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by the zero Scalar")
        return Scalar._from(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Scalar")
        if other.den is ONE_POLY and len(other.num.terms) == 1:
            (e, c), = other.num.terms.items()
            return Scalar._from(self.num.shift(-e), self.den.scale(c))
        return Scalar._from(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if self.den is ONE_POLY:
            return Scalar._raw(self.num ** n)
        return Scalar._raw(self.num ** n, self.den ** n)

    @classmethod
    def _from(cls, num, den):
        n, d = _canonical(num, den)
        return cls._raw(n, d)

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def specialize(self, q0):
        return specialize(self, q0)

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if self.den == ONE_POLY:
            return f"({self.num})" if len(self.num.terms) > 1 else str(self.num)
        return f"({self.num})/({self.den})"


def _poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.monomial(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


def _parts(x):
    if isinstance(x, Scalar):
        return x.num, x.den
    if isinstance(x, Fraction):
        return LaurentPoly.monomial(x.numerator), LaurentPoly.monomial(x.denominator)
    return _poly(x), ONE_POLY


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction, LaurentPoly)):
        return Scalar.coerce(x)
    return NotImplemented


def _canonical(num, den):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    lo = den.low()
    if lo:
        den = den.shift(-lo)
        num = num.shift(-lo)
    if den.is_constant():
        d = den.terms[0]
        if d == 1:
            return num, ONE_POLY
        g = gcd(num.content(), d)
        if d < 0:
            g = -g
        if g != 1:
            num = LaurentPoly._raw({e: c // g for e, c in num.terms.items()})
            d //= g
        return num, (ONE_POLY if d == 1 else LaurentPoly.monomial(d))
    nlo, ndense = num.dense()
    _, ddense = den.dense()
    g = poly_gcd(ndense, ddense)
    if len(g) > 1 or g[0] != 1:
        ndense = poly_divexact(ndense, g)
        ddense = poly_divexact(ddense, g)
    if ddense[-1] < 0:
        ndense = [-c for c in ndense]
        ddense = [-c for c in ddense]
    if len(ddense) == 1 and ddense[0] == 1:
        return LaurentPoly.from_dense(ndense, nlo), ONE_POLY
    return LaurentPoly.from_dense(ndense, nlo), LaurentPoly.from_dense(ddense)


def canonicalize(s):
    return Scalar._from(s.num, s.den)


# ---------------------------------------------------------------------------

ZERO = Scalar._raw(ZERO_POLY)
ONE = Scalar._raw(ONE_POLY)
Q = Scalar._raw(LaurentPoly.monomial(1, 1))
QINV = Scalar._raw(LaurentPoly.monomial(1, -1))


def q_pow(k):
    return Scalar._raw(LaurentPoly.monomial(1, k))


def q_int(n):
    """[n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}."""
    if n < 0:
        raise ValueError(f"q-integer of negative n={n}")
    return Scalar._raw(LaurentPoly._raw({n - 1 - 2 * i: 1 for i in range(n)}))


def q_minus_qinv(power=1):
    """(q - q^{-1})^power."""
    return Scalar._raw(LaurentPoly._raw({1: 1, -1: -1})) ** power


def specialize(s, q0):
    """Exact value of the Scalar s at q = q0 (a rational)."""
    q0 = Fraction(q0)
    if q0 in (0, 1, -1):
        raise SpecializationError(f"q0 = {q0} is excluded (0 or a root of unity)")
    s = Scalar.coerce(s)
    d = s.den(q0)
    if d == 0:
        raise SpecializationError(
            f"denominator {s.den} vanishes at q0 = {q0}")
    return s.num(q0) / d
