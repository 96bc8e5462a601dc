"""
The q-shuffle product on V and truncated generating functions over it.

Pairing on letters: (x,x) = (y,y) = 2, (x,y) = (y,x) = -2.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .freealg import UNIT, ZERO_ELEMENT, Element, as_element
from .scalar import (ONE_POLY, LaurentPoly, Scalar, poly_divexact, poly_gcd,
                     q_pow)

CACHE_ENV = "QSHUFFLE_PBW_CACHE_WORDS"
DEFAULT_CACHE_WORDS = 2_000_000


def pairing(a, b):
    return 2 if a == b else -2


def twist(u, letter):
    """(u_1, l) + ... + (u_r, l) for a word u and a letter l."""
    same = u.count(letter)
    return 2 * (2 * same - len(u))


# ---------------------------------------------------------------------------
# word level, left recursion, memoized

class _ShuffleCache:
    """
    (u, v) -> {w: {exp: mult}}.  Entries are shared and never mutated.
    Bounded by the total number of stored words; overflow clears everything.
    Plain dict get/set is atomic under the GIL, so concurrent callers at worst
    recompute an entry.
    """

    def __init__(self, limit=None):
        if limit is None:
            limit = int(os.environ.get(CACHE_ENV, DEFAULT_CACHE_WORDS))
        self.limit = limit
        self.table = {}
        self.size = 0
        self.hits = 0
        self.misses = 0

    def get(self, key):
        r = self.table.get(key)
        if r is not None:
            self.hits += 1
        return r

    def put(self, key, value):
        self.misses += 1
        if self.limit <= 0:
            return
        if self.size + len(value) > self.limit:
            self.table.clear()
            self.size = 0
        self.table[key] = value
        self.size += len(value)

    def clear(self):
        self.table.clear()
        self.size = self.hits = self.misses = 0

    def info(self):
        return {"entries": len(self.table), "words": self.size,
                "limit": self.limit, "hits": self.hits, "misses": self.misses}


_cache = _ShuffleCache()


def clear_cache():
    _cache.clear()


def cache_info():
    return _cache.info()


def set_cache_limit(words):
    _cache.limit = words
    _cache.clear()


def word_shuffle(u, v):
    """u * v for words, as {w: {exponent of q: multiplicity}}."""
    if not u:
        return {v: {0: 1}}
    if not v:
        return {u: {0: 1}}
    key = (u, v)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    u1, v1 = u[0], v[0]
    left = word_shuffle(u[1:], v)
    right = word_shuffle(u, v[1:])
    e = twist(u, v1)
    if u1 != v1:
        out = {u1 + w: p for w, p in left.items()}
        for w, p in right.items():
            out[v1 + w] = {k + e: m for k, m in p.items()}
    else:
        out = {u1 + w: dict(p) for w, p in left.items()}
        for w, p in right.items():
            d = out.get(v1 + w)
            if d is None:
                out[v1 + w] = {k + e: m for k, m in p.items()}
            else:
                for k, m in p.items():
                    d[k + e] = d.get(k + e, 0) + m
    _cache.put(key, out)
    return out


# ---------------------------------------------------------------------------
# element level

def _clear_denominators(a):
    """Common denominator L (dense, lowest first) and {word: LaurentPoly}."""
    dens = {c.den for c in a.terms.values()}
    if dens == {ONE_POLY}:
        return [1], {w: c.num for w, c in a.terms.items()}
    lcm = [1]
    for d in dens:
        _, dd = d.dense()
        g = poly_gcd(lcm, dd)
        lcm = _dense_mul(lcm, poly_divexact(dd, g))
    factors = {}
    for d in dens:
        _, dd = d.dense()
        factors[d] = LaurentPoly.from_dense(poly_divexact(lcm, dd))
    return lcm, {w: c.num * factors[c.den] for w, c in a.terms.items()}


def _dense_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pack(terms, shift, bits):
    n = 0
    for e, c in terms.items():
        n += c << ((e + shift) * bits)
    return n


def _unpack(n, bits):
    out = {}
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    k = 0
    while n:
        d = n & mask
        if d >= half:
            d -= 1 << bits
        n = (n - d) >> bits
        if d:
            out[k] = d
        k += 1
    return out


def _norm1(polys):
    return sum(abs(c) for p in polys for c in p.terms.values())


def shuffle_mul(a, b):
    """
    q-shuffle product of Elements.

    Denominators are cleared, every Laurent coefficient is packed into one
    integer (Kronecker substitution q -> 2^bits with enough headroom for the
    worst-case coefficient), and the word tables are accumulated with plain
    integer arithmetic.
    """
    a, b = as_element(a), as_element(b)
    if not a.terms or not b.terms:
        return ZERO_ELEMENT
    if a.terms.keys() == {""}:
        return b * a.terms[""]
    if b.terms.keys() == {""}:
        return a * b.terms[""]
    da, na = _clear_denominators(a)
    db, nb = _clear_denominators(b)

    la = max(len(u) for u in na)
    lb = max(len(v) for v in nb)
    alo = min(p.low() for p in na.values())
    blo = min(p.low() for p in nb.values())
    toff = 2 * la * lb
    bound = _norm1(na.values()) * _norm1(nb.values()) * comb(la + lb, la)
    bits = bound.bit_length() + 1

    pa = {u: _pack(p.terms, -alo, bits) for u, p in na.items()}
    pb = {v: _pack(p.terms, -blo, bits) for v, p in nb.items()}

    acc = {}
    get = acc.get
    for u, cu in pa.items():
        for v, cv in pb.items():
            c = cu * cv
            for w, t in word_shuffle(u, v).items():
                acc[w] = get(w, 0) + c * _pack(t, toff, bits)

    shift = alo + blo - toff
    den = _dense_mul(da, db)
    out = {}
    if den == [1]:
        for w, n in acc.items():
            if n:
                out[w] = Scalar._raw(LaurentPoly._raw(
                    {k + shift: c for k, c in _unpack(n, bits).items()}))
    else:
        dpoly = LaurentPoly.from_dense(den)
        for w, n in acc.items():
            if n:
                num = LaurentPoly._raw(
                    {k + shift: c for k, c in _unpack(n, bits).items()})
                out[w] = Scalar._from(num, dpoly)
    return Element._raw(out)


def shuffle_prod(*factors):
    result = UNIT
    for f in factors:
        result = shuffle_mul(result, f)
    return result


def shuffle_pow(a, n):
    result = UNIT
    for _ in range(n):
        result = shuffle_mul(result, a)
    return result


def commutator(a, b):
    """[a, b] = a*b - b*a with respect to the q-shuffle product."""
    return shuffle_mul(a, b) - shuffle_mul(b, a)


def q_commutator(a, b, power=1):
    """[a, b]_{q^power} = q^power a*b - q^-power b*a."""
    return (q_pow(power) * shuffle_mul(a, b)
            - q_pow(-power) * shuffle_mul(b, a))


# ---------------------------------------------------------------------------
# right recursion, coded separately; kept as a cross-check

@lru_cache(maxsize=None)
def _word_shuffle_right(u, v):
    if not u:
        return {v: ONE_POLY}
    if not v:
        return {u: ONE_POLY}
    out = {}
    vs, ur = v[-1], u[-1]
    for w, p in _word_shuffle_right(u, v[:-1]).items():
        out[w + vs] = p
    e = sum(pairing(ur, c) for c in v)
    for w, p in _word_shuffle_right(u[:-1], v).items():
        k = w + ur
        out[k] = out[k] + p.shift(e) if k in out else p.shift(e)
    return out


def shuffle_mul_right_recursion(a, b):
    a, b = as_element(a), as_element(b)
    out = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            c = cu * cv
            for w, p in _word_shuffle_right(u, v).items():
                term = c * Scalar._raw(p)
                out[w] = out[w] + term if w in out else term
    return Element(out)


# ---------------------------------------------------------------------------
# truncated generating functions over the q-shuffle algebra

@dataclass(frozen=True)
class Series:
    """a_0 + a_1 t + ... + a_N t^N with Element coefficients."""

    coeffs: tuple

    @classmethod
    def of(cls, coeffs, order):
        cs = [as_element(c) for c in coeffs][: order + 1]
        cs += [ZERO_ELEMENT] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def one(cls, order):
        return cls.of([UNIT], order)

    @classmethod
    def zero(cls, order):
        return cls.of([], order)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def _check(self, other):
        if not isinstance(other, Series):
            raise TypeError("expected a Series")
        if other.order != self.order:
            raise ValueError(
                f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return Series(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Series(tuple(-a for a in self.coeffs))

    def __mul__(self, c):
        if isinstance(c, Series):
            raise TypeError("use series_mul for the product of two series")
        return Series(tuple(a * c for a in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * Scalar.coerce(c).inverse()

    def is_constant_one(self):
        return self.coeffs[0] == UNIT and all(a.is_zero() for a in self.coeffs[1:])


def series_mul(a, b):
    a._check(b)
    n = a.order
    out = []
    for k in range(n + 1):
        total = ZERO_ELEMENT
        for i in range(k + 1):
            x, y = a.coeffs[i], b.coeffs[k - i]
            if x.terms and y.terms:
                total = total + shuffle_mul(x, y)
        out.append(total)
    return Series(tuple(out))


def _require_zero_constant(a, what):
    if not a.coeffs[0].is_zero():
        raise ValueError(f"{what} needs a series with constant coefficient 0")


def series_exp(a):
    """sum_n a^n / n!, truncated."""
    _require_zero_constant(a, "exp")
    result = Series.one(a.order)
    power = Series.one(a.order)
    for n in range(1, a.order + 1):
        power = series_mul(power, a)
        result = result + power * Scalar(1, factorial(n))
    return result


def series_ln1p(a):
    """ln(1 + a) = sum_n (-1)^n a^{n+1} / (n+1), truncated."""
    _require_zero_constant(a, "ln")
    result = Series.zero(a.order)
    power = Series.one(a.order)
    for n in range(a.order):
        power = series_mul(power, a)
        result = result + power * Scalar((-1) ** n, n + 1)
    return result


def series_ln(a):
    """ln of a series with constant coefficient 1."""
    if a.coeffs[0] != UNIT:
        raise ValueError("ln needs constant coefficient 1")
    return series_ln1p(a - Series.one(a.order))


def series_scale_t(a, c):
    """Substitute t -> c t."""
    c = Scalar.coerce(c)
    out = []
    ck = Scalar.coerce(1)
    for x in a.coeffs:
        out.append(x * ck)
        ck = ck * c
    return Series(tuple(out))


def series_inverse(a):
    """Multiplicative inverse of a series with constant coefficient 1."""
    if a.coeffs[0] != UNIT:
        raise ValueError("inverse needs constant coefficient 1")
    inv = [UNIT]
    for k in range(1, a.order + 1):
        total = ZERO_ELEMENT
        for i in range(1, k + 1):
            if a.coeffs[i].terms and inv[k - i].terms:
                total = total + shuffle_mul(a.coeffs[i], inv[k - i])
        inv.append(-total)
    return Series(tuple(inv))

