"""
The free algebra V on the letters x, y.

Words are plain strings over "xy"; the empty string is the unit word and is
serialized as "1".  An Element is a sparse map word -> Scalar.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import ONE, Scalar, q_int

LETTERS = "xy"
BAR = {"x": 1, "y": -1}


def word_key(w):
    """Serialization order: by length, then lexicographic with x < y."""
    return (len(w), w)


def check_word(w):
    if w == "1":
        return ""
    if any(c not in LETTERS for c in w):
        raise ValueError(f"not a word over {{x, y}}: {w!r}")
    return w


def word_text(w):
    return w or "1"


class Element:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        out = {}
        if terms:
            for w, c in dict(terms).items():
                c = Scalar.coerce(c)
                if not c.is_zero():
                    out[check_word(w)] = c
        self.terms = out
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        e = object.__new__(cls)
        e.terms = terms
        e._hash = None
        return e

    @classmethod
    def word(cls, w, coeff=ONE):
        return cls({w: coeff})

    @classmethod
    def scalar(cls, c):
        return cls({"": c})

    # queries ---------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, w):
        return self.terms.get(check_word(w), Scalar.coerce(0))

    def words(self):
        return sorted(self.terms, key=word_key)

    def items(self):
        """(word, coefficient) pairs in serialization order."""
        return [(w, self.terms[w]) for w in self.words()]

    def degrees(self):
        return {len(w) for w in self.terms}

    def is_homogeneous(self, n=None):
        degs = self.degrees()
        if n is None:
            return len(degs) <= 1
        return degs <= {n}

    def specialize(self, q0):
        """word -> exact rational value of the coefficient at q = q0."""
        return {w: c.specialize(q0) for w, c in self.terms.items()}

    # linear structure ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for w, c in b.items():
            v = out.get(w)
            if v is None:
                out[w] = c
            else:
                v = v + c
                if v.is_zero():
                    del out[w]
                else:
                    out[w] = v
        return Element._raw(out)

    def __neg__(self):
        return Element._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, Element):
            raise TypeError("use free_mul or shuffle_mul to multiply Elements")
        c = Scalar.coerce(c)
        if c.is_zero():
            return Element._raw({})
        if c == ONE:
            return self
        return Element._raw({w: v * c for w, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Scalar.coerce(c)
        return self * c.inverse()

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, Scalar)):
            return self == Element.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        from .textio import render_text
        return f"Element({render_text(self)})"


ZERO_ELEMENT = Element._raw({})
UNIT = Element._raw({"": ONE})
X = Element._raw({"x": ONE})
Y = Element._raw({"y": ONE})


def as_element(a):
    if isinstance(a, Element):
        return a
    if isinstance(a, str):
        return Element.word(a)
    return Element.scalar(a)


def free_mul(a, b):
    """Concatenation product, extended bilinearly."""
    a, b = as_element(a), as_element(b)
    out = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            w = u + v
            c = cu * cv
            prev = out.get(w)
            out[w] = c if prev is None else prev + c
    return Element(out)


def free_prod(*factors):
    result = UNIT
    for f in factors:
        result = free_mul(result, f)
    return result


def bilinear_form(a, b):
    """The symmetric form for which the words are orthonormal."""
    a, b = as_element(a), as_element(b)
    if len(a.terms) > len(b.terms):
        a, b = b, a
    total = Scalar.coerce(0)
    bt = b.terms
    for w, c in a.terms.items():
        d = bt.get(w)
        if d is not None:
            total = total + c * d
    return total


def grade_project(a, n):
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return Element._raw({w: c for w, c in a.terms.items() if len(w) == n})


def j_plus():
    t = q_int(3)
    return Element({"xxxy": 1, "xxyx": -t, "xyxx": t, "yxxx": -1})


def j_minus():
    t = q_int(3)
    return Element({"yyyx": 1, "yyxy": -t, "yxyy": t, "xyyy": -1})


def all_words(n):
    """All 2^n words of length n, lexicographic."""
    words = [""]
    for _ in range(n):
        words = [w + c for w in words for c in LETTERS]
    return words
