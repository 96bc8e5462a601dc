"""
Text, LaTeX and JSON forms of Scalars and Elements, and a parser for the
text form.

Text grammar (whitespace is insignificant except as juxtaposition):

    expr    := ['-'] term (('+' | '-') term)*
    term    := unary (('*' | '/' | '⋆' | '@' | <juxtaposition>) unary)*
    unary   := '-' unary | power
    power   := primary ['^' ['-'] INT]
    primary := INT | 'q' | '[' INT ']_q' | WORD | '(' expr ')'

WORD is a string over {x, y}; the integer literal 1 doubles as the empty
word.  '*' and juxtaposition scale when one side is a scalar and
concatenate when both are Elements; '⋆' (or '@') is the q-shuffle product.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .freealg import Element, as_element, free_mul, word_text
from .scalar import (ONE_POLY, LaurentPoly, Scalar, poly_divexact, q_int,
                     q_pow)


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


# ---------------------------------------------------------------------------
# JSON

def scalar_to_json(s):
    s = Scalar.coerce(s)

    def terms(p):
        return [[e, str(p.terms[e])] for e in sorted(p.terms, reverse=True)]

    return {"num": terms(s.num), "den": terms(s.den)}


def scalar_from_json(d):
    def poly(ts):
        return LaurentPoly({int(e): int(c) for e, c in ts})

    return Scalar(poly(d["num"]), poly(d["den"]))


def element_to_json(e):
    return {"terms": [{"word": word_text(w), "coeff": scalar_to_json(c)}
                      for w, c in e.items()]}


def element_from_json(d):
    return Element({t["word"]: scalar_from_json(t["coeff"]) for t in d["terms"]})


# ---------------------------------------------------------------------------
# factoring coefficients into q-integers for display

def _shifted_qint(n):
    # q^{n-1} [n]_q = 1 + q^2 + ... + q^{2n-2}
    out = [0] * (2 * n - 1)
    out[::2] = [1] * n
    return out


def _try_div(p, d):
    try:
        return poly_divexact(p, d)
    except ArithmeticError:
        return None


def factor_poly(p):
    """
    Write a nonzero Laurent polynomial as
    const * q^k * prod [n]_q^m * (q - q^-1)^j * residual.
    Returns (const, k, {n: m}, j, residual LaurentPoly).
    """
    const = p.content()
    lo, dense = p.dense()
    if dense[-1] < 0:
        const = -const
    dense = [c // const for c in dense]
    k = lo
    j = 0
    while len(dense) > 2:
        r = _try_div(dense, [-1, 0, 1])
        if r is None:
            break
        dense, j, k = r, j + 1, k + 1
    qints = {}
    n = (len(dense) - 1) // 2 + 1
    while n >= 2:
        r = _try_div(dense, _shifted_qint(n))
        if r is None:
            n -= 1
            continue
        dense = r
        qints[n] = qints.get(n, 0) + 1
        k += n - 1
    residual = LaurentPoly.from_dense(dense)
    if residual != ONE_POLY and len(residual.terms) == 1:
        (e, c), = residual.terms.items()
        residual, k = LaurentPoly.monomial(c), k + e
    return const, k, qints, j, residual


def _factor_scalar(s):
    cn, kn, qn, jn, rn = factor_poly(s.num)
    if s.den == ONE_POLY:
        cd, kd, qd, jd, rd = 1, 0, {}, 0, ONE_POLY
    else:
        cd, kd, qd, jd, rd = factor_poly(s.den)
    const = Fraction(cn, cd)
    return const, kn - kd, qn, jn, rn, qd, jd, rd


def _poly_text(p):
    s = str(p)
    return s if len(p.terms) == 1 and "-" not in s[1:] else f"({s})"


def scalar_text(s):
    """Text form of a nonzero Scalar as a product of recognizable factors;
    returns (sign, body) with body == "" meaning 1."""
    const, k, qn, jn, rn, qd, jd, rd = _factor_scalar(Scalar.coerce(s))
    sign = -1 if const < 0 else 1
    const = abs(const)
    num, den = [], []
    if const.numerator != 1:
        num.append(str(const.numerator))
    if const.denominator != 1:
        den.append(str(const.denominator))
    if k:
        num.append("q" if k == 1 else f"q^{k}")
    for n in sorted(qn, reverse=True):
        num.append(f"[{n}]_q" + (f"^{qn[n]}" if qn[n] > 1 else ""))
    if jn:
        num.append("(q - q^-1)" + (f"^{jn}" if jn > 1 else ""))
    if rn != ONE_POLY:
        num.append(_poly_text(rn))
    for n in sorted(qd, reverse=True):
        den.append(f"[{n}]_q" + (f"^{qd[n]}" if qd[n] > 1 else ""))
    if jd:
        den.append("(q - q^-1)" + (f"^{jd}" if jd > 1 else ""))
    if rd != ONE_POLY:
        den.append(_poly_text(rd))
    body = "*".join(num)
    if den:
        body = (body or "1") + "".join("/" + d for d in den)
    return sign, body


def render_text(e):
    e = as_element(e)
    if e.is_zero():
        return "0"
    out = []
    for w, c in e.items():
        sign, body = scalar_text(c)
        if not w:
            term = body or "1"
        else:
            term = f"{body} {w}" if body else w
        if not out:
            out.append(("-" if sign < 0 else "") + term)
        else:
            out.append((" - " if sign < 0 else " + ") + term)
    return "".join(out)


def _latex_poly(p):
    parts = []
    for i, e in enumerate(sorted(p.terms, reverse=True)):
        c = p.terms[e]
        sign = "-" if c < 0 else ("+" if i else "")
        a = abs(c)
        mono = "" if e == 0 else ("q" if e == 1 else f"q^{{{e}}}")
        coef = str(a) if (a != 1 or not mono) else ""
        parts.append(f"{sign}{coef}{mono}")
    return "".join(parts)


def scalar_latex(s):
    const, k, qn, jn, rn, qd, jd, rd = _factor_scalar(Scalar.coerce(s))
    sign = -1 if const < 0 else 1
    const = abs(const)

    def qint(n, m):
        return rf"\lbrack {n}\rbrack_q" if m == 1 else rf"\lbrack {n}\rbrack^{{{m}}}_q"

    def qq(j):
        return "(q-q^{-1})" + (f"^{{{j}}}" if j > 1 else "")

    num, den = [], []
    if const.numerator != 1:
        num.append(str(const.numerator))
    if const.denominator != 1:
        den.append(str(const.denominator))
    if k:
        num.append("q" if k == 1 else f"q^{{{k}}}")
    num += [qint(n, qn[n]) for n in sorted(qn, reverse=True)]
    if jn:
        num.append(qq(jn))
    if rn != ONE_POLY:
        num.append(f"({_latex_poly(rn)})")
    den += [qint(n, qd[n]) for n in sorted(qd, reverse=True)]
    if jd:
        den.append(qq(jd))
    if rd != ONE_POLY:
        den.append(f"({_latex_poly(rd)})")
    body = " ".join(num)
    if den:
        body = rf"\frac{{{body or '1'}}}{{{' '.join(den)}}}"
    return sign, body


def render_latex(e):
    e = as_element(e)
    if e.is_zero():
        return "0"
    out = []
    for i, (w, c) in enumerate(e.items()):
        sign, body = scalar_latex(c)
        word = w or "1"
        term = rf"{body}\, {word}" if body else word
        if i == 0:
            out.append(("-" if sign < 0 else "") + term)
        else:
            out.append((" - " if sign < 0 else " + ") + term)
    return "".join(out)


# ---------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<qint>\[\s*(\d+)\s*\]_q)
  | (?P<int>\d+)
  | (?P<q>q)
  | (?P<word>[xy]+)
  | (?P<op>[-+*/^()@]|⋆)
""", re.VERBOSE)


def _tokenize(text):
    pos = 0
    toks = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind == "qint":
            toks.append(("qint", int(m.group(3)), pos))
        elif kind == "int":
            toks.append(("int", int(m.group()), pos))
        elif kind != "ws":
            toks.append((kind, m.group(), pos))
        pos = m.end()
    toks.append(("end", None, pos))
    return toks


def _mul(a, b):
    if isinstance(a, Scalar) or isinstance(b, Scalar):
        return a * b
    return free_mul(a, b)


def _add(a, b, sign):
    if isinstance(a, Scalar) and isinstance(b, Scalar):
        return a + b if sign > 0 else a - b
    a, b = as_element(a), as_element(b)
    return a + b if sign > 0 else a - b


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v if v is not None else 'end of input'!r}", pos)

    def parse(self):
        value = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {v!r}", pos)
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, v, _ = self.peek()
            if kind == "op" and v in "+-":
                self.take()
                value = _add(value, self.term(), 1 if v == "+" else -1)
            else:
                return value

    def _starts_primary(self):
        kind, v, _ = self.peek()
        return kind in ("int", "qint", "q", "word") or (kind == "op" and v == "(")

    def term(self):
        value = self.unary()
        while True:
            kind, v, pos = self.peek()
            if kind == "op" and v in ("*", "/", "@", "⋆"):
                self.take()
                rhs = self.unary()
                if v == "*":
                    value = _mul(value, rhs)
                elif v == "/":
                    if not isinstance(rhs, Scalar):
                        raise ParseError("can only divide by a scalar", pos)
                    if rhs.is_zero():
                        raise ParseError("division by zero", pos)
                    value = value / rhs
                else:
                    from .qshuffle import shuffle_mul
                    value = shuffle_mul(as_element(value), as_element(rhs))
            elif self._starts_primary():
                value = _mul(value, self.unary())
            else:
                return value

    def unary(self):
        kind, v, _ = self.peek()
        if kind == "op" and v == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.primary()
        kind, v, caret = self.peek()
        if kind == "op" and v == "^":
            self.take()
            sign = 1
            kind, v, pos = self.peek()
            if kind == "op" and v in "+-":
                self.take()
                sign = -1 if v == "-" else 1
            kind, v, pos = self.take()
            if kind != "int":
                raise ParseError("expected an integer exponent", pos)
            if not isinstance(base, Scalar):
                raise ParseError("exponents apply to scalars only", caret)
            return base ** (sign * v)
        return base

    def primary(self):
        kind, v, pos = self.take()
        if kind == "int":
            return Scalar.coerce(v)
        if kind == "qint":
            return q_int(v)
        if kind == "q":
            return q_pow(1)
        if kind == "word":
            return Element.word(v)
        if kind == "op" and v == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {v if v is not None else 'end of input'!r}", pos)


def parse_element(text):
    return as_element(_Parser(text).parse())


def parse_scalar(text):
    value = _Parser(text).parse()
    if not isinstance(value, Scalar):
        raise ValueError(f"{text!r} denotes an Element, not a scalar")
    return value
