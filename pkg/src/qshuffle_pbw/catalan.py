"""
Catalan words and elements, the free products xC_n, C_ny, xC_ny, and the
alternating words.
"""

from __future__ import annotations

from contextlib import contextmanager
from functools import lru_cache

from .freealg import BAR, UNIT, Element, X, Y, free_mul
from .qshuffle import shuffle_mul
from .scalar import ONE, Scalar, q_int


def is_catalan(w):
    h = 0
    for c in w:
        h += BAR[c]
        if h < 0:
            return False
    return h == 0


def catalan_words(n):
    """Catalan words of length 2n in lexicographic order (x < y)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def extend(w, height, xs):
        if len(w) == 2 * n:
            out.append(w)
            return
        if xs < n:
            extend(w + "x", height + 1, xs + 1)
        if height > 0:
            extend(w + "y", height - 1, xs)

    extend("", 0, 0)
    return out


def catalan_weight(w):
    """prod_{i=0}^{len w} [1 + bar(u_1) + ... + bar(u_i)]_q."""
    c = ONE
    h = 1
    for letter in w:
        h += BAR[letter]
        c = c * q_int(h)
    return c


_overrides = {}


@lru_cache(maxsize=None)
def _catalan_element(n):
    return Element({w: catalan_weight(w) for w in catalan_words(n)})


def catalan_element(n):
    """C_n, the n-th Catalan element (in V_{2n})."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n in _overrides:
        return _overrides[n]
    return _catalan_element(n)


@contextmanager
def substituted_catalan(n, element):
    """Temporarily replace C_n everywhere (used for mutation testing)."""
    from . import pbw
    saved = dict(_overrides)
    _overrides[n] = element
    pbw.clear_caches()
    try:
        yield
    finally:
        _overrides.clear()
        _overrides.update(saved)
        pbw.clear_caches()


def x_catalan(n):
    return free_mul(X, catalan_element(n))


def catalan_y(n):
    return free_mul(catalan_element(n), Y)


def x_catalan_y(n):
    """The free product x C_n y (in V_{2n+2})."""
    return free_mul(X, free_mul(catalan_element(n), Y))


# ---------------------------------------------------------------------------
# alternating words

FAMILIES = ("W", "G", "Gt")


def alternating_text(family, k):
    """
    W_0 = x, W_-1 = xyx, ...;  W_1 = y, W_2 = yxy, ...;
    G_k = (yx)^k;  Gt_k = (xy)^k;  G_0 = Gt_0 = 1.
    """
    if family == "W":
        return "xy" * (-k) + "x" if k <= 0 else "y" + "xy" * (k - 1)
    if family in ("G", "Gt"):
        if k < 0:
            raise ValueError(f"{family}_{k}: index must be nonnegative")
        return ("yx" if family == "G" else "xy") * k
    raise ValueError(f"unknown alternating family {family!r}")


def alternating_word(family, k):
    return Element.word(alternating_text(family, k))


def gtilde(k):
    return alternating_word("Gt", k)


def is_alternating(w):
    return bool(w) and all(a != b for a, b in zip(w, w[1:]))


def alternating_words(length):
    """The two alternating words of a given positive length."""
    if length < 1:
        return []
    return [("xy" * length)[:length], ("yx" * length)[:length]]


def classify_alternating(w):
    """(family, index) for an alternating word; Gt preferred over G naming."""
    if not is_alternating(w):
        raise ValueError(f"{w!r} is not alternating")
    n = len(w)
    if n % 2:
        return ("W", -(n // 2)) if w[0] == "x" else ("W", n // 2 + 1)
    return ("Gt", n // 2) if w[0] == "x" else ("G", n // 2)


# ---------------------------------------------------------------------------
# the paired recursions linking C_n and Gt_n

def catalan_via_recursion(n):
    """C_n from the alternating words Gt_k and lower C_i."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cs = [UNIT]
    for m in range(1, n + 1):
        total = Element()
        for i in range(m):
            term = shuffle_mul(cs[i], gtilde(m - i)) * q_int(2 * m - i)
            total = total + (term if (m - i) % 2 == 0 else -term)
        cs.append(total * Scalar(-1) / q_int(m))
    return cs[n]


def gtilde_via_recursion(n):
    """Gt_n from the Catalan elements C_i and lower Gt_k."""
    if n < 1:
        raise ValueError("n must be >= 1")
    gs = [UNIT]
    for m in range(1, n + 1):
        total = Element()
        for i in range(1, m + 1):
            term = shuffle_mul(catalan_element(i), gs[m - i]) * q_int(2 * m - i)
            total = total + (term if i % 2 == 0 else -term)
        gs.append(total * Scalar(-1) / q_int(2 * m))
    return gs[n]
