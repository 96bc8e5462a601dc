import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qshuffle_pbw.freealg import UNIT, Element, X, Y
from qshuffle_pbw.qshuffle import (cache_info, clear_cache, pairing, set_cache_limit,
                                   shuffle_mul, shuffle_mul_right_recursion, shuffle_prod,
                                   word_shuffle)
from qshuffle_pbw.scalar import LaurentPoly, Scalar, q_pow
from strategies import elements, words


def brute_force_shuffle(u, v):
    """Sum over all interleavings; each v-letter placed before a u-letter
    contributes q^(u_i, v_j)."""
    n = len(u) + len(v)
    out = {}
    for pos in itertools.combinations(range(n), len(u)):
        pos_set = set(pos)
        w, ui, vi, exp = [], 0, 0, 0
        placed_v = []
        for k in range(n):
            if k in pos_set:
                exp += sum(pairing(u[ui], b) for b in placed_v)
                w.append(u[ui])
                ui += 1
            else:
                placed_v.append(v[vi])
                w.append(v[vi])
                vi += 1
        key = "".join(w)
        out.setdefault(key, {}).setdefault(exp, 0)
        out[key][exp] += 1
    return Element({w: Scalar(LaurentPoly(d)) for w, d in out.items()})


def test_small_products():
    assert shuffle_mul(X, Y) == Element({"xy": 1, "yx": q_pow(-2)})
    assert shuffle_mul(Y, Y) == Element({"yy": 1 + q_pow(2)})
    xyyy = Element({"xyyy": 1, "yxyy": q_pow(-2), "yyxy": q_pow(-4), "yyyx": q_pow(-6)})
    assert shuffle_mul(X, Element.word("yyy")) == xyyy
    yyyx = Element({"xyyy": q_pow(-6), "yxyy": q_pow(-4), "yyxy": q_pow(-2), "yyyx": 1})
    assert shuffle_mul(Element.word("yyy"), X) == yyyx


@given(words(max_size=5), words(max_size=5))
def test_matches_interleaving_oracle(u, v):
    assert shuffle_mul(Element.word(u), Element.word(v)) == brute_force_shuffle(u, v)


@given(elements(), elements())
def test_left_and_right_recursions_agree(a, b):
    assert shuffle_mul(a, b) == shuffle_mul_right_recursion(a, b)


@given(elements(max_terms=2, max_len=3), elements(max_terms=2, max_len=3),
       elements(max_terms=2, max_len=3))
def test_associative_with_unit(a, b, c):
    assert shuffle_mul(shuffle_mul(a, b), c) == shuffle_mul(a, shuffle_mul(b, c))
    assert shuffle_mul(UNIT, a) == a == shuffle_mul(a, UNIT)
    assert shuffle_mul(a, b + c) == shuffle_mul(a, b) + shuffle_mul(a, c)


@given(words(max_size=6), words(max_size=6))
def test_q_to_one_counts_binomial(u, v):
    total = sum(sum(d.values()) for d in word_shuffle(u, v).values())
    assert total == comb(len(u) + len(v), len(u))
    assert all(len(w) == len(u) + len(v) for w in word_shuffle(u, v))


@given(words(max_size=5), words(max_size=5))
def test_reversed_order_inverts_q(u, v):
    # v*u equals u*v with q -> q^-1, up to the monomial q^(sum of all pairings)
    total = sum(pairing(a, b) for a in u for b in v)
    uv, vu = word_shuffle(u, v), word_shuffle(v, u)
    assert set(uv) == set(vu)
    for w, d in uv.items():
        assert vu[w] == {total - e: m for e, m in d.items()}


def test_cache_overflow_clears_and_stays_correct():
    set_cache_limit(50)
    try:
        a = Element({"xyxy": 1, "xxyy": 2})
        first = shuffle_mul(a, a)
        assert cache_info()["words"] <= 50 or cache_info()["entries"] <= 2
        assert shuffle_mul(a, a) == first
    finally:
        set_cache_limit(2_000_000)
        clear_cache()


def test_shuffle_prod_is_iterated_product():
    assert shuffle_prod() == UNIT
    assert shuffle_prod(X, Y, X) == shuffle_mul(shuffle_mul(X, Y), X)


@pytest.mark.parametrize("scale", [Scalar(3), q_pow(2), Scalar(0)])
def test_scalars_pass_through(scale):
    a = Element({"xy": 1, "y": q_pow(1)})
    assert shuffle_mul(a * scale, X) == shuffle_mul(a, X) * scale
    assert shuffle_mul(UNIT * scale, a) == a * scale


@given(st.integers(0, 3))
def test_grading(n):
    a = Element.word("x" * n + "y")
    assert shuffle_mul(a, a).is_homogeneous(2 * n + 2)
