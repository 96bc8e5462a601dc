import pytest
from hypothesis import given
from hypothesis import strategies as st

from qshuffle_pbw.freealg import UNIT, Element, X, Y
from qshuffle_pbw.qshuffle import (Series, series_exp, series_inverse, series_ln,
                                   series_ln1p, series_mul, series_scale_t, shuffle_mul)
from qshuffle_pbw.scalar import Scalar, q_pow
from strategies import elements

ORDER = 4


def forward_substitution_inverse(a):
    """b with a*b = 1, solved coefficient by coefficient."""
    b = [UNIT]
    for k in range(1, a.order + 1):
        acc = Element()
        for i in range(1, k + 1):
            acc = acc + shuffle_mul(a[i], b[k - i])
        b.append(-acc)
    return Series(tuple(b))


@st.composite
def series(draw, constant=None):
    cs = [draw(elements(max_terms=2, max_len=2)) for _ in range(ORDER + 1)]
    if constant is not None:
        cs[0] = constant
    return Series.of(cs, ORDER)


def test_exp_of_single_letter():
    a = Series.of([Element(), X], 3)
    e = series_exp(a)
    assert e[2] == shuffle_mul(X, X) / 2
    assert e[3] == shuffle_mul(shuffle_mul(X, X), X) / 6


@given(series(constant=Element()))
def test_exp_ln_round_trip(a):
    assert series_ln(series_exp(a)) == a


@given(series(constant=UNIT))
def test_ln_exp_round_trip(a):
    assert series_exp(series_ln(a)) == a


@given(series(constant=UNIT))
def test_inverse_matches_forward_substitution(a):
    inv = series_inverse(a)
    assert inv == forward_substitution_inverse(a)
    assert series_mul(a, inv).is_constant_one()


def test_scale_t():
    a = Series.of([UNIT, X, Y], 2)
    b = series_scale_t(a, q_pow(1))
    assert b[1] == X * q_pow(1) and b[2] == Y * q_pow(2)


def test_guards():
    with pytest.raises(ValueError):
        series_exp(Series.one(2))
    with pytest.raises(ValueError):
        series_ln1p(Series.one(2))
    with pytest.raises(ValueError):
        Series.one(2) + Series.one(3)
    with pytest.raises(TypeError):
        Series.one(2) * Series.one(2)
    assert (Series.one(2) * Scalar(2))[0] == UNIT * 2
