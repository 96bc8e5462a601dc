"""
Acceptance criteria, one test per criterion.  Each prints a PASS/FAIL line
in the terminal summary (see conftest.py).  Run directly with
    python tests/test_acceptance.py
"""

import random
import sys
import time
from math import comb

import pytest

from qshuffle_pbw import catalan, pbw, verify
from qshuffle_pbw.catalan import catalan_element, catalan_words, substituted_catalan, x_catalan_y
from qshuffle_pbw.freealg import UNIT, Element, X, Y
from qshuffle_pbw.qshuffle import (Series, clear_cache, series_exp, series_ln, shuffle_mul,
                                   shuffle_mul_right_recursion, shuffle_prod,
                                   word_shuffle)
from qshuffle_pbw.scalar import Scalar, q_int, q_pow

Q0 = 2


def fresh():
    clear_cache()
    pbw.clear_caches()
    catalan._catalan_element.cache_clear()


def run(bounds, N=5):
    report = verify.run_suite(N, Q0, only=list(bounds), bounds=bounds)
    failures = [(c.id, c.detail) for c in report.checks if not c.passed]
    return report, failures


def test_criterion_01_golden_catalan_and_xcy():
    fresh()
    t0 = time.perf_counter()
    two, three, four = q_int(2), q_int(3), q_int(4)
    printed_c = {
        1: {"xy": two},
        2: {"xyxy": two ** 2, "xxyy": three * two ** 2},
        3: {"xyxyxy": two ** 3, "xxyyxy": three * two ** 3, "xyxxyy": three * two ** 3,
            "xxyxyy": three ** 2 * two ** 3, "xxxyyy": four * three ** 2 * two ** 2},
    }
    printed_xcy = {
        0: {"xy": Scalar(1)},
        1: {"xxyy": two},
        2: {"xxyxyy": two ** 2, "xxxyyy": three * two ** 2},
        3: {"xxyxyxyy": two ** 3, "xxxyyxyy": three * two ** 3, "xxyxxyyy": three * two ** 3,
            "xxxyxyyy": three ** 2 * two ** 3, "xxxxyyyy": four * three ** 2 * two ** 2},
    }
    for n, terms in printed_c.items():
        e = catalan_element(n)
        assert sorted(e.terms) == sorted(terms)
        assert all(e.coeff(w) == c for w, c in terms.items())
    for n, terms in printed_xcy.items():
        e = x_catalan_y(n)
        assert sorted(e.terms) == sorted(terms)
        assert all(e.coeff(w) == c for w, c in terms.items())
    assert catalan_element(0) == UNIT
    _, failures = run({"ex-6.6": 3, "appendix-A1": 3})
    assert not failures, failures
    assert time.perf_counter() - t0 < 1.0


def test_criterion_02_beck_closed_form():
    fresh()
    t0 = time.perf_counter()
    for n in range(1, 6):
        assert pbw.beck(n) == pbw.beck_closed_form(n)
    _, failures = run({"thm-7.1": 5})
    assert not failures, failures
    assert time.perf_counter() - t0 < 60


def test_criterion_03_damiani_closed_form():
    fresh()
    t0 = time.perf_counter()
    _, failures = run({"prop-6.7": 5})
    assert not failures, failures
    assert time.perf_counter() - t0 < 60


def test_criterion_04_series_identities():
    fresh()
    t0 = time.perf_counter()
    _, failures = run({"eq-8.1": 5, "eq-9.1": 5, "eq-9.2": 5, "eq-9.3": 5})
    assert not failures, failures
    assert time.perf_counter() - t0 < 90


def test_criterion_05_appendix_examples():
    fresh()
    report, failures = run({"appendix-A1": 3, "appendix-A2": 4, "appendix-A3": 4, "appendix-A4": 4})
    assert not failures, failures
    # both degree-4 tables are among the comparisons
    assert report.get("appendix-A3").detail == "8 comparisons"


def test_criterion_06_q_serre():
    fresh()
    p = shuffle_prod
    t = q_int(3)
    assert (p(X, X, X, Y) - t * p(X, X, Y, X) + t * p(X, Y, X, X) - p(Y, X, X, X)).is_zero()
    assert (p(Y, Y, Y, X) - t * p(Y, Y, X, Y) + t * p(Y, X, Y, Y) - p(X, Y, Y, Y)).is_zero()
    _, failures = run({"eq-6.3": 4, "eq-6.4": 4})
    assert not failures, failures


def test_criterion_07_orthogonality():
    fresh()
    report, failures = run({"lem-7.2": 4, "lem-9.3": 8})
    assert not failures, failures
    assert report.get("lem-7.2").degree == 4 and report.get("lem-9.3").degree == 8


def test_criterion_08_commutation():
    fresh()
    bounds = {"cor-6.8": 8, "cor-8.4": 6, "lem-9.4": 8, "lem-4.3": 8, "lem-4.8": 8}
    _, failures = run(bounds)
    assert not failures, failures


def test_criterion_09_pbw_structure():
    fresh()
    t0 = time.perf_counter()
    assert (2 ** 4, pbw.dim_J(4, Q0), pbw.dim_U(4, Q0)) == (16, 2, 14)
    for n in range(9):
        counts = {len(pbw.pbw_monomials(b, n)) for b in pbw.BASES}
        assert counts == {2 ** n - pbw.dim_J(n, Q0)}
    report, failures = run({f"pbw-{b}": 8 for b in pbw.BASES})
    assert not failures, failures
    for c in report.checks:
        assert c.detail.startswith(f"q0={Q0};")
    assert time.perf_counter() - t0 < 300


def test_criterion_10_property_suites():
    fresh()
    rng = random.Random(20240)

    def rand_word(k):
        return "".join(rng.choice("xy") for _ in range(k))

    def rand_elem():
        return Element({rand_word(rng.randint(0, 3)): q_pow(rng.randint(-2, 2)) * rng.randint(-3, 3)
                        for _ in range(rng.randint(1, 3))})

    for _ in range(30):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert shuffle_mul(shuffle_mul(a, b), c) == shuffle_mul(a, shuffle_mul(b, c))
        assert shuffle_mul(UNIT, a) == a == shuffle_mul(a, UNIT)
        assert shuffle_mul(a, b) == shuffle_mul_right_recursion(a, b)
    for _ in range(10):
        s = Series.of([Element()] + [rand_elem() for _ in range(4)], 4)
        assert series_ln(series_exp(s)) == s
    for _ in range(50):
        u, v = rand_word(rng.randint(0, 6)), rand_word(rng.randint(0, 6))
        total = sum(sum(d.values()) for d in word_shuffle(u, v).values())
        assert total == comb(len(u) + len(v), len(u))
    for n in range(9):
        assert len(catalan_words(n)) == comb(2 * n, n) // (n + 1)


def test_criterion_11_mutation_sensitivity():
    fresh()
    two = q_int(2)
    # C_2 with the [3]_q factor on xxyy replaced by [2]_q
    corrupted = Element({"xyxy": two ** 2, "xxyy": two * two ** 2})
    with substituted_catalan(2, corrupted):
        report = verify.run_suite(5, Q0, only=["thm-7.1", "eq-8.1"])
    for check_id in ("thm-7.1", "eq-8.1"):
        c = report.get(check_id)
        assert c.status == "fail"
        assert c.witness is not None and not c.witness.is_zero()
    fresh()
    assert verify.run_suite(5, Q0, only=["thm-7.1", "eq-8.1"]).passed


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
