"""
Registry of exact identity checks and the suite runner.

Each check is a generator of (label, lhs, rhs) comparisons over a degree
bound; the first mismatch fails the check with witness lhs - rhs.
"""

from __future__ import annotations

import time
import traceback
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import pbw
from .catalan import (alternating_words, catalan_element, catalan_via_recursion,
                      catalan_y, gtilde, gtilde_via_recursion,
                      x_catalan, x_catalan_y)
from .freealg import UNIT, Element, X, Y, all_words, j_minus, j_plus
from .pbw import ALPHA0, ALPHA1, DELTA, beck, beck_closed_form, damiani, damiani_closed_form
from .qshuffle import (Series, commutator, q_commutator, series_exp, series_ln1p,
                       series_mul, series_scale_t, shuffle_mul, shuffle_prod)
from .report import IdentityCheck, VerificationReport
from .scalar import Scalar, q_int, q_minus_qinv, q_pow


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    run: Callable  # bound -> iterable of (label, lhs, rhs)
    bound: Callable  # N -> default bound


REGISTRY: dict[str, Check] = {}


def register(check_id, description, bound=lambda N: N):
    def deco(fn):
        if check_id in REGISTRY:
            raise ValueError(f"duplicate check id {check_id!r}")
        REGISTRY[check_id] = Check(check_id, description, fn, bound)
        return fn
    return deco


def _fixed(value):
    return lambda N: value


qi = q_int
s = q_minus_qinv
P = shuffle_prod


def xcy(k):
    return x_catalan_y(k)


C = catalan_element
G = gtilde


def _words_text(*pairs):
    return Element({w: c for c, w in pairs})


# ---------------------------------------------------------------------------
# the shuffle algebra itself

@register("eq-6.3", "q-Serre relation in x, y holds for the q-shuffle product", _fixed(4))
def _serre_x(bound):
    lhs = (P(X, X, X, Y) - qi(3) * P(X, X, Y, X) + qi(3) * P(X, Y, X, X) - P(Y, X, X, X))
    yield "x x x y", lhs, Element()


@register("eq-6.4", "q-Serre relation with x and y swapped", _fixed(4))
def _serre_y(bound):
    lhs = (P(Y, Y, Y, X) - qi(3) * P(Y, Y, X, Y) + qi(3) * P(Y, X, Y, Y) - P(X, Y, Y, Y))
    yield "y y y x", lhs, Element()


@register("ex-6.6", "Catalan elements C_0..C_3 term by term", _fixed(3))
def _catalan_golden(bound):
    two, three = qi(2), qi(3)
    yield "C_0", C(0), UNIT
    yield "C_1", C(1), _words_text((two, "xy"))
    yield "C_2", C(2), _words_text((two ** 2, "xyxy"), (three * two ** 2, "xxyy"))
    yield "C_3", C(3), _words_text(
        (two ** 3, "xyxyxy"), (three * two ** 3, "xxyyxy"), (three * two ** 3, "xyxxyy"),
        (three ** 2 * two ** 3, "xxyxyy"), (qi(4) * three ** 2 * two ** 2, "xxxyyy"))


# ---------------------------------------------------------------------------
# Damiani and Beck root vectors

@register("prop-6.7", "Damiani root vectors equal their Catalan closed forms")
def _damiani_closed(bound):
    for n in range(bound + 1):
        for kind in (ALPHA0, ALPHA1, DELTA):
            if kind == DELTA and n == 0:
                continue
            yield f"{kind} n={n}", damiani(kind, n), damiani_closed_form(kind, n)


@register("thm-7.1", "Beck imaginary root vectors equal [2n]/n q^-2n (q-q^-1)^(2n-1) xC_(n-1)y")
def _beck_closed(bound):
    for n in range(1, bound + 1):
        yield f"n={n}", beck(n), beck_closed_form(n)


@register("ex-4.4", "low-degree expansions between Damiani and Beck imaginary vectors", lambda N: min(N, 3))
def _beck_examples(bound):
    E = {k: damiani(DELTA, k) for k in range(1, bound + 1)}
    B = {k: beck(k) for k in range(1, bound + 1)}
    half = Scalar(1, 2)
    if bound >= 1:
        yield "E_d", E[1], -B[1]
        yield "B_d", B[1], -E[1]
    if bound >= 2:
        yield "E_2d", E[2], -B[2] - s() * half * P(B[1], B[1])
        yield "B_2d", B[2], -E[2] - s() * half * P(E[1], E[1])
    if bound >= 3:
        yield "E_3d", E[3], -B[3] - s() * P(B[1], B[2]) - s(2) * Scalar(1, 6) * P(B[1], B[1], B[1])
        yield "B_3d", B[3], -E[3] - s() * P(E[1], E[2]) - s(2) * Scalar(1, 3) * P(E[1], E[1], E[1])


def _commuting_pairs(elem, bound, start=1):
    for i in range(start, bound + 1):
        for j in range(i + 1, bound - i + 1):
            yield f"i={i} j={j}", commutator(elem(i), elem(j)), Element()


@register("lem-4.3", "Damiani imaginary root vectors commute (index sum <= bound)")
def _edelta_commute(bound):
    yield from _commuting_pairs(lambda k: damiani(DELTA, k), bound)


@register("lem-4.4", "[E_(i d+a0), E_(j d+a1)]_q = -q E_((i+j+1) d) for i+j+1 <= bound")
def _damiani_qcomm(bound):
    for i in range(bound):
        for j in range(bound - i):
            lhs = q_commutator(damiani(ALPHA0, i), damiani(ALPHA1, j))
            yield f"i={i} j={j}", lhs, -(q_pow(1) * damiani(DELTA, i + j + 1))


@register("lem-4.8", "Beck imaginary root vectors commute (index sum <= bound)")
def _beck_commute(bound):
    yield from _commuting_pairs(beck, bound)


@register("eq-4.6", "[E_(l d+a0), Beck_k] = [2k]/k E_((k+l) d+a0) for k+l <= bound")
def _beck_bracket0(bound):
    for k in range(1, bound + 1):
        for l in range(bound - k + 1):
            lhs = commutator(damiani(ALPHA0, l), beck(k))
            yield f"k={k} l={l}", lhs, qi(2 * k) / k * damiani(ALPHA0, k + l)


@register("eq-4.7", "[Beck_k, E_(l d+a1)] = [2k]/k E_((k+l) d+a1) for k+l <= bound")
def _beck_bracket1(bound):
    for k in range(1, bound + 1):
        for l in range(bound - k + 1):
            lhs = commutator(beck(k), damiani(ALPHA1, l))
            yield f"k={k} l={l}", lhs, qi(2 * k) / k * damiani(ALPHA1, k + l)


# ---------------------------------------------------------------------------
# orthogonality to the ideal J

def _orthogonality(e, length):
    """<e, w1 J+- w2> for all w1, w2 with len(w1) + len(w2) = length - 4."""
    if length < 4:
        return
    gens = (("J+", j_plus()), ("J-", j_minus()))
    for l1 in range(length - 3):
        for w1 in all_words(l1):
            for w2 in all_words(length - 4 - l1):
                for name, jj in gens:
                    total = Scalar(0)
                    for w, c in jj.items():
                        total = total + c * e.coeff(w1 + w + w2)
                    yield f"{w1 or '1'} {name} {w2 or '1'}", total


@register("lem-7.2", "xC_ky is orthogonal to J for k <= bound", lambda N: N - 1)
def _xcy_orthogonal(bound):
    for k in range(bound + 1):
        for label, value in _orthogonality(xcy(k), 2 * k + 2):
            yield f"k={k}: {label}", Element.scalar(value), Element()


@register("lem-9.3", "alternating words are orthogonal to J (length <= bound)", lambda N: 2 * N - 2)
def _alternating_orthogonal(bound):
    for length in range(4, bound + 1):
        for w in alternating_words(length):
            for label, value in _orthogonality(Element.word(w), length):
                yield f"{w}: {label}", Element.scalar(value), Element()


@register("lem-7.3", "xC_(k+1) and C_(k+1)y from commutators of x, y with xC_ky", lambda N: N - 1)
def _xcy_generates(bound):
    for k in range(bound + 1):
        e = xcy(k)
        yield f"xC k={k}", x_catalan(k + 1), commutator(X, e) / s()
        yield f"Cy k={k}", catalan_y(k + 1), commutator(e, Y) / s()


# ---------------------------------------------------------------------------
# consequences for the Catalan elements

@register("cor-6.8", "Catalan elements commute (index sum <= bound)")
def _catalan_commute(bound):
    yield from _commuting_pairs(C, bound)


@register("cor-6.9", "q^-1 C_(i+j+1) = [xC_i, C_jy]_q / (q - q^-1) for i+j <= bound - 1", lambda N: N - 1)
def _catalan_qcomm(bound):
    for i in range(bound + 1):
        for j in range(bound - i + 1):
            rhs = q_commutator(x_catalan(i), catalan_y(j)) / s()
            yield f"i={i} j={j}", q_pow(-1) * C(i + j + 1), rhs


def _xcy_series(bound, coeff):
    return Series.of([Element()] + [coeff(k) * xcy(k - 1) for k in range(1, bound + 1)], bound)


def _catalan_series(bound):
    return Series.of([C(k) for k in range(bound + 1)], bound)


def _gtilde_series(bound):
    return Series.of([G(k) for k in range(bound + 1)], bound)


def _compare_series(a, b, bound):
    for k in range(bound + 1):
        yield f"t^{k}", a[k], b[k]


@register("eq-8.1", "exp(sum [2k]/k xC_(k-1)y t^k) = C(t) through t^bound")
def _exp_catalan(bound):
    lhs = series_exp(_xcy_series(bound, lambda k: qi(2 * k) / k))
    yield from _compare_series(lhs, _catalan_series(bound), bound)


@register("cor-8.2", "xC_(n-1)y = n/[2n] [t^n] ln C(t) for n <= bound")
def _ln_catalan(bound):
    log = series_ln1p(_catalan_series(bound) - Series.one(bound))
    for n in range(1, bound + 1):
        yield f"n={n}", xcy(n - 1), log[n] * Scalar(n) / qi(2 * n)


@register("cor-8.4", "the elements xC_ky commute (index sum <= bound)", lambda N: N - 2)
def _xcy_commute(bound):
    yield from _commuting_pairs(xcy, bound, start=0)


@register("eq-8.2", "xC_(k+l+1) = [xC_l, xC_ky] / (q - q^-1) for k+l <= bound", lambda N: N - 1)
def _xc_from_xcy(bound):
    for k in range(bound + 1):
        for l in range(bound - k + 1):
            yield f"k={k} l={l}", x_catalan(k + l + 1), commutator(x_catalan(l), xcy(k)) / s()


@register("eq-8.3", "C_(k+l+1)y = [xC_ky, C_ly] / (q - q^-1) for k+l <= bound", lambda N: N - 1)
def _cy_from_xcy(bound):
    for k in range(bound + 1):
        for l in range(bound - k + 1):
            yield f"k={k} l={l}", catalan_y(k + l + 1), commutator(xcy(k), catalan_y(l)) / s()


# ---------------------------------------------------------------------------
# alternating words

@register("lem-9.4", "the alternating words Gt_k commute (index sum <= bound)")
def _gtilde_commute(bound):
    yield from _commuting_pairs(G, bound)


@register("eq-9.2", "Gt(qt) C(-t) Gt(q^-1 t) = 1 through t^bound")
def _ggc(bound):
    g = _gtilde_series(bound)
    lhs = series_mul(series_mul(series_scale_t(g, q_pow(1)), series_scale_t(_catalan_series(bound), -1)),
                     series_scale_t(g, q_pow(-1)))
    yield from _compare_series(lhs, Series.one(bound), bound)


@register("eq-9.3", "sum_i (-1)^i [2n-i] C_i Gt_(n-i) = 0 for 0 <= n <= bound")
def _cg_sum(bound):
    for n in range(bound + 1):
        total = Element()
        for i in range(n + 1):
            term = qi(2 * n - i) * shuffle_mul(C(i), G(n - i))
            total = total + (term if i % 2 == 0 else -term)
        yield f"n={n}", total, Element()


@register("cor-9.7", "C_n and Gt_n recovered from each other by the paired recursions")
def _cg_recursions(bound):
    for n in range(1, bound + 1):
        yield f"C_{n}", catalan_via_recursion(n), C(n)
        yield f"Gt_{n}", gtilde_via_recursion(n), G(n)


@register("eq-9.1", "exp(-sum (-1)^k [k]/k xC_(k-1)y t^k) = Gt(t) through t^bound")
def _exp_gtilde(bound):
    lhs = series_exp(_xcy_series(bound, lambda k: -(qi(k) / k) * (-1) ** k))
    yield from _compare_series(lhs, _gtilde_series(bound), bound)


# ---------------------------------------------------------------------------
# worked examples relating xC_ny, C_n and Gt_n in low degree

@register("appendix-A1", "xC_ny for n <= 3 term by term", _fixed(3))
def _appendix_a1(bound):
    two, three, four = qi(2), qi(3), qi(4)
    yield "xC_0y", xcy(0), Element.word("xy")
    yield "xC_1y", xcy(1), _words_text((two, "xxyy"))
    yield "xC_2y", xcy(2), _words_text((two ** 2, "xxyxyy"), (three * two ** 2, "xxxyyy"))
    yield "xC_3y", xcy(3), _words_text(
        (two ** 3, "xxyxyxyy"), (three * two ** 3, "xxxyyxyy"), (three * two ** 3, "xxyxxyyy"),
        (three ** 2 * two ** 3, "xxxyxyyy"), (four * three ** 2 * two ** 2, "xxxxyyyy"))


@register("appendix-A2", "xC_ny as polynomials in the C_k and back", _fixed(4))
def _appendix_a2(bound):
    c1, c2, c3, c4 = C(1), C(2), C(3), C(4)
    yield "xC_0y", xcy(0), c1 / qi(2)
    yield "xC_1y", xcy(1), (2 * c2 - P(c1, c1)) / qi(4)
    yield "xC_2y", xcy(2), (3 * c3 - 3 * P(c2, c1) + P(c1, c1, c1)) / qi(6)
    yield "xC_3y", xcy(3), (4 * c4 - 4 * P(c3, c1) - 2 * P(c2, c2) + 4 * P(c2, c1, c1)
                            - P(c1, c1, c1, c1)) / qi(8)
    e0, e1, e2, e3 = xcy(0), xcy(1), xcy(2), xcy(3)
    yield "C_1", c1, qi(2) * e0
    yield "C_2", c2, (qi(4) * e1 + qi(2) ** 2 * P(e0, e0)) / 2
    yield "C_3", c3, (2 * qi(6) * e2 + 3 * qi(2) * qi(4) * P(e1, e0) + qi(2) ** 3 * P(e0, e0, e0)) / 6
    yield "C_4", c4, (6 * qi(8) * e3 + 8 * qi(6) * qi(2) * P(e2, e0) + 3 * qi(4) ** 2 * P(e1, e1)
                      + 6 * qi(4) * qi(2) ** 2 * P(e1, e0, e0) + qi(2) ** 4 * P(e0, e0, e0, e0)) / 24


@register("appendix-A3", "C_n and Gt_n as polynomials in each other, including both degree-4 tables", _fixed(4))
def _appendix_a3(bound):
    g1, g2, g3, g4 = G(1), G(2), G(3), G(4)
    c1, c2, c3, c4 = C(1), C(2), C(3), C(4)
    two, three, four, five, six, seven, eight = (qi(k) for k in range(2, 9))
    yield "C_1", c1, two * g1
    yield "C_2", c2, (two * three * P(g1, g1) - four * g2) / two
    yield "C_3", c3, (two * six * g3 - (four ** 2 + two ** 2 * five) * P(g2, g1)
                      + two * three * four * P(g1, g1, g1)) / (two * three)
    table_c4 = [
        (-(two * three * eight), g4),
        (two ** 2 * three * seven + two * five * six, P(g3, g1)),
        (three * four * six, P(g2, g2)),
        (-(two * three ** 2 * six) - two ** 2 * five ** 2 - four ** 2 * five, P(g2, g1, g1)),
        (two * three * four * five, P(g1, g1, g1, g1)),
    ]
    yield "C_4 table", c4, sum((c * e for c, e in table_c4), Element()) / (two * three * four)
    yield "Gt_1", g1, c1 / two
    yield "Gt_2", g2, (three * P(c1, c1) - two ** 2 * c2) / (two * four)
    yield "Gt_3", g3, (two * three * four * c3 - (four ** 2 + two ** 2 * five) * P(c2, c1)
                       + three * five * P(c1, c1, c1)) / (two * four * six)
    table_g4 = [
        (-(two * four ** 2 * six), c4),
        (two * three * four * seven + four * five * six, P(c3, c1)),
        (two ** 2 * six ** 2, P(c2, c2)),
        (-(two ** 2 * five * seven) - three * six ** 2 - four ** 2 * seven, P(c2, c1, c1)),
        (three * five * seven, P(c1, c1, c1, c1)),
    ]
    yield "Gt_4 table", g4, sum((c * e for c, e in table_g4), Element()) / (two * four * six * eight)


@register("appendix-A4", "xC_ny as polynomials in the Gt_k and back", _fixed(4))
def _appendix_a4(bound):
    g1, g2, g3, g4 = G(1), G(2), G(3), G(4)
    e0, e1, e2, e3 = xcy(0), xcy(1), xcy(2), xcy(3)
    yield "xC_0y", e0, g1
    yield "xC_1y", e1, (P(g1, g1) - 2 * g2) / qi(2)
    yield "xC_2y", e2, (P(g1, g1, g1) - 3 * P(g1, g2) + 3 * g3) / qi(3)
    yield "xC_3y", e3, (P(g1, g1, g1, g1) - 4 * P(g1, g1, g2) + 2 * P(g2, g2)
                        + 4 * P(g1, g3) - 4 * g4) / qi(4)
    yield "Gt_1", g1, e0
    yield "Gt_2", g2, (P(e0, e0) - qi(2) * e1) / 2
    yield "Gt_3", g3, (P(e0, e0, e0) - 3 * qi(2) * P(e0, e1) + 2 * qi(3) * e2) / 6
    yield "Gt_4", g4, (P(e0, e0, e0, e0) - 6 * qi(2) * P(e0, e0, e1) + 3 * qi(2) ** 2 * P(e1, e1)
                       + 8 * qi(3) * P(e0, e2) - 6 * qi(4) * e3) / 24


# PBW checks are registered with their own runner below.
PBW_IDS = tuple(f"pbw-{b}" for b in pbw.BASES)


def all_ids():
    return sorted(list(REGISTRY) + list(PBW_IDS))


# ---------------------------------------------------------------------------
# running

def validate_q0(q0):
    q0 = Fraction(q0)
    if q0 in (0, 1, -1):
        raise ValueError(f"q0 = {q0} is not allowed: q0 must avoid 0 and +-1")
    return q0


def default_bound(check_id, N):
    if check_id in PBW_IDS:
        return N
    return REGISTRY[check_id].bound(N)


def run_check(check_id, N=5, q0=2, bound=None):
    """Run one registered check; exceptions become failures, never propagate."""
    q0 = validate_q0(q0)
    if check_id not in REGISTRY and check_id not in PBW_IDS:
        raise KeyError(f"unknown check id {check_id!r}")
    if bound is None:
        bound = default_bound(check_id, N)
    start = time.perf_counter()
    if check_id in PBW_IDS:
        description = f"ordered {check_id[4:]} PBW monomials are independent and count dim U_n"
        try:
            result = pbw.pbw_independence_check(check_id[4:], bound, q0)
        except Exception as exc:  # noqa: BLE001
            result = _error(check_id, bound, exc)
        result.description = description
        result.elapsed = time.perf_counter() - start
        return result
    check = REGISTRY[check_id]
    count = 0
    try:
        for label, lhs, rhs in check.run(bound):
            count += 1
            diff = Element.scalar(lhs) if not isinstance(lhs, Element) else lhs
            diff = diff - rhs
            if not diff.is_zero():
                return IdentityCheck(check_id, bound, "fail", witness=diff,
                                     detail=f"{label}: lhs - rhs != 0",
                                     elapsed=time.perf_counter() - start,
                                     description=check.description)
    except Exception as exc:  # noqa: BLE001
        result = _error(check_id, bound, exc)
        result.description = check.description
        result.elapsed = time.perf_counter() - start
        return result
    return IdentityCheck(check_id, bound, "pass", detail=f"{count} comparisons",
                         elapsed=time.perf_counter() - start, description=check.description)


def _error(check_id, bound, exc):
    # no difference element exists; the unit stands in as the witness
    tb = traceback.format_exception_only(type(exc), exc)[-1].strip()
    return IdentityCheck(check_id, bound, "fail", witness=UNIT, detail=f"error: {tb}")


@dataclass
class SuiteConfig:
    N: int = 5
    q0: Fraction = Fraction(2)
    only: tuple | None = None
    bounds: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be >= 1")
        self.q0 = validate_q0(self.q0)
        known = set(all_ids())
        for cid in list(self.only or ()) + list(self.bounds):
            if cid not in known:
                raise KeyError(f"unknown check id {cid!r}")

    def ids(self):
        return sorted(self.only) if self.only else all_ids()


def run_suite(N=5, q0=2, only=None, bounds=None, progress=None):
    cfg = SuiteConfig(N, q0, tuple(only) if only else None, dict(bounds or {}))
    report = VerificationReport(cfg.N, cfg.q0)
    for cid in cfg.ids():
        result = run_check(cid, cfg.N, cfg.q0, cfg.bounds.get(cid))
        report.checks.append(result)
        if progress is not None:
            progress(result)
    return report


def extra_check(label, lhs, rhs, N=0):
    """Compare two user-supplied Elements."""
    start = time.perf_counter()
    diff = lhs - rhs
    status = "pass" if diff.is_zero() else "fail"
    return IdentityCheck(f"extra:{label}", N, status, witness=None if diff.is_zero() else diff,
                         elapsed=time.perf_counter() - start, description="user-supplied identity")

