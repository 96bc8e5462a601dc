"""
Damiani and Beck root vectors as elements of the q-shuffle algebra
(A -> x, B -> y), the ideal J, graded dimensions, and truncated PBW checks.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .catalan import (alternating_word, catalan_element, catalan_y,
                      x_catalan, x_catalan_y)
from .freealg import (UNIT, Element, X, Y, all_words, free_prod, j_minus,
                      j_plus)
from .linalg import Echelon, independent_subset
from .qshuffle import Series, series_ln1p, shuffle_mul
from .report import IdentityCheck
from .scalar import (Scalar, SpecializationError, q_int, q_minus_qinv, q_pow)

ALPHA0, ALPHA1, DELTA = "a0", "a1", "delta"
KINDS = (ALPHA0, ALPHA1, DELTA)
BASES = ("damiani", "beck", "xcy", "alternating")
FALLBACK_Q0 = (Fraction(2), Fraction(3), Fraction(5, 2))


def _check_kind(kind, n):
    if kind not in KINDS:
        raise ValueError(f"unknown root vector kind {kind!r}")
    if n < 0 or (kind == DELTA and n == 0):
        raise ValueError(f"E for kind {kind} needs n >= {1 if kind == DELTA else 0}, got {n}")


@lru_cache(maxsize=None)
def damiani(kind, n):
    """Image of Damiani's recursively defined root vector."""
    _check_kind(kind, n)
    if kind == ALPHA0 and n == 0:
        return X
    if kind == ALPHA1 and n == 0:
        return Y
    if kind == DELTA:
        prev = damiani(ALPHA1, n - 1)
        return q_pow(-2) * shuffle_mul(prev, X) - shuffle_mul(X, prev)
    e_delta = damiani(DELTA, 1)
    prev = damiani(kind, n - 1)
    if kind == ALPHA0:
        bracket = shuffle_mul(e_delta, prev) - shuffle_mul(prev, e_delta)
    else:
        bracket = shuffle_mul(prev, e_delta) - shuffle_mul(e_delta, prev)
    return bracket / q_int(2)


def damiani_closed_form(kind, n):
    _check_kind(kind, n)
    if kind == ALPHA0:
        return q_pow(-2 * n) * q_minus_qinv(2 * n) * x_catalan(n)
    if kind == ALPHA1:
        return q_pow(-2 * n) * q_minus_qinv(2 * n) * catalan_y(n)
    return -(q_pow(-2 * n) * q_minus_qinv(2 * n - 1)) * catalan_element(n)


_beck_values = {}


def beck(n):
    """
    Image of Beck's imaginary root vector: the t^n coefficient of
    (q - q^-1)^-1 ln(1 - (q - q^-1) sum_k E_{k delta} t^k).
    """
    if n < 1:
        raise ValueError(f"Beck root vector needs n >= 1, got {n}")
    if n not in _beck_values:
        s = q_minus_qinv()
        rhs = Series.of([Element()] + [-(s * damiani(DELTA, k)) for k in range(1, n + 1)], n)
        log = series_ln1p(rhs)
        for k in range(1, n + 1):
            _beck_values.setdefault(k, log[k] / s)
    return _beck_values[n]


def beck_closed_form(n):
    if n < 1:
        raise ValueError(f"Beck root vector needs n >= 1, got {n}")
    c = q_int(2 * n) * Scalar(1, n) * q_pow(-2 * n) * q_minus_qinv(2 * n - 1)
    return c * x_catalan_y(n - 1)


def clear_caches():
    damiani.cache_clear()
    _beck_values.clear()
    _dim_J.cache_clear()


# ---------------------------------------------------------------------------
# the ideal J and dimensions

@dataclass
class GradedSubspaceBasis:
    degree: int
    vectors: list
    q0: Fraction

    @property
    def dim(self):
        return len(self.vectors)


def ideal_spanning_set(n):
    """w1 J^+- w2 with len(w1) + len(w2) = n - 4."""
    if n < 4:
        return []
    jp, jm = j_plus(), j_minus()
    out = []
    for l1 in range(n - 3):
        for w1 in all_words(l1):
            for w2 in all_words(n - 4 - l1):
                out.append(free_prod(w1, jp, w2))
                out.append(free_prod(w1, jm, w2))
    return out


def ideal_degree_basis(n, q0=2):
    """Maximal independent subset of the spanning set of J_n, certified by
    exact rank at q = q0."""
    if n < 4:
        raise ValueError("J has no component below degree 4")
    q0 = Fraction(q0)
    gens = ideal_spanning_set(n)
    keep = independent_subset([g.specialize(q0) for g in gens])
    return GradedSubspaceBasis(n, [gens[i] for i in keep], q0)


@lru_cache(maxsize=None)
def _dim_J(n, q0):
    if n < 4:
        return 0
    return ideal_degree_basis(n, q0).dim


def dim_J(n, q0=2):
    return _dim_J(n, Fraction(q0))


def dim_U(n, q0=2):
    """dim V_n - dim J_n."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return 2 ** n - dim_J(n, q0)


# ---------------------------------------------------------------------------
# PBW generators and monomials

@dataclass(frozen=True)
class Generator:
    label: str
    degree: int
    position: int
    family: str
    index: int


@dataclass(frozen=True)
class PBWMonomial:
    factors: tuple
    degree: int

    def __str__(self):
        return " ".join(g.label for g in self.factors) or "1"


def generators(basis, n):
    """Generators of degree <= n, listed in the basis' linear order."""
    if basis not in BASES:
        raise ValueError(f"unknown PBW basis {basis!r}; expected one of {BASES}")
    specs = []
    if basis in ("damiani", "beck"):
        imag = "beck" if basis == "beck" else DELTA
        specs += [(f"E[{k}d+a0]", 2 * k + 1, ALPHA0, k) for k in range(0, (n - 1) // 2 + 1)]
        name = "Beck" if basis == "beck" else "E"
        specs += [(f"{name}[{k}d]", 2 * k, imag, k) for k in range(1, n // 2 + 1)]
        specs += [(f"E[{k}d+a1]", 2 * k + 1, ALPHA1, k) for k in reversed(range(0, (n - 1) // 2 + 1))]
    elif basis == "xcy":
        specs += [(f"xC{k}", 2 * k + 1, "xC", k) for k in range(0, (n - 1) // 2 + 1)]
        specs += [(f"xC{k}y", 2 * k + 2, "xCy", k) for k in range(0, (n - 2) // 2 + 1)]
        specs += [(f"C{k}y", 2 * k + 1, "Cy", k) for k in reversed(range(0, (n - 1) // 2 + 1))]
    else:
        # within each family: increasing index
        specs += [(f"W{-i}", 2 * i + 1, "W", -i) for i in range(0, (n - 1) // 2 + 1)]
        specs += [(f"Gt{j}", 2 * j, "Gt", j) for j in range(1, n // 2 + 1)]
        specs += [(f"W{k}", 2 * k - 1, "W", k) for k in range(1, (n + 1) // 2 + 1)]
    return [Generator(label, deg, pos, fam, idx)
            for pos, (label, deg, fam, idx) in enumerate(specs) if 0 < deg <= n]


def generator_element(g):
    fam, k = g.family, g.index
    if fam in KINDS:
        return damiani(fam, k)
    if fam == "beck":
        return beck(k)
    if fam == "xC":
        return x_catalan(k)
    if fam == "Cy":
        return catalan_y(k)
    if fam == "xCy":
        return x_catalan_y(k)
    return alternating_word(fam, k)


def pbw_monomials(basis, n):
    """Weakly increasing products of generators with total degree n."""
    if n < 0:
        return []
    gens = generators(basis, n)
    out = []

    def extend(start, remaining, acc):
        if remaining == 0:
            out.append(PBWMonomial(tuple(acc), n))
            return
        for i in range(start, len(gens)):
            g = gens[i]
            if g.degree <= remaining:
                acc.append(g)
                extend(i, remaining - g.degree, acc)
                acc.pop()

    extend(0, n, [])
    return out


def _evaluator():
    memo = {(): UNIT}

    def evaluate(factors):
        factors = tuple(factors)
        hit = memo.get(factors)
        if hit is None:
            hit = shuffle_mul(evaluate(factors[:-1]), generator_element(factors[-1]))
            memo[factors] = hit
        return hit

    return evaluate


def evaluate_monomial(m):
    return _evaluator()(m.factors)


def pbw_independence_check(basis, N, q0=2):
    """
    For every degree n <= N: the ordered products are linearly independent
    after specializing q = q0 (exact rank), and their number is dim U_n.
    A vanishing denominator at q0 moves on to the next fallback value.
    """
    start = time.perf_counter()
    candidates = [Fraction(q0)] + [c for c in FALLBACK_Q0 if c != Fraction(q0)]
    evaluate = _evaluator()
    last_error = None
    for q in candidates:
        try:
            result = _independence_at(basis, N, q, evaluate)
        except SpecializationError as exc:
            last_error = exc
            continue
        if result is None:  # dependency caused by the specialization only
            continue
        result.elapsed = time.perf_counter() - start
        return result
    raise SpecializationError(
        f"no usable specialization among {candidates}: {last_error}")


def _independence_at(basis, N, q0, evaluate):
    counts = []
    for n in range(N + 1):
        monos = pbw_monomials(basis, n)
        expected = dim_U(n, q0)
        if len(monos) != expected:
            return IdentityCheck(
                f"pbw-{basis}", N, "fail",
                witness=Element.scalar(len(monos) - expected),
                detail=f"degree {n}: {len(monos)} monomials but dim U_{n} = {expected}")
        ech = Echelon()
        values = [evaluate(m.factors) for m in monos]
        for i, v in enumerate(values):
            relation = ech.add(v.specialize(q0))
            if relation is not None:
                combo = Element()
                for j, c in relation.items():
                    combo = combo + values[j] * c
                if not combo.is_zero():
                    return None
                rel = " + ".join(f"({c})*[{monos[j]}]" for j, c in sorted(relation.items()))
                return IdentityCheck(
                    f"pbw-{basis}", N, "fail", witness=v,
                    detail=f"degree {n}: dependent monomial [{monos[i]}]; relation {rel} = 0")
        counts.append(len(monos))
    return IdentityCheck(f"pbw-{basis}", N, "pass",
                         detail=f"q0={q0}; counts {counts}")
