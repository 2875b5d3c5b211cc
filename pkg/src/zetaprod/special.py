"""Hurwitz zeta continuation and a Stirling-series log-gamma.

The workhorse is Euler-Maclaurin summation: with M lattice terms, J Bernoulli
corrections and a = M + x,

    zeta(s, x) = sum_{m<M} (m+x)^-s  +  a^(1-s)/(s-1)  +  a^-s / 2
                 + sum_{j=1..J} B_{2j}/(2j)! * (s)_{2j-1} * a^(-s-2j+1)

where (s)_k = s(s+1)...(s+k-1).  The same expansion differentiated term by
term in s gives the derivative; Pochhammer factors and their s-derivatives
are tracked with a running product-rule recurrence, so no numerical
differentiation is involved.  The reported tail bound is the magnitude of the
first omitted correction term (j = J+1).

All arithmetic is binary64.  log_gamma is deliberately kept on a separate
route (argument shift plus Stirling series) so it can serve as an
independent oracle for the zeta-derivative special values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from . import arith

DEFAULT_TAIL_TERMS = 15
POLE_GUARD = 1e-8

_MIN_ABSCISSA = 15.0   # Euler-Maclaurin wants (M + x) >= max(15, |s| + 10)
_STIRLING_SHIFT = 10.0
_HALF_LN_TWO_PI = 0.9189385332046727


class PoleError(ValueError):
    """Evaluation requested too close to the s = 1 pole."""


@dataclass(frozen=True)
class EvalResult:
    """A binary64 value plus the truncation-error estimate that produced it."""

    value: float
    tail_bound: float
    params: dict[str, Any]


@lru_cache(maxsize=None)
def _b2j_over_factorial(j: int) -> float:
    return float(arith.bernoulli(2 * j) / math.factorial(2 * j))


@lru_cache(maxsize=None)
def _stirling_coefficient(j: int) -> float:
    return float(arith.bernoulli(2 * j) / (2 * j * (2 * j - 1)))


def _check_domain(s: float, x: float) -> None:
    if not x > 0.0:
        raise ValueError(f"x must be positive, got {x}")
    if abs(s - 1.0) < POLE_GUARD:
        raise PoleError(f"s = {s} is within {POLE_GUARD} of the pole at 1")


def _auto_cutoff(s: float, x: float) -> int:
    target = max(_MIN_ABSCISSA, abs(s) + 10.0)
    return max(0, math.ceil(target - x))


def hurwitz_zeta(
    s: float,
    x: float,
    *,
    cutoff: int | None = None,
    tail_terms: int | None = None,
) -> EvalResult:
    """Continued zeta(s, x) = sum_{m>=0} (m+x)^-s for real s != 1, x > 0."""
    _check_domain(s, x)
    big_j = DEFAULT_TAIL_TERMS if tail_terms is None else tail_terms
    big_m = _auto_cutoff(s, x) if cutoff is None else cutoff
    a = big_m + x

    value = math.fsum((m + x) ** -s for m in range(big_m))
    value += a ** (1.0 - s) / (s - 1.0) + 0.5 * a**-s

    apow = a ** (-s - 1.0)  # a^(-s-2j+1) at j = 1
    poch = s                # (s)_1
    for j in range(1, big_j + 1):
        value += _b2j_over_factorial(j) * poch * apow
        poch *= (s + 2 * j - 1) * (s + 2 * j)  # extend to (s)_{2j+1}
        apow /= a * a
    tail = abs(_b2j_over_factorial(big_j + 1) * poch * apow)
    return EvalResult(value, tail, {"cutoff": big_m, "tail_terms": big_j})


def hurwitz_zeta_ds(
    s: float,
    x: float,
    *,
    cutoff: int | None = None,
    tail_terms: int | None = None,
) -> EvalResult:
    """d/ds of hurwitz_zeta, by closed-form differentiation of each term."""
    _check_domain(s, x)
    big_j = DEFAULT_TAIL_TERMS if tail_terms is None else tail_terms
    big_m = _auto_cutoff(s, x) if cutoff is None else cutoff
    a = big_m + x
    log_a = math.log(a)

    value = math.fsum(-math.log(m + x) * (m + x) ** -s for m in range(big_m))
    value -= a ** (1.0 - s) * (log_a / (s - 1.0) + 1.0 / (s - 1.0) ** 2)
    value -= 0.5 * log_a * a**-s

    apow = a ** (-s - 1.0)
    poch, dpoch = s, 1.0  # (s)_1 and its s-derivative
    for j in range(1, big_j + 1):
        value += _b2j_over_factorial(j) * (dpoch - log_a * poch) * apow
        for i in (2 * j - 1, 2 * j):
            dpoch = dpoch * (s + i) + poch
            poch *= s + i
        apow /= a * a
    tail = abs(_b2j_over_factorial(big_j + 1)) * (abs(dpoch) + log_a * abs(poch)) * apow
    return EvalResult(value, tail, {"cutoff": big_m, "tail_terms": big_j})


def riemann_zeta(s: float, **options) -> EvalResult:
    """zeta(s), i.e. the x = 1 case of the Hurwitz continuation."""
    return hurwitz_zeta(s, 1.0, **options)


def riemann_zeta_ds(s: float, **options) -> EvalResult:
    """zeta'(s) via the x = 1 case of hurwitz_zeta_ds."""
    return hurwitz_zeta_ds(s, 1.0, **options)


def log_gamma(x: float, *, terms: int = DEFAULT_TAIL_TERMS) -> float:
    """ln Gamma(x) for x > 0 to ~1e-12 absolute.

    Shifts the argument up until it is >= 10, then applies the Stirling
    series with Bernoulli coefficients B_2j / (2j (2j-1)).
    """
    if not x > 0.0:
        raise ValueError(f"x must be positive, got {x}")
    shift = 0.0
    y = x
    while y < _STIRLING_SHIFT:
        shift += math.log(y)
        y += 1.0
    value = (y - 0.5) * math.log(y) - y + _HALF_LN_TWO_PI
    ypow = 1.0 / y
    for j in range(1, terms + 1):
        value += _stirling_coefficient(j) * ypow
        ypow /= y * y
    return value - shift
