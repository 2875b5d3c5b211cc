"""Exact integer-arithmetic foundations.

Prime/Mobius sieve tables, the quadratic residue characters chi_3 and chi_4,
Bernoulli numbers as exact rationals, and truncated formal power series over
the rationals.  Everything in this module is exact; floating point enters
only when a caller asks for binary64 views of the rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

DEFAULT_SIEVE_LIMIT = 1_000_000
MAX_BERNOULLI_ORDER = 64


@dataclass(frozen=True)
class SieveTables:
    """Primality and Mobius tables for 0..limit (arrays are read-only)."""

    limit: int
    is_prime: np.ndarray  # bool, indexed 0..limit
    mobius: np.ndarray    # int8, mobius[0] = 0 by convention
    primes: np.ndarray    # int64, ascending

    def primes_in_class(self, modulus: int, residue: int) -> np.ndarray:
        return self.primes[self.primes % modulus == residue]


def build_sieve(limit: int) -> SieveTables:
    """Sieve of Eratosthenes plus a Mobius pass over the same prime list.

    mobius[n] picks up a factor -1 per prime divisor and is zeroed on every
    multiple of a prime square, so mobius[n] = 0 iff n is not squarefree.
    """
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    primes = np.nonzero(is_prime)[0].astype(np.int64)

    mobius = np.ones(limit + 1, dtype=np.int8)
    mobius[0] = 0
    for p in primes:
        mobius[p::p] *= -1
    for p in primes[primes <= math.isqrt(limit)]:
        mobius[p * p :: p * p] = 0

    for arr in (is_prime, mobius, primes):
        arr.setflags(write=False)
    return SieveTables(limit, is_prime, mobius, primes)


@lru_cache(maxsize=4)
def default_tables(limit: int = DEFAULT_SIEVE_LIMIT) -> SieveTables:
    """Shared sieve instance; the default limit covers every built-in cutoff."""
    return build_sieve(limit)


@dataclass(frozen=True)
class DirichletCharacter:
    """Completely multiplicative periodic character with values in {-1, 0, +1}."""

    modulus: int
    values: tuple[int, ...]

    def __call__(self, n: int) -> int:
        return self.values[n % self.modulus]


CHI4 = DirichletCharacter(4, (0, 1, 0, -1))
CHI3 = DirichletCharacter(3, (0, 1, -1))

_CHARACTERS = {4: CHI4, 3: CHI3}


def character(modulus: int, n: int) -> int:
    """chi_3(n) or chi_4(n); zero exactly on the non-coprime residues."""
    chi = _CHARACTERS.get(modulus)
    if chi is None:
        raise ValueError(f"modulus must be 3 or 4, got {modulus}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return chi(n)


@lru_cache(maxsize=None)
def _bernoulli_list(n: int) -> tuple[Fraction, ...]:
    # B_0..B_n from sum_{k<=m} C(m+1, k) B_k = 0, exact throughout.
    vals = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(math.comb(m + 1, k) * vals[k] for k in range(m))
        vals.append(Fraction(-acc, m + 1))
    return tuple(vals)


def bernoulli(order: int) -> Fraction:
    """Exact Bernoulli number of even order (B_2 = 1/6, B_4 = -1/30, ...)."""
    if order % 2 != 0 or not 2 <= order <= MAX_BERNOULLI_ORDER:
        raise ValueError(
            f"order must be even and in [2, {MAX_BERNOULLI_ORDER}], got {order}"
        )
    return _bernoulli_list(order)[order]


@dataclass(frozen=True)
class BernoulliTable:
    """Even-index Bernoulli numbers, exact and as their binary64 roundings."""

    max_order: int
    rationals: tuple[Fraction, ...]  # B_2, B_4, ..., B_max_order
    reals: tuple[float, ...]

    @classmethod
    def build(cls, max_order: int) -> "BernoulliTable":
        rats = tuple(bernoulli(k) for k in range(2, max_order + 1, 2))
        return cls(max_order, rats, tuple(float(b) for b in rats))

    def rational(self, order: int) -> Fraction:
        return self.rationals[order // 2 - 1]

    def real(self, order: int) -> float:
        return self.reals[order // 2 - 1]


class RationalSeries:
    """Truncated power series in one variable with exact rational coefficients.

    Arithmetic is exact through the truncation order.  exp/log use the usual
    convolution recurrences; rational powers of a unit series go through
    exp(r * log(f)), so no binomial special-casing is needed.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        self.coefficients = tuple(Fraction(c) for c in coefficients)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def zero(cls, order: int) -> "RationalSeries":
        return cls([Fraction(0)] * (order + 1))

    @classmethod
    def monomial(cls, coefficient, degree: int, order: int) -> "RationalSeries":
        if degree > order:
            return cls.zero(order)
        coeffs = [Fraction(0)] * (order + 1)
        coeffs[degree] = Fraction(coefficient)
        return cls(coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalSeries)
            and self.coefficients == other.coefficients
        )

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        n = min(self.order, other.order)
        return RationalSeries(
            [self.coefficients[k] + other.coefficients[k] for k in range(n + 1)]
        )

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        n = min(self.order, other.order)
        return RationalSeries(
            [self.coefficients[k] - other.coefficients[k] for k in range(n + 1)]
        )

    def __mul__(self, other) -> "RationalSeries":
        if isinstance(other, RationalSeries):
            n = min(self.order, other.order)
            a, b = self.coefficients, other.coefficients
            return RationalSeries(
                [
                    sum(a[j] * b[k - j] for j in range(k + 1))
                    for k in range(n + 1)
                ]
            )
        scalar = Fraction(other)
        return RationalSeries([scalar * c for c in self.coefficients])

    __rmul__ = __mul__

    def exp(self) -> "RationalSeries":
        """Series exponential; requires a zero constant term."""
        if self.coefficients[0] != 0:
            raise ValueError("exp needs a series with zero constant term")
        g = self.coefficients
        f = [Fraction(1)]
        for k in range(1, self.order + 1):
            # k f_k = sum_{j=1..k} j g_j f_{k-j}
            f.append(sum(j * g[j] * f[k - j] for j in range(1, k + 1)) / k)
        return RationalSeries(f)

    def log(self) -> "RationalSeries":
        """Series logarithm; requires a unit constant term."""
        if self.coefficients[0] != 1:
            raise ValueError("log needs a series with constant term 1")
        f = self.coefficients
        g = [Fraction(0)]
        for k in range(1, self.order + 1):
            conv = sum(j * g[j] * f[k - j] for j in range(1, k))
            g.append((k * f[k] - conv) / k)
        return RationalSeries(g)

    def pow(self, exponent) -> "RationalSeries":
        """f**r for rational r, via exp(r log f); requires constant term 1."""
        return (Fraction(exponent) * self.log()).exp()


def artin_hasse_series(order: int, tables: SieveTables) -> RationalSeries:
    """Product of (1 - x^n)^(-mu(n)/n) over n <= order, exact through x^order.

    The coefficient of x^k must come out to 1/k! for every k <= order; the
    divisor sums of mu collapse the log of the product to the single term x.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    if order > tables.limit:
        raise ValueError(
            f"order {order} exceeds sieve limit {tables.limit}"
        )
    one = RationalSeries.monomial(1, 0, order)
    log_sum = RationalSeries.zero(order)
    for n in range(1, order + 1):
        mu = int(tables.mobius[n])
        if mu == 0:
            continue
        factor = one - RationalSeries.monomial(1, n, order)
        log_sum = log_sum + Fraction(-mu, n) * factor.log()
    return log_sum.exp()
