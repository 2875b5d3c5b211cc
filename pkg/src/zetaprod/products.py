"""Regularized products of integers and primes over the three rings.

A divergent product prod a_n is assigned the value exp(-Z'(0)) where
Z(s) = sum a_n^-s is continued to s = 0.  For the two lattice rings the
phase of the product is meaningless (units rotate it), so the squared
modulus is regularized and the plain modulus is exposed as a derived
square root.

The prime products are evaluated through the unsimplified ratio formulas

    Z'(0)      = zeta'(0) / zeta(0)^2                      (natural)
    Z_ring'(0) = u * zeta_ring'(0) / (zeta(0) zeta_ring(0))

with every factor taken from the numeric continuation path, so a regression
in any of the intermediate constants (zeta(0) = -1/2, ring zetas = -1 at 0)
is caught by the closed-form comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .special import log_gamma, riemann_zeta, riemann_zeta_ds
from .zetas import dedekind_zeta, dedekind_zeta_ds

RINGS = ("natural", "gauss", "eisenstein")

_PRIME_EXPONENT = {"natural": 4, "gauss": 8, "eisenstein": 12}
_UNIT_COUNT = {"gauss": 4, "eisenstein": 6}
_LN_TWO_PI = math.log(2.0 * math.pi)


def _check_ring(ring: str) -> str:
    if ring not in RINGS:
        raise ValueError(f"ring must be one of {RINGS}, got {ring!r}")
    return ring


@dataclass(frozen=True)
class RegularizedProduct:
    """A regularized product value and its closed-form counterpart.

    For the lattice rings, log_value and numeric_value refer to the squared
    modulus of the product; `modulus` undoes the squaring.  discrepancy is
    the absolute difference between the numeric-path value and the
    gamma-function closed form.
    """

    ring: str
    target: str  # 'integers' | 'primes'
    log_value: float
    numeric_value: float
    closed_form_value: float
    discrepancy: float

    @property
    def modulus(self) -> float:
        """Unsquared modulus (the value itself for the natural ring)."""
        if self.ring == "natural":
            return self.numeric_value
        return math.sqrt(self.numeric_value)


def _closed_integer_log(ring: str) -> float:
    """ln of the closed-form integer product, from log_gamma.

    natural:    ln sqrt(2 pi)
    gauss:      ln( pi Gamma(1/4)^2 / (2 Gamma(3/4)^2) )
    eisenstein: ln( 2 pi Gamma(1/3)^3 / (3 Gamma(2/3)^3) )
    """
    if ring == "natural":
        return 0.5 * _LN_TWO_PI
    if ring == "gauss":
        return (
            math.log(math.pi)
            + 2.0 * log_gamma(0.25)
            - math.log(2.0)
            - 2.0 * log_gamma(0.75)
        )
    return (
        _LN_TWO_PI
        + 3.0 * log_gamma(1.0 / 3.0)
        - math.log(3.0)
        - 3.0 * log_gamma(2.0 / 3.0)
    )


def regularized_integer_product(ring: str = "natural", **options) -> RegularizedProduct:
    """exp(-zeta'(0)) for the ring's zeta: all nonzero integers multiplied."""
    _check_ring(ring)
    if ring == "natural":
        log_value = -riemann_zeta_ds(0.0, **options).value
    else:
        log_value = -dedekind_zeta_ds(ring, 0.0, **options).value
    numeric = math.exp(log_value)
    closed = math.exp(_closed_integer_log(ring))
    return RegularizedProduct(
        ring, "integers", log_value, numeric, closed, abs(numeric - closed)
    )


def regularized_prime_product(ring: str = "natural", **options) -> RegularizedProduct:
    """exp(-Z'(0)) over the ring's primes, via the explicit ratio formula."""
    _check_ring(ring)
    zeta0 = riemann_zeta(0.0, **options).value
    if ring == "natural":
        zprime = riemann_zeta_ds(0.0, **options).value / zeta0**2
    else:
        u = _UNIT_COUNT[ring]
        ring_zeta0 = dedekind_zeta(ring, 0.0, **options).value
        ring_zprime0 = dedekind_zeta_ds(ring, 0.0, **options).value
        zprime = u * ring_zprime0 / (zeta0 * ring_zeta0)
    log_value = -zprime
    numeric = math.exp(log_value)
    closed = math.exp(_PRIME_EXPONENT[ring] * _closed_integer_log(ring))
    return RegularizedProduct(
        ring, "primes", log_value, numeric, closed, abs(numeric - closed)
    )


def regularized_mobius_sum() -> float:
    """The regularized value of sum_n mu(n): 1 / zeta(0) = -2."""
    return 1.0 / riemann_zeta(0.0).value


@dataclass(frozen=True)
class PowerIdentityCheck:
    """Result of verifying log(prime product) = k * log(integer product)."""

    ring: str
    exponent: int
    log_integer_modulus: float
    log_prime_modulus: float
    residual: float
    passed: bool


POWER_IDENTITY_TOLERANCE = 1e-10


def power_identity_check(ring: str = "natural", **options) -> PowerIdentityCheck:
    """Compare unsquared-modulus logs of the two products of a ring.

    The prime product should be the k-th power of the integer product with
    k = 4, 8, 12 for the natural, square and triangular lattices.
    """
    _check_ring(ring)
    integers = regularized_integer_product(ring, **options)
    primes = regularized_prime_product(ring, **options)
    half = 1.0 if ring == "natural" else 0.5
    log_p = half * integers.log_value
    log_pi = half * primes.log_value
    k = _PRIME_EXPONENT[ring]
    residual = abs(log_pi - k * log_p)
    return PowerIdentityCheck(
        ring, k, log_p, log_pi, residual, residual < POWER_IDENTITY_TOLERANCE
    )
