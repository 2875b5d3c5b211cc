import math

import numpy as np
import pytest

from zetaprod import arith, products
from zetaprod.special import log_gamma, riemann_zeta
from zetaprod.zetas import dedekind_zeta

SQRT_TWO_PI = math.sqrt(2.0 * math.pi)
FOUR_PI_SQUARED = 4.0 * math.pi**2


# ------------------------------------------------------- integer products


def test_natural_integer_product_is_sqrt_two_pi():
    result = products.regularized_integer_product("natural")
    assert abs(result.numeric_value - SQRT_TWO_PI) < 1e-10
    assert result.discrepancy < 1e-10
    assert result.modulus == result.numeric_value


def test_gauss_integer_product():
    result = products.regularized_integer_product("gauss")
    assert abs(result.modulus - 3.708149) < 5e-7
    closed_modulus = math.exp(
        2.0 * log_gamma(0.25) - math.log(2.0) - 0.5 * math.log(math.pi)
    )
    assert abs(result.modulus - closed_modulus) < 1e-11
    assert result.discrepancy < 1e-9
    assert abs(result.modulus**2 - result.numeric_value) < 1e-12


def test_eisenstein_integer_product():
    result = products.regularized_integer_product("eisenstein")
    assert abs(result.modulus - 4.027065) < 5e-7
    closed_modulus = math.exp(
        0.25 * math.log(3.0)
        + 3.0 * log_gamma(1.0 / 3.0)
        - math.log(2.0 * math.pi)
    )
    assert abs(result.modulus - closed_modulus) < 1e-11
    assert result.discrepancy < 1e-9


# --------------------------------------------------------- prime products


def test_natural_prime_product_is_four_pi_squared():
    result = products.regularized_prime_product("natural")
    assert abs(result.numeric_value - FOUR_PI_SQUARED) < 1e-9
    assert result.discrepancy < 1e-9


@pytest.mark.parametrize("ring,k", [("gauss", 8), ("eisenstein", 12)])
def test_ring_prime_product_power_relation(ring, k):
    primes = products.regularized_prime_product(ring)
    integers = products.regularized_integer_product(ring)
    expected = integers.numeric_value**k
    assert abs(primes.numeric_value - expected) < 1e-9 * expected
    # the squared-modulus values are large; closed form agrees relatively
    assert primes.discrepancy < 1e-9 * primes.closed_form_value


@pytest.mark.parametrize(
    "ring,ratio", [("gauss", 8.0), ("eisenstein", 12.0)]
)
def test_prime_to_integer_log_ratio(ring, ratio):
    # Z'(0) / zeta_ring'(0), both from the numeric path
    primes = products.regularized_prime_product(ring)
    integers = products.regularized_integer_product(ring)
    assert abs(primes.log_value / integers.log_value - ratio) < 1e-10


@pytest.mark.parametrize("ring", ["gauss", "eisenstein"])
def test_ring_zeta_counts_origin_negatively(ring):
    assert abs(dedekind_zeta(ring, 0.0).value + 1.0) < 1e-11


# --------------------------------------------------------- power identities


@pytest.mark.parametrize("ring,k", [("natural", 4), ("gauss", 8), ("eisenstein", 12)])
def test_power_identity(ring, k):
    check = products.power_identity_check(ring)
    assert check.exponent == k
    assert check.residual < 1e-10
    assert check.passed


def test_ring_argument_guard():
    with pytest.raises(ValueError):
        products.regularized_integer_product("hurwitz")
    with pytest.raises(ValueError):
        products.regularized_prime_product("")


# ------------------------------------------------------------- Mobius sum


def test_regularized_mobius_sum():
    value = products.regularized_mobius_sum()
    assert abs(value + 2.0) < 1e-12
    assert abs(riemann_zeta(0.0).value * value - 1.0) < 1e-12


def test_mobius_series_in_convergent_region():
    # sum mu(n)/n^2 over n <= 10^6 approaches 1/zeta(2)
    t = arith.default_tables()
    n = np.arange(1, t.limit + 1, dtype=np.float64)
    series = float(np.sum(t.mobius[1:].astype(np.float64) / (n * n)))
    assert abs(series - 1.0 / riemann_zeta(2.0).value) < 1e-6


# ------------------------------------------------------ refinement ladder


_LADDER = (15, 25, 50)


@pytest.mark.parametrize("ring", products.RINGS)
@pytest.mark.parametrize("target", ["integers", "primes"])
def test_refinement_ladder_is_monotone(ring, target):
    # With a short Bernoulli tail the truncation error dominates and must
    # shrink (or stay put) as the Euler-Maclaurin cutoff grows.
    build = (
        products.regularized_integer_product
        if target == "integers"
        else products.regularized_prime_product
    )
    discs = [build(ring, cutoff=m, tail_terms=2).discrepancy for m in _LADDER]
    assert discs[0] >= discs[1] >= discs[2]


@pytest.mark.parametrize("ring", products.RINGS)
def test_ladder_quality_at_default_tail(ring):
    # at the default tail order every rung already sits at closed-form level
    for m in _LADDER:
        integers = products.regularized_integer_product(ring, cutoff=m)
        assert integers.discrepancy < 1e-9
        primes = products.regularized_prime_product(ring, cutoff=m)
        assert primes.discrepancy < 1e-9 * max(1.0, primes.closed_form_value)
