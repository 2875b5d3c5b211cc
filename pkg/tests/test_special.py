import math

import numpy as np
import pytest

from zetaprod import special as sp

HALF_LN_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# Frozen oracle outputs (direct summation, 10^6 terms + integral-plus-midpoint
# tail; see zeta_direct_oracle below, which recomputes them in-test).
ZETA2 = 1.6449340668482264
ZETA3 = 1.2020569031595943


def zeta_direct_oracle(s, x=1.0, terms=10**6):
    """Plain summation of (m+x)^-s plus integral and midpoint tail terms."""
    m = np.arange(terms, dtype=np.float64)
    a = terms + x
    return float(np.sum((m + x) ** -s)) + a ** (1 - s) / (s - 1) + 0.5 * a**-s


# ------------------------------------------------------------ special values


def test_hurwitz_zero_at_quarter():
    assert abs(sp.hurwitz_zeta(0.0, 0.25).value - 0.25) < 1e-12


def test_hurwitz_zero_at_one():
    assert abs(sp.hurwitz_zeta(0.0, 1.0).value - (-0.5)) < 1e-12


@pytest.mark.parametrize("x", [0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75, 1.0])
def test_hurwitz_zero_is_linear(x):
    assert abs(sp.hurwitz_zeta(0.0, x).value - (0.5 - x)) < 1e-12


def test_riemann_at_zero():
    assert abs(sp.riemann_zeta(0.0).value + 0.5) < 1e-12


def test_riemann_at_two_and_three():
    assert abs(sp.riemann_zeta(2.0).value - ZETA2) < 1e-12
    assert abs(sp.riemann_zeta(3.0).value - ZETA3) < 1e-12
    assert abs(sp.riemann_zeta(2.0).value - zeta_direct_oracle(2.0)) < 1e-12
    assert abs(sp.riemann_zeta(3.0).value - zeta_direct_oracle(3.0)) < 1e-12


def test_hurwitz_two_at_one_matches_oracle():
    assert abs(sp.hurwitz_zeta(2.0, 1.0).value - ZETA2) < 1e-12


def test_derivative_at_zero():
    assert abs(sp.riemann_zeta_ds(0.0).value + HALF_LN_TWO_PI) < 1e-12


def test_derivative_at_zero_half():
    # Gamma(1/2) = sqrt(pi), so the Lerch value is -ln(2)/2
    expected = -0.5 * math.log(2.0)
    assert abs(sp.hurwitz_zeta_ds(0.0, 0.5).value - expected) < 1e-10


def test_derivative_at_zero_quarter_via_log_gamma():
    expected = sp.log_gamma(0.25) - HALF_LN_TWO_PI
    assert abs(sp.hurwitz_zeta_ds(0.0, 0.25).value - expected) < 1e-10


# ------------------------------------------------- continuation consistency


@pytest.mark.parametrize("s", [1.5, 2.0, 3.0])
@pytest.mark.parametrize("x", [0.25, 1.0 / 3.0, 0.5, 1.0])
def test_continuation_matches_direct_sum(s, x):
    # 1e-12 covers the binary64 floor; the truncation tail is far smaller
    result = sp.hurwitz_zeta(s, x)
    assert abs(result.value - zeta_direct_oracle(s, x)) <= result.tail_bound + 1e-12


_DERIVATIVE_S = [-2.0, -1.5, -1.0, -0.5, -0.25, 0.0, 0.25, 0.5,
                 1.5, 2.0, 2.5, 3.0]
_DERIVATIVE_X = [0.25, 1.0 / 3.0, 0.75, 1.0]


@pytest.mark.parametrize("s", _DERIVATIVE_S)
@pytest.mark.parametrize("x", _DERIVATIVE_X)
def test_derivative_matches_central_difference(s, x):
    h = 1e-6
    analytic = sp.hurwitz_zeta_ds(s, x).value
    numeric = (sp.hurwitz_zeta(s + h, x).value - sp.hurwitz_zeta(s - h, x).value) / (2 * h)
    # the difference quotient cannot resolve below the rounding noise of its
    # largest summand (the a^(1-s) boundary term) divided by 2h
    a = sp.hurwitz_zeta(s, x).params["cutoff"] + x
    cd_floor = 4.0 * 2.220446049250313e-16 * a ** (1.0 + max(0.0, -s)) / (2 * h)
    assert abs(analytic - numeric) < 1e-7 * max(1.0, abs(analytic)) + cd_floor


@pytest.mark.parametrize(
    "num,den", [(1, 4), (1, 3), (1, 2), (2, 3), (3, 4), (1, 1)]
)
def test_lerch_formula(num, den):
    x = num / den
    lhs = sp.hurwitz_zeta_ds(0.0, x).value
    rhs = sp.log_gamma(x) - HALF_LN_TWO_PI
    assert abs(lhs - rhs) < 1e-10


# ---------------------------------------------------------------- log gamma


def test_log_gamma_at_one():
    assert abs(sp.log_gamma(1.0)) < 1e-12


def test_log_gamma_at_half():
    assert abs(sp.log_gamma(0.5) - 0.5 * math.log(math.pi)) < 1e-12


def test_log_gamma_at_quarter():
    # 3.6256099082 is Gamma(1/4) to the displayed digits
    assert abs(sp.log_gamma(0.25) - math.log(3.6256099082)) < 1e-9


@pytest.mark.parametrize("x", [0.25, 1.0 / 3.0, 0.5])
def test_log_gamma_reflection(x):
    lhs = sp.log_gamma(x) + sp.log_gamma(1.0 - x)
    rhs = math.log(math.pi / math.sin(math.pi * x))
    assert abs(lhs - rhs) < 1e-11


def test_log_gamma_factorial_ladder():
    for n in range(2, 15):
        assert abs(sp.log_gamma(float(n)) - math.log(math.factorial(n - 1))) < 1e-11


# -------------------------------------------------------------------- guards


def test_pole_guard():
    with pytest.raises(sp.PoleError):
        sp.hurwitz_zeta(1.0, 0.5)
    with pytest.raises(sp.PoleError):
        sp.riemann_zeta(1.0 + 5e-9)
    with pytest.raises(sp.PoleError):
        sp.hurwitz_zeta_ds(1.0 - 5e-9, 0.5)


def test_domain_guards():
    with pytest.raises(ValueError):
        sp.hurwitz_zeta(2.0, 0.0)
    with pytest.raises(ValueError):
        sp.hurwitz_zeta_ds(2.0, -0.5)
    with pytest.raises(ValueError):
        sp.log_gamma(0.0)
    with pytest.raises(ValueError):
        sp.log_gamma(-1.5)


def test_result_reports_parameters():
    result = sp.hurwitz_zeta(2.0, 0.5)
    assert result.tail_bound >= 0.0
    assert result.params["tail_terms"] == sp.DEFAULT_TAIL_TERMS
    assert result.params["cutoff"] >= 14
    forced = sp.hurwitz_zeta(2.0, 0.5, cutoff=30, tail_terms=8)
    assert forced.params == {"cutoff": 30, "tail_terms": 8}
    assert abs(forced.value - result.value) < 1e-12
