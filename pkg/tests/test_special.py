"""
QThermo-Py 修正 Bessel 函数测试

参照值取自 scipy.special.iv / ive。
"""

import math

import pytest
from scipy.special import iv

from src.core.exceptions import BesselOverflowError, DomainExceededError
from src.special import (
    MAX_BESSEL_ORDER,
    bessel_i,
    bessel_i_poisson,
    bessel_i_reduced,
    bessel_i_series,
    gamma_half_integer,
    sqrt_pi_gamma_half,
)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
@pytest.mark.parametrize("beta", [-5.0, -0.3, 0.3, 2.0, 10.0, 25.0])
def test_series_matches_scipy(n, beta):
    assert bessel_i_series(n, beta) == pytest.approx(float(iv(n, beta)), rel=1e-13)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
@pytest.mark.parametrize("beta", [0.5, 5.0, 40.0, -40.0])
def test_poisson_matches_scipy(n, beta):
    assert bessel_i_poisson(n, beta) == pytest.approx(float(iv(n, beta)), rel=1e-9)


ACCEPTANCE_BETAS = [-20.0, -10.0, -5.0, -1.0, -0.1, 0.1, 1.0, 5.0, 10.0, 20.0]


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("beta", ACCEPTANCE_BETAS)
def test_poisson_and_series_agree(n, beta):
    series = bessel_i_series(n, beta)
    assert abs(bessel_i_poisson(n, beta) - series) <= 1e-10 * max(1.0, abs(series))


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
@pytest.mark.parametrize("beta", [0.1, 2.5, 17.0])
def test_parity_on_series_branch(n, beta):
    assert bessel_i_series(n, -beta) == pytest.approx((-1) ** n * bessel_i_series(n, beta), rel=1e-14)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
@pytest.mark.parametrize("beta", [3.0, 45.0])
def test_parity_on_poisson_branch(n, beta):
    assert bessel_i_poisson(n, -beta) == pytest.approx((-1) ** n * bessel_i_poisson(n, beta), rel=1e-9)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("beta", [-7.0, 0.5, 3.0, 12.0, 25.0])
def test_three_term_recurrence(n, beta):
    lhs = bessel_i_series(n - 1, beta) - bessel_i_series(n + 1, beta)
    rhs = 2.0 * n / beta * bessel_i_series(n, beta)
    assert lhs == pytest.approx(rhs, rel=1e-12)


@pytest.mark.parametrize("n", [1, 2])
def test_three_term_recurrence_on_poisson_branch(n):
    beta = 45.0
    lhs = bessel_i(n - 1, beta) - bessel_i(n + 1, beta)
    assert lhs == pytest.approx(2.0 * n / beta * bessel_i(n, beta), rel=1e-7)


class TestReduced:
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_value_at_zero(self, n):
        assert bessel_i_reduced(n, 0.0) == pytest.approx(1.0 / math.factorial(n), rel=1e-15)

    @pytest.mark.parametrize("beta", [0.7, 8.0, 29.5])
    def test_even_in_beta_on_series_branch(self, beta):
        assert bessel_i_reduced(2, -beta) == bessel_i_reduced(2, beta)

    @pytest.mark.parametrize("beta", [45.0, 120.0])
    def test_even_in_beta_on_poisson_branch(self, beta):
        assert bessel_i_reduced(1, -beta) == pytest.approx(bessel_i_reduced(1, beta), rel=1e-9)

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("beta", [3.0, 50.0, 200.0])
    def test_matches_definition(self, n, beta):
        expected = float(iv(n, beta)) / (0.5 * beta) ** n
        assert bessel_i_reduced(n, beta) == pytest.approx(expected, rel=1e-9)

    def test_branches_are_continuous_at_switch(self):
        below = bessel_i_reduced(2, 30.0)
        above = bessel_i_poisson(2, 30.0) / 15.0**2
        assert above == pytest.approx(below, rel=1e-10)

    def test_strictly_positive(self):
        assert all(bessel_i_reduced(n, b) > 0.0 for n in (1, 2, 3) for b in (-600.0, -1.0, 0.0, 1.0, 600.0))


class TestDomain:
    def test_series_limited_to_moderate_beta(self):
        with pytest.raises(DomainExceededError):
            bessel_i_series(1, 31.0)

    def test_order_bounds(self):
        with pytest.raises(DomainExceededError):
            bessel_i_reduced(MAX_BESSEL_ORDER + 1, 1.0)
        with pytest.raises(DomainExceededError):
            bessel_i_reduced(-1, 1.0)

    def test_non_integer_order_rejected(self):
        with pytest.raises(DomainExceededError):
            bessel_i(1.5, 1.0)

    @pytest.mark.parametrize("beta", [701.0, -701.0, float("inf"), float("nan")])
    def test_overflow(self, beta):
        with pytest.raises(BesselOverflowError) as info:
            bessel_i_reduced(1, beta)
        assert info.value.exit_code == 3

    def test_dispatch(self):
        assert bessel_i(2, 4.0) == bessel_i_series(2, 4.0)
        assert bessel_i(2, 40.0) == bessel_i_poisson(2, 40.0)


@pytest.mark.parametrize("n", range(0, 8))
def test_gamma_half_integer(n):
    assert gamma_half_integer(n) == pytest.approx(math.gamma(n + 0.5), rel=1e-14)
    assert sqrt_pi_gamma_half(n) == pytest.approx(math.sqrt(math.pi) * math.gamma(n + 0.5), rel=1e-14)
