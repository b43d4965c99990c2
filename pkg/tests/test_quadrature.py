"""
QThermo-Py 自适应积分测试
"""

import math

import numpy as np
import pytest
from scipy.special import iv

from src.core.exceptions import DomainExceededError, ToleranceNotReachedError
from src.quadrature import (
    DEFAULT_ABS_TOL,
    QuadratureSpec,
    gauss_legendre,
    integrate,
    integrate_gegenbauer,
    legendre_rule,
    resolve_spec,
)


class TestLegendreRule:
    def test_weights_sum_to_interval_length(self):
        nodes, weights = legendre_rule(20)
        assert nodes.shape == weights.shape == (20,)
        assert math.isclose(float(weights.sum()), 2.0, rel_tol=1e-14)

    def test_rule_is_read_only(self):
        nodes, _ = legendre_rule(20)
        with pytest.raises(ValueError):
            nodes[0] = 0.0

    def test_exact_for_polynomials_up_to_degree_2n_minus_1(self):
        # ∫_0^2 x^7 dx = 32
        assert gauss_legendre(lambda x: x**7, 0.0, 2.0, order=4) == pytest.approx(32.0, rel=1e-14)


class TestIntegrate:
    def test_sine_over_half_period(self):
        value, err = integrate(math.sin, 0.0, math.pi)
        assert value == pytest.approx(2.0, abs=1e-13)
        assert err <= 1e-10

    def test_vectorized_matches_scalar(self):
        scalar, _ = integrate(lambda x: math.exp(-3.0 * x) * math.cos(x), -1.0, 2.0)
        vector, _ = integrate(lambda x: np.exp(-3.0 * x) * np.cos(x), -1.0, 2.0, vectorized=True)
        assert vector == pytest.approx(scalar, rel=1e-13)

    def test_sqrt_endpoint_behaviour_is_resolved(self):
        value, _ = integrate(np.sqrt, 0.0, 1.0, vectorized=True)
        assert value == pytest.approx(2.0 / 3.0, abs=1e-10)

    def test_weight_with_infinite_endpoint_derivative(self):
        value, _ = integrate(lambda z: (1.0 - z * z) ** 1.5, -1.0, 1.0, vectorized=True)
        assert value == pytest.approx(3.0 * math.pi / 8.0, abs=1e-10)

    def test_bessel_integral(self):
        value, _ = integrate(lambda z: np.exp(-z) * np.sqrt(1.0 - z * z), -1.0, 1.0, vectorized=True)
        assert value == pytest.approx(math.pi * float(iv(1, 1.0)), abs=1e-10)

    def test_even_integrand_is_twice_the_half_interval(self):
        def f(z):
            return np.cos(3.0 * z) * np.exp(-z * z)

        full, _ = integrate(f, -1.0, 1.0, vectorized=True)
        half, _ = integrate(f, 0.0, 1.0, vectorized=True)
        assert full == pytest.approx(2.0 * half, rel=1e-12)

    def test_tighter_tolerance_never_increases_error(self):
        errors = []
        for k in range(12):
            spec = QuadratureSpec(abs_tol=1e-6 / 2**k, rel_tol=1e-15)
            value, _ = integrate(np.sqrt, 0.0, 1.0, spec, vectorized=True)
            errors.append(abs(value - 2.0 / 3.0))
        assert all(later <= earlier + 1e-15 for earlier, later in zip(errors, errors[1:]))
        assert errors[-1] <= 1e-6 / 2**11

    def test_reversed_bounds_rejected(self):
        with pytest.raises(DomainExceededError):
            integrate(math.sin, 1.0, 0.0)

    def test_non_finite_integrand_rejected(self):
        with pytest.raises(DomainExceededError):
            integrate(lambda x: np.full_like(x, np.nan), 0.0, 1.0, vectorized=True)

    def test_budget_exhaustion_raises(self):
        spec = QuadratureSpec(abs_tol=1e-15, rel_tol=1e-15, max_subdivisions=1)
        with pytest.raises(ToleranceNotReachedError) as info:
            integrate(np.sqrt, 0.0, 1.0, spec, vectorized=True)
        assert info.value.subdivisions == 1
        assert info.value.exit_code == 3


class TestGegenbauer:
    @pytest.mark.parametrize(
        "n, expected",
        [
            (0, math.pi),
            (1, math.pi / 2.0),
            (2, 3.0 * math.pi / 8.0),
            (3, 5.0 * math.pi / 16.0),
        ],
    )
    def test_weight_mass(self, n, expected):
        value = integrate_gegenbauer(lambda z: np.ones_like(z), n, vectorized=True)
        assert value == pytest.approx(expected, rel=1e-13)

    def test_second_moment_of_semicircle_weight(self):
        assert integrate_gegenbauer(lambda z: z * z, 1) == pytest.approx(math.pi / 8.0, rel=1e-13)

    def test_odd_integrand_vanishes(self):
        assert abs(integrate_gegenbauer(lambda z: z**3, 2)) < 1e-14

    def test_negative_index_rejected(self):
        with pytest.raises(DomainExceededError):
            integrate_gegenbauer(lambda z: 1.0, -1)


class TestSpec:
    def test_defaults_come_from_settings(self):
        assert resolve_spec(None).abs_tol == DEFAULT_ABS_TOL

    def test_environment_override(self, monkeypatch):
        from src.core.settings import reset_settings

        monkeypatch.setenv("QTHERMO_TOLERANCE", "1e-9")
        reset_settings()
        assert resolve_spec(None).abs_tol == 1e-9

    def test_explicit_spec_wins(self):
        spec = QuadratureSpec(abs_tol=1e-6)
        assert resolve_spec(spec) is spec

    def test_tolerance_for_mixes_absolute_and_relative(self):
        spec = QuadratureSpec(abs_tol=1e-12, rel_tol=1e-10)
        assert spec.tolerance_for(1e6) == pytest.approx(1e-4)
        assert spec.tolerance_for(0.0) == 1e-12

    def test_spec_is_validated(self):
        from pydantic import ValidationError

        with pytest.raises(ValidationError):
            QuadratureSpec(abs_tol=0.0)
        with pytest.raises(ValidationError):
            QuadratureSpec(base_rule_order=5)
