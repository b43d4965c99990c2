"""
QThermo-Py 量子 Fisher 信息测试
"""

import numpy as np
import pytest
from scipy.stats import special_ortho_group

from src.core.exceptions import BoundaryPointError, SingularStateError
from src.qfi import (
    compare_qfi,
    is_positive_definite,
    qfi_batch,
    qfi_closed_form,
    qfi_determinant,
    qfi_numeric,
    sld_solve,
)
from src.state_space import BlochPoint, HermitianMatrix, density_complex, density_derivatives, density_matrix


class TestClosedForm:
    @pytest.mark.parametrize("dim", [3, 5])
    def test_identity_at_origin(self, dim):
        assert np.array_equal(qfi_closed_form(BlochPoint.of([0.0] * dim)).entries, np.eye(dim))

    def test_explicit_entries(self):
        h = qfi_closed_form(BlochPoint.of([0.0, 0.0, 0.5])).entries
        assert np.allclose(h, np.diag([1.0, 1.0, 4.0 / 3.0]), atol=1e-15)

    @pytest.mark.parametrize("dim", [3, 5])
    def test_determinant(self, dim, interior_points):
        for p in interior_points(dim, 20, 11 * dim):
            h = qfi_closed_form(p)
            assert h.determinant() == pytest.approx(qfi_determinant(p), rel=1e-12)
            assert qfi_determinant(p) == pytest.approx(1.0 / (1.0 - p.radius**2), rel=1e-14)
            assert is_positive_definite(h)

    @pytest.mark.parametrize(
        "coords",
        [[0.0, 0.0, 1.0], [0.0, 0.0, 1.0 - 1e-10], [0.6, 0.8, 0.0, 0.0, 0.0]],
    )
    def test_boundary_rejected(self, coords):
        p = BlochPoint.of(coords)
        with pytest.raises(BoundaryPointError) as info:
            qfi_closed_form(p)
        assert info.value.exit_code == 2
        with pytest.raises(BoundaryPointError):
            qfi_numeric(p)


class TestNumeric:
    @pytest.mark.parametrize("dim", [3, 5])
    def test_matches_closed_form(self, dim, interior_points):
        for p in interior_points(dim, 100, 100 + dim):
            deviation = np.max(np.abs(qfi_numeric(p).entries - qfi_closed_form(p).entries))
            assert deviation < 1e-8

    def test_deep_interior_near_boundary(self):
        p = BlochPoint.of([0.0, 0.0, 0.0, 0.6, 0.79])
        assert np.allclose(qfi_numeric(p).entries, qfi_closed_form(p).entries, rtol=1e-9, atol=1e-9)

    @pytest.mark.parametrize("dim", [3, 5])
    def test_rotation_covariance(self, dim, interior_points):
        rotations = special_ortho_group.rvs(dim, size=5, random_state=7)
        for p, rotation in zip(interior_points(dim, 5, 17), rotations):
            rotated = BlochPoint.of(rotation @ p.as_array())
            expected = rotation @ qfi_numeric(p).entries @ rotation.T
            assert np.allclose(qfi_numeric(rotated).entries, expected, atol=1e-9)

    def test_sld_solves_lyapunov_equation(self):
        rho = density_matrix(BlochPoint.of([0.2, -0.1, 0.3]))
        for drho in density_derivatives(3):
            sld = sld_solve(rho, drho)
            lhs = rho.entries @ sld.entries + sld.entries @ rho.entries
            assert np.allclose(lhs, 2.0 * drho.entries, atol=1e-13)

    def test_pure_state_is_singular(self):
        rho = density_complex(BlochPoint.of([0.0, 0.0, 1.0]))
        drho = HermitianMatrix(entries=density_derivatives(3)[0].entries)
        with pytest.raises(SingularStateError) as info:
            sld_solve(rho, drho)
        assert info.value.exit_code == 3


class TestInverseProportionality:
    @pytest.mark.parametrize("dim, expected", [(3, 0.25), (5, 1.0 / 16.0)])
    def test_product_is_constant(self, dim, expected, interior_points):
        for comparison in qfi_batch(interior_points(dim, 20, 23 * dim)):
            assert comparison.expected_inverse_product == expected
            assert comparison.inverse_product == pytest.approx(expected, rel=1e-9)

    def test_batch_preserves_order(self, interior_points):
        points = interior_points(3, 6, 5)
        assert [c.point for c in qfi_batch(points)] == points

    def test_comparison_report(self):
        comparison = compare_qfi(BlochPoint.of([0.0, 0.0, 0.5]))
        assert comparison.max_deviation < 1e-12
        assert comparison.det_closed_form == pytest.approx(4.0 / 3.0, rel=1e-15)
        assert comparison.density_determinant == pytest.approx(0.1875, rel=1e-12)
        assert len(comparison.matrix_rows()) == 3
