"""Tests for the boundary-sampled function representation."""

import numpy as np
import pytest

from blaschke_basis import (
    AnalyticityError,
    DiskPoint,
    PreconditionError,
    cauchy_kernel,
    dilate,
    eval_inside,
    from_samples,
    from_taylor,
    pairing,
    pointwise_combine,
    riesz_project,
)
from blaschke_basis.fnspace import project_spectrum, samples_at_radius, unit_circle_grid


def horner_oracle(coeffs, z):
    """Independent polynomial evaluation: plain right-to-left Horner loop."""
    acc = 0j
    for c in reversed(list(coeffs)):
        acc = acc * z + c
    return acc


class TestFromTaylor:
    def test_constant(self):
        f = from_taylor([1], 16)
        assert np.allclose(f.samples, 1.0)

    def test_identity_samples_are_roots_of_unity(self):
        f = from_taylor([0, 1], 16)
        assert np.allclose(f.samples, unit_circle_grid(16))

    def test_zero_padding(self):
        f = from_taylor([1, 2, 3], 64)
        assert np.array_equal(f.taylor[:3], [1, 2, 3])
        assert np.all(f.taylor[3:] == 0)

    def test_rejects_non_power_of_two(self):
        with pytest.raises(PreconditionError):
            from_taylor([1], 24)

    def test_rejects_tiny_grid(self):
        with pytest.raises(PreconditionError):
            from_taylor([1], 8)

    def test_rejects_overlong_coefficients(self):
        with pytest.raises(PreconditionError):
            from_taylor(np.ones(9), 16)

    def test_rejects_empty(self):
        with pytest.raises(PreconditionError):
            from_taylor([], 16)

    def test_rejects_radius_below_one(self):
        with pytest.raises(PreconditionError):
            from_taylor([1], 16, analytic_radius=0.5)


class TestEvalInside:
    def test_constant(self):
        f = from_taylor([1], 64)
        for z in (0, 0.5, 0.3 + 0.4j):
            assert eval_inside(f, z) == pytest.approx(1.0)

    def test_monomial(self):
        f = from_taylor([0, 0, 0, 1], 64)
        assert eval_inside(f, 0.5) == pytest.approx(0.125)

    def test_quadratic_example(self):
        f = from_taylor([1, 0, 2], 64)
        assert eval_inside(f, 0.0) == pytest.approx(1.0)
        assert eval_inside(f, 0.5) == pytest.approx(1.5)
        assert eval_inside(f, 1j * 0.5) == pytest.approx(1 + 2 * (0.5j) ** 2)

    def test_against_horner_oracle(self):
        rng = np.random.default_rng(11)
        coeffs = rng.standard_normal(20) + 1j * rng.standard_normal(20)
        f = from_taylor(coeffs, 256)
        for z in (0.1, -0.6 + 0.2j, 0.9j):
            assert eval_inside(f, z) == pytest.approx(horner_oracle(coeffs, z), abs=1e-12)

    def test_kernel_closed_form(self):
        f = cauchy_kernel(0.3, 256)
        assert eval_inside(f, 0.5) == pytest.approx(1.0 / 0.85, abs=1e-12)

    def test_rejects_point_outside_guard(self):
        f = from_taylor([1], 64)
        with pytest.raises(PreconditionError):
            eval_inside(f, 1.0)

    def test_accepts_disk_point_wrapper(self):
        f = from_taylor([0, 1], 64)
        assert eval_inside(f, DiskPoint(0.25)) == pytest.approx(0.25)


class TestRieszProject:
    def test_conjugate_identity_projects_to_zero(self):
        grid = unit_circle_grid(64)
        f = riesz_project(np.conj(grid))
        assert np.max(np.abs(f.samples)) <= 1e-14

    def test_constant_plus_conjugate(self):
        grid = unit_circle_grid(64)
        f = riesz_project(2.0 + np.conj(grid))
        assert np.allclose(f.samples, 2.0, atol=1e-13)

    def test_factor_times_kernel_is_coanalytic(self):
        # conj(b_lam) * k_lam = -conj(z)/(1 - lam*conj(z)) on the circle:
        # purely negative frequencies, so the projection is the zero function
        lam = 0.4
        grid = unit_circle_grid(512)
        values = np.conj((lam - grid) / (1 - lam * grid)) / (1 - lam * grid)
        f = riesz_project(values)
        assert np.max(np.abs(f.samples)) <= 1e-10

    def test_spectral_projection_exactly_idempotent(self):
        rng = np.random.default_rng(3)
        spectrum = rng.standard_normal(64) + 1j * rng.standard_normal(64)
        once = project_spectrum(spectrum)
        assert np.array_equal(project_spectrum(once), once)

    def test_full_operation_idempotent_to_roundoff(self):
        rng = np.random.default_rng(4)
        raw = rng.standard_normal(256) + 1j * rng.standard_normal(256)
        first = riesz_project(raw)
        second = riesz_project(first.samples)
        scale = np.max(np.abs(first.taylor))
        assert np.max(np.abs(second.taylor - first.taylor)) <= 1e-13 * scale


class TestDilate:
    def test_identity_dilation_returns_same_object(self):
        f = from_taylor([1, 2], 64)
        assert dilate(f, 1.0) is f

    def test_quadratic(self):
        f = from_taylor([0, 0, 1], 64)
        g = dilate(f, 0.5)
        assert g.taylor[2] == pytest.approx(0.25)

    def test_geometric_series_oracle(self):
        # 1/(1 - z/2) dilated by 1.5 has coefficients (3/4)^k
        m = 2048
        f = from_taylor([0.5**k for k in range(m // 2)], m, analytic_radius=2.0)
        g = dilate(f, 1.5)
        expected = np.array([0.75**k for k in range(m // 2)])
        assert np.max(np.abs(g.taylor[: m // 2] - expected)) <= 1e-12
        assert g.analytic_radius == pytest.approx(2.0 / 1.5)

    def test_rejects_beyond_declared_radius(self):
        f = from_samples(np.ones(64))
        with pytest.raises(PreconditionError):
            dilate(f, 1.5)

    def test_overflowing_tail_is_reported(self):
        # noise-scale coefficients amplified by r^k past the float range
        taylor = np.zeros(2048, dtype=complex)
        taylor[0] = 1.0
        taylor[1000] = 1e-280
        f = from_taylor(taylor[:1024], 2048, analytic_radius=5.0)
        with pytest.raises(AnalyticityError):
            dilate(f, 4.0)


class TestPointwiseCombine:
    def test_add_zero(self):
        f = from_taylor([1, 2, 3], 64)
        zero = from_taylor([0], 64)
        g = pointwise_combine(f, zero, "add")
        assert np.allclose(g.samples, f.samples)

    def test_mul_rational_oracle(self):
        # b_lam * k_lam = (lam - z)/(1 - conj(lam) z)^2 checked pointwise
        lam = 0.3 - 0.45j
        m = 512
        grid = unit_circle_grid(m)
        b = from_samples((lam - grid) / (1 - np.conj(lam) * grid))
        k = cauchy_kernel(lam, m)
        product = pointwise_combine(b, k, "mul")
        closed = (lam - grid) / (1 - np.conj(lam) * grid) ** 2
        assert np.max(np.abs(product.samples - closed)) <= 1e-10

    def test_div_backward_shift_oracle(self):
        # (f - f(0) * 1) / b_0 with f(z) = z: the quotient z / (-z) = -1,
        # matching the coefficient-shift oracle a_k -> -a_{k+1}
        m = 64
        f = from_taylor([0, 1], m)
        b0 = from_samples(-unit_circle_grid(m))
        quotient = pointwise_combine(f, b0, "div")
        assert np.allclose(quotient.samples, -1.0, atol=1e-13)
        shifted = -np.roll(f.taylor, -1)
        shifted[-1] = 0.0
        assert np.max(np.abs(quotient.taylor - shifted)) <= 1e-13

    def test_div_rejects_near_zero_divisor(self):
        f = from_taylor([1], 64)
        tiny = from_taylor([1e-13], 64)
        with pytest.raises(PreconditionError):
            pointwise_combine(f, tiny, "div")

    def test_mismatched_grids_rejected(self):
        with pytest.raises(PreconditionError):
            pointwise_combine(from_taylor([1], 64), from_taylor([1], 128), "add")

    def test_unknown_op_rejected(self):
        with pytest.raises(PreconditionError):
            pointwise_combine(from_taylor([1], 64), from_taylor([1], 64), "pow")

    def test_reports_nonanalytic_result(self):
        grid = unit_circle_grid(64)
        f = from_taylor([0, 1], 64)
        # dividing z by z^2 leaves conj(z): genuinely non-analytic
        zsq = from_samples(grid**2)
        with pytest.raises(AnalyticityError):
            pointwise_combine(f, zsq, "div")


class TestPairingAndGrid:
    def test_round_trip_relative_error(self):
        rng = np.random.default_rng(5)
        for degree in (3, 100, 1023):
            coeffs = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
            f = from_taylor(coeffs, 2048)
            recovered = np.fft.fft(f.samples) / 2048
            rel = np.max(np.abs(recovered[: degree + 1] - coeffs)) / np.max(np.abs(coeffs))
            assert rel <= 1e-12

    def test_pairing_of_monomials_is_orthonormal(self):
        m = 64
        zi = from_taylor([0, 0, 1], m)
        zj = from_taylor([0, 0, 0, 1], m)
        assert pairing(zi, zi) == pytest.approx(1.0)
        assert abs(pairing(zi, zj)) <= 1e-15

    def test_eval_matches_cauchy_pairing(self):
        rng = np.random.default_rng(6)
        coeffs = rng.standard_normal(16) + 1j * rng.standard_normal(16)
        f = from_taylor(coeffs, 512)
        for z in (0.95, -0.6 + 0.7j, 0.2j):
            assert abs(eval_inside(f, z) - pairing(f, cauchy_kernel(z, 512))) <= 1e-10

    def test_samples_at_radius_matches_eval(self):
        f = cauchy_kernel(0.5, 256)
        ring = samples_at_radius(f, 0.7)
        grid = unit_circle_grid(256)
        for idx in (0, 17, 100):
            assert ring[idx] == pytest.approx(eval_inside(f, 0.7 * grid[idx]), abs=1e-12)


class TestDiskPoint:
    def test_guard_band(self):
        DiskPoint(1 - 1e-8)  # allowed
        with pytest.raises(PreconditionError):
            DiskPoint(1 - 1e-9)

    def test_serialization_round_trip(self):
        from blaschke_basis import BoundaryFunction

        f = cauchy_kernel(0.25 + 0.1j, 64)
        restored = BoundaryFunction.from_jsonable(f.to_jsonable())
        assert np.max(np.abs(restored.samples - f.samples)) <= 1e-15
        assert restored.analytic_radius == pytest.approx(f.analytic_radius)
