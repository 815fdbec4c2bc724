import math

import mpmath

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import simpson

from hostark.model import ModelParams, SymmetryKind, derived_constants
from hostark.spectra import solve_spin_level
from hostark.wavefunctions import (
    ConstantsUndefined,
    RadialKind,
    SingularAtOrigin,
    assoc_laguerre,
    count_nodes,
    g_deviation_report,
    hermite,
    lower_spinor_G,
    lower_spinor_G_closed_form,
    nr_radial_R,
    pseudo_lower_G,
    realness_defect,
    sample_radial,
    shape_constants,
    upper_spinor_F,
)


def spin(eps=0.0, M=1.5, omega0=1 / 2.4, C=0.0):
    return ModelParams(M=M, omega0=omega0, eps=eps, C=C)


def pseudo(eps=0.0, C=-10.3):
    return ModelParams(M=1.5, omega0=1 / 2.4, eps=eps,
                       sym=SymmetryKind.PSEUDOSPIN, C=C)


def hermite_series(n, x):
    # brute-force sum in 50-digit arithmetic (float64 cancellation would
    # otherwise dominate the comparison at large |x|)
    with mpmath.workdps(50):
        x = mpmath.mpf(x)
        return float(sum(
            (-1) ** m
            * mpmath.mpf(math.factorial(n))
            / (math.factorial(m) * math.factorial(n - 2 * m))
            * (2 * x) ** (n - 2 * m)
            for m in range(n // 2 + 1)
        ))


def laguerre_series(n, alpha, x):
    with mpmath.workdps(50):
        alpha, x = mpmath.mpf(alpha), mpmath.mpf(x)
        total = mpmath.mpf(0)
        for k in range(n + 1):
            binom = mpmath.mpf(1)
            for j in range(1, n - k + 1):  # C(n+alpha, n-k) as a product
                binom *= (alpha + k + j) / j
            total += (-1) ** k * binom * x**k / math.factorial(k)
        return float(total)


class TestPolynomials:
    def test_hermite_base_cases(self):
        assert hermite(0, 0.37) == 1.0
        assert hermite(1, 0.5) == 1.0
        assert hermite(2, 1.0) == 2.0  # 4x^2 - 2

    def test_hermite_frozen_value(self):
        assert hermite(5, 0.7) == pytest.approx(34.49824, rel=1e-12)

    @given(st.integers(0, 15), st.floats(-10, 10))
    @settings(max_examples=200)
    def test_hermite_matches_series(self, n, x):
        expect = hermite_series(n, x)
        assert hermite(n, x) == pytest.approx(expect, rel=1e-10, abs=1e-10)

    def test_laguerre_base_cases(self):
        assert assoc_laguerre(0, 2.5, 1.7) == 1.0
        assert assoc_laguerre(1, 1.0, 0.5) == pytest.approx(1.5)  # 2 - x

    def test_laguerre_frozen_value(self):
        assert assoc_laguerre(4, 0.0, 2.3) == pytest.approx(
            0.72467083333333333, rel=1e-12
        )

    @given(st.integers(0, 15), st.floats(-0.9, 5.0), st.floats(0.0, 10.0))
    @settings(max_examples=200)
    def test_laguerre_matches_series(self, n, alpha, x):
        expect = laguerre_series(n, alpha, x)
        assert assoc_laguerre(n, alpha, x) == pytest.approx(
            expect, rel=1e-10, abs=1e-10
        )

    def test_vectorized(self):
        x = np.linspace(-2, 2, 9)
        assert hermite(3, x).shape == x.shape
        assert assoc_laguerre(3, 1.0, x).shape == x.shape

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            hermite(-1, 0.0)
        with pytest.raises(ValueError):
            assoc_laguerre(-1, 0.0, 0.0)
        with pytest.raises(ValueError):
            assoc_laguerre(2, -1.0, 0.0)


class TestShapeConstants:
    def test_spin_constants(self):
        p = spin(eps=0.5)
        E = solve_spin_level(p, 0).E
        sc = shape_constants(p, E)
        gamma = E + 1.5
        assert sc.lambda_scale == pytest.approx(math.sqrt(1.5 / 2.4))
        assert sc.b == pytest.approx(0.5 * 2.4)
        assert sc.eps1 == pytest.approx(math.sqrt(gamma / 3.0))
        v = math.sqrt(0.5 * 1.5 * (1 / 2.4) ** 2 * gamma)
        assert sc.eps2 == pytest.approx(gamma / (3.0 * v))
        assert sc.d0 == pytest.approx(1.0 / gamma)
        # well-bottom identity: b / lambda^2 = r0
        assert sc.b / sc.lambda_scale**2 == pytest.approx(
            derived_constants(p).r0, rel=1e-12
        )

    def test_gamma_must_be_positive(self):
        with pytest.raises(ConstantsUndefined):
            shape_constants(spin(), -3.0)

    def test_pseudospin_constants_are_complex(self):
        p = pseudo()
        from hostark.spectra import solve_pseudospin_level

        E = solve_pseudospin_level(p, 0).E
        sc = shape_constants(p, E)
        assert sc.eps1 is None and sc.eps2 is None
        gamma_t = 1.5 - E - 10.3
        assert gamma_t < 0
        assert sc.eps1p == pytest.approx(1j * math.sqrt(-gamma_t) / 3.0)


class TestUpperSpinorF:
    def test_zero_field_is_centered_gaussian(self):
        p = spin()
        E = solve_spin_level(p, 0).E
        sc = shape_constants(p, E)
        r = np.linspace(0, 10, 50)
        expect = np.exp(-0.5 * sc.eps1 * sc.lambda_scale**2 * r**2)
        assert upper_spinor_F(p, 0, r, E) == pytest.approx(expect, rel=1e-12)

    def test_polynomial_argument_minimized_at_well_bottom(self):
        p = spin(eps=1.0)
        sc = shape_constants(p, solve_spin_level(p, 0).E)
        r0 = derived_constants(p).r0
        assert sc.b / sc.lambda_scale**2 == pytest.approx(r0, rel=1e-12)
        r = np.linspace(0, 3 * r0, 4001)
        arg = sc.eps2 * (sc.lambda_scale**2 * r - sc.b) ** 2
        assert r[np.argmin(arg)] == pytest.approx(r0, abs=r[1] - r[0])

    def test_normalized_integral(self):
        rf = sample_radial(RadialKind.UPPER_F, spin(eps=0.5), 0,
                           r_max=40.0, samples=4001)
        assert rf.norm == pytest.approx(1.0, abs=1e-8)
        # independent check on a refined trapezoid grid
        assert np.trapezoid(np.abs(rf.values) ** 2, rf.r) == pytest.approx(1.0, abs=1e-6)

    def test_requires_spin_params(self):
        with pytest.raises(ValueError):
            upper_spinor_F(pseudo(), 0, 1.0)

    def test_origin_defect_reported(self):
        rf = sample_radial(RadialKind.UPPER_F, spin(eps=0.5), 0)
        assert rf.origin_defect > 0.0  # closed form does not vanish at r = 0


class TestNrRadialR:
    def test_ground_state_zero_field_peaks_at_origin(self):
        p = spin()
        r = np.linspace(0, 8, 801)
        vals = nr_radial_R(p, 0, r)
        assert np.argmax(np.abs(vals)) == 0
        lam = math.sqrt(1.5 / 2.4)
        expect = (lam**2 / math.pi) ** 0.25 * np.exp(-0.5 * lam**2 * r**2)
        assert vals == pytest.approx(expect, rel=1e-12)

    def test_ground_state_peaks_at_well_bottom(self):
        p = spin(eps=1.0)
        r0 = derived_constants(p).r0
        r = np.linspace(0, 2 * r0, 2001)
        vals = nr_radial_R(p, 0, r)
        assert r[np.argmax(vals)] == pytest.approx(r0, abs=r[1] - r[0])

    def test_three_interior_sign_changes(self):
        p = spin(eps=0.7)
        r0 = derived_constants(p).r0
        lam = math.sqrt(p.M * p.omega0)
        r = np.linspace(r0 - 8 / lam, r0 + 8 / lam, 4001)
        assert count_nodes(nr_radial_R(p, 3, r)) == 3

    @pytest.mark.parametrize("omega0", [1 / 2.4, 1.0])
    @pytest.mark.parametrize("eps", [0.0, 0.5, 1.0, 2.0])
    def test_node_count_equals_n(self, omega0, eps):
        p = spin(eps=eps, omega0=omega0)
        r0 = derived_constants(p).r0
        lam = math.sqrt(p.M * p.omega0)
        r = np.linspace(r0 - 8 / lam, r0 + 8 / lam, 4001)
        for n in range(11):
            assert count_nodes(nr_radial_R(p, n, r)) == n

    def test_translation_covariance_exact(self):
        p = spin(eps=1.3)
        p0 = spin(eps=0.0)
        r0 = derived_constants(p).r0
        r = np.linspace(0, 12, 601)
        moved = nr_radial_R(p, 4, r)
        reference = nr_radial_R(p0, 4, r - r0)
        assert np.array_equal(moved, reference)

    def test_orthogonality(self):
        p = spin(eps=0.5)
        r0 = derived_constants(p).r0
        lam = math.sqrt(p.M * p.omega0)
        r = np.linspace(r0 - 12 / lam, r0 + 12 / lam, 8001)
        funcs = [nr_radial_R(p, n, r) for n in range(6)]
        for m in range(6):
            for n in range(m + 1, 6):
                overlap = simpson(funcs[m] * funcs[n], x=r)
                assert abs(overlap) <= 1e-6
            assert simpson(funcs[m] * funcs[m], x=r) == pytest.approx(1.0, abs=1e-8)


class TestLowerSpinorG:
    def test_ground_state_zero_field_reduction(self):
        # (d/dr + kappa/r) F0 = (-eps1 lam^2 r + kappa/r) F0 when eps = 0
        p = spin()
        E = solve_spin_level(p, 0).E
        sc = shape_constants(p, E)
        r = np.linspace(0.2, 8, 40)
        f0 = upper_spinor_F(p, 0, r, E)
        expect = sc.d0 * (-sc.eps1 * sc.lambda_scale**2 * r - 1.0 / r) * f0
        assert lower_spinor_G(p, 0, r, E) == pytest.approx(expect, rel=1e-8)

    def test_singular_at_origin(self):
        with pytest.raises(SingularAtOrigin):
            lower_spinor_G(spin(), 0, 0.0)
        with pytest.raises(SingularAtOrigin):
            lower_spinor_G_closed_form(spin(), 0, np.array([0.5, 0.0]))

    def test_decays_at_large_radius(self):
        assert abs(lower_spinor_G(spin(eps=0.5), 0, 30.0)) < 1e-100

    def test_closed_form_matches_its_printed_expression(self):
        # the printed form keeps a +L_n^(1) term that does not vanish at n=0
        p = spin()
        E = solve_spin_level(p, 0).E
        sc = shape_constants(p, E)
        r = np.linspace(0.2, 6, 30)
        lam2 = sc.lambda_scale**2
        f0 = upper_spinor_F(p, 0, r, E)
        expect = sc.d0 * ((-sc.eps1 * lam2 * r - 1.0 / r)
                          + 2.0 * lam2 * sc.eps2 * lam2 * r) * f0
        assert lower_spinor_G_closed_form(p, 0, r, E) == pytest.approx(
            expect, rel=1e-12
        )

    def test_deviation_report(self):
        rep = g_deviation_report(spin(eps=0.5), 1)
        # numeric path is internally consistent under h-refinement
        assert rep.richardson_defect <= 1e-6
        # and the printed closed form genuinely disagrees with it
        assert rep.max_rel_deviation > 1e-3
        assert rep.mean_rel_deviation > 0.0


class TestPseudoLowerG:
    def test_ground_state_modulus_is_pure_exponential(self):
        p = pseudo()
        from hostark.spectra import solve_pseudospin_level

        E = solve_pseudospin_level(p, 0).E
        sc = shape_constants(p, E)
        r = np.linspace(0, 6, 30)
        vals = pseudo_lower_G(p, 0, r, E)
        exponent = 1j * sc.eps1p * (-sc.b * r + 0.5 * sc.lambda_scale**2 * r**2)
        assert np.abs(vals) == pytest.approx(np.exp(exponent.real), rel=1e-12)

    def test_zero_field_gaussian_envelope(self):
        p = pseudo()
        from hostark.spectra import solve_pseudospin_level

        E = solve_pseudospin_level(p, 0).E
        gamma_t = 1.5 - E - 10.3
        r = np.linspace(0, 6, 30)
        vals = pseudo_lower_G(p, 0, r, E)
        expect = np.exp(-math.sqrt(-gamma_t) / (2 * 1.5)
                        * 0.5 * (1.5 / 2.4) * r**2)
        assert np.abs(vals) == pytest.approx(expect, rel=1e-12)

    def test_realness_defect_is_tiny_for_bound_level(self):
        rf = sample_radial(RadialKind.PSEUDO_LOWER_G, pseudo(), 1, samples=801)
        assert realness_defect(rf.values) <= 1e-12

    def test_unbound_level_raises(self):
        with pytest.raises(ConstantsUndefined):
            pseudo_lower_G(pseudo(eps=2.0), 0, 1.0)

    def test_requires_pseudospin_params(self):
        with pytest.raises(ValueError):
            pseudo_lower_G(spin(), 0, 1.0)


class TestSampling:
    def test_norm_metadata(self):
        for kind, params in [(RadialKind.UPPER_F, spin(eps=0.5)),
                             (RadialKind.NONREL_R, spin(eps=1.0)),
                             (RadialKind.PSEUDO_LOWER_G, pseudo())]:
            rf = sample_radial(kind, params, 2, samples=4001)
            assert rf.norm == pytest.approx(1.0, abs=1e-8)
            assert rf.normalized

    def test_raw_sampling(self):
        rf = sample_radial(RadialKind.UPPER_F, spin(), 0, normalize=False)
        assert rf.values[0] == pytest.approx(1.0)  # unnormalized closed form at r=0

    def test_node_metadata_matches_count(self):
        rf = sample_radial(RadialKind.NONREL_R, spin(eps=0.5), 3, samples=4001)
        assert rf.nodes == count_nodes(rf.values)

    def test_samples_property_shape(self):
        rf = sample_radial(RadialKind.UPPER_F, spin(), 1, samples=101)
        assert rf.samples.shape == (101, 2)

    def test_lower_g_grid_avoids_origin(self):
        rf = sample_radial(RadialKind.LOWER_G, spin(eps=0.3), 0, samples=501)
        assert rf.r[0] == pytest.approx(1e-8)
        assert np.all(np.isfinite(rf.values))


class TestMeanRadius:
    def test_reported_near_density_center(self):
        from hostark.wavefunctions import mean_radius

        p = spin(eps=1.0)
        rf = sample_radial(RadialKind.NONREL_R, p, 0, samples=4001)
        r0 = derived_constants(p).r0
        # diagnostic only: the computed center sits at +r0 up to the
        # half-line truncation of the sampling window
        assert mean_radius(rf) == pytest.approx(r0, abs=1e-2)
        assert 0.0 <= mean_radius(rf) <= rf.r[-1]


def test_lower_g_requires_spin_params():
    with pytest.raises(ValueError):
        lower_spinor_G(pseudo(), 0, 1.0)
    with pytest.raises(ValueError):
        lower_spinor_G_closed_form(pseudo(), 0, 1.0)
