import math

import numpy as np
import pytest

from curvedh.analytic import (BranchError, QuantumNumbers,
                              bound_state_admissible, energy_level, energy_n,
                              flat_limit_gap, hypergeometric_data, lambda_n,
                              mobius_argument, radial_wavefunction,
                              radial_wavefunction_flat, transition_level,
                              _raw_values)
from curvedh.geometry import volume_weight
from curvedh.oracle import ode_residual

# root of n^2 (n^2 - 1) = 100, frozen from an independent bisection (mpmath)
TRANSITION_RHO_10 = 3.242297364100090


class TestQuantumNumbers:
    def test_derives_m(self):
        assert QuantumNumbers(3, 1).m == 1

    def test_consistent_triple(self):
        assert QuantumNumbers(4, 2, 1).m == 1

    def test_inconsistent_triple(self):
        with pytest.raises(ValueError):
            QuantumNumbers(4, 2, 2)

    def test_l_range(self):
        with pytest.raises(ValueError):
            QuantumNumbers(2, 2)
        with pytest.raises(ValueError):
            QuantumNumbers(0, 0)


class TestSpectrum:
    def test_flat_ground_state(self):
        assert lambda_n(1, 0.0) == -1.0
        assert energy_n(1, 0.0) == -0.5

    def test_hyperbolic_n2(self):
        assert lambda_n(2, -0.01) == pytest.approx(-0.28, rel=1e-15)

    def test_spherical_n3(self):
        # -1/9 + 8 * 1e-2
        assert lambda_n(3, 1e-2) == pytest.approx(-0.1111111111111111 + 0.08, rel=1e-14)

    def test_hyperbolic_n3(self):
        assert lambda_n(3, -0.01) == pytest.approx(-0.19111111111111112, rel=1e-14)

    def test_n1_curvature_independent(self):
        for k in (1e-2, 1e-4, 0.0, -1e-4, -1e-2):
            assert lambda_n(1, k) == -1.0

    def test_additivity(self):
        # curved eigenvalue = flat eigenvalue + (n^2 - 1) kappa, exactly
        for n in (1, 2, 5, 9):
            for k in (1e-2, -1e-4, 0.3):
                assert lambda_n(n, k) == lambda_n(n, 0.0) + (n * n - 1) * k

    def test_spherical_monotone_in_kappa(self):
        for n in (2, 3, 4):
            ks = [1e-4, 1e-3, 1e-2, 1e-1]
            vals = [energy_n(n, k) for k in ks]
            assert vals == sorted(vals)

    def test_l_degeneracy(self):
        lvl_a = energy_level(QuantumNumbers(3, 0), -1e-4)
        lvl_b = energy_level(QuantumNumbers(3, 2), -1e-4)
        assert lvl_a.energy == lvl_b.energy

    def test_rejects_n_zero(self):
        with pytest.raises(ValueError):
            lambda_n(0, 0.0)


class TestTransitionLevel:
    def test_sqrt_two_point(self):
        # n^2 (n^2 - 1) = 2 has the exact root sqrt(2)
        rho = math.sqrt(2.0)
        assert transition_level(1.0 / rho**2) == pytest.approx(math.sqrt(2.0), rel=1e-15)

    def test_rho_ten(self):
        assert transition_level(1e-2) == pytest.approx(TRANSITION_RHO_10, rel=1e-14)

    def test_bisection_oracle(self):
        # independent check: solve n^2 (n^2 - 1) = rho^2 by bisection
        rho = 10.0
        lo, hi = 1.0, 10.0
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if mid * mid * (mid * mid - 1.0) < rho * rho:
                lo = mid
            else:
                hi = mid
        assert transition_level(1e-2) == pytest.approx(0.5 * (lo + hi), rel=1e-12)

    def test_large_rho_asymptote(self):
        rho = 1e18
        assert transition_level(1.0 / rho**2) == pytest.approx(math.sqrt(rho), rel=1e-2)

    def test_rejects_flat_and_hyperbolic(self):
        for k in (0.0, -1e-2):
            with pytest.raises(ValueError):
                transition_level(k)


class TestBoundStateCutoff:
    def test_hyperbolic_census(self):
        # R/a1 = 10: n^2 < 10 admits n = 1, 2, 3 only
        for n in (1, 2, 3):
            assert bound_state_admissible(QuantumNumbers(n, 0), -0.01)
        for n in (4, 5):
            assert not bound_state_admissible(QuantumNumbers(n, 0), -0.01)

    def test_strict_inequality_at_boundary(self):
        # R/a1 = 4: n = 2 sits exactly at n^2 = R/a1 and is excluded
        assert not bound_state_admissible(QuantumNumbers(2, 0), -1.0 / 16.0)

    def test_flat_and_spherical_always_bound(self):
        assert bound_state_admissible(QuantumNumbers(40, 10), 0.0)
        assert bound_state_admissible(QuantumNumbers(40, 10), 1e-2)

    def test_energy_level_reports_bound_flag(self):
        assert not energy_level(QuantumNumbers(4, 0), -0.01).bound


class TestMobiusArgument:
    def test_zero_at_origin(self):
        assert mobius_argument(-1.0, 0.0) == 0.0

    def test_hyperbolic_saturates_to_one(self):
        assert mobius_argument(-1.0, 40.0) == pytest.approx(1.0, abs=1e-15)

    def test_spherical_on_unit_circle_about_one(self):
        # kappa > 0: z = 1 - exp(-2i sqrt(kappa) r) lies on |z - 1| = 1
        for r in (0.3, 1.0, 2.5):
            z = mobius_argument(1.0, r)
            assert abs(z - 1.0) == pytest.approx(1.0, rel=1e-14)

    def test_matches_product_form(self):
        # 2 sigma S_kappa(r) e^{-sigma r} with sigma = sqrt(-kappa)
        import cmath

        from curvedh.geometry import curved_sin
        for k, r in ((-0.01, 3.0), (-1.0, 0.7), (1.0, 1.2), (0.25, 2.0)):
            sigma = cmath.sqrt(complex(-k))
            s = complex(curved_sin(k, r)) if k <= 0 else complex(math.sin(math.sqrt(k) * r) / math.sqrt(k))
            direct = 2.0 * sigma * s * cmath.exp(-sigma * r)
            assert mobius_argument(k, r) == pytest.approx(direct, rel=1e-13)


class TestHypergeometricData:
    def test_ground_state_hyperbolic_roots(self):
        # kappa = -0.01, n = 1: omega_+^2 = 81, omega_-^2 = 121, coeff = 1
        hd = hypergeometric_data(QuantumNumbers(1, 0), -0.01)
        assert hd.omega_plus**2 == pytest.approx(81.0, rel=1e-12)
        assert hd.omega_minus**2 == pytest.approx(121.0, rel=1e-12)
        assert hd.exponent_coeff == pytest.approx(1.0, rel=1e-12)

    def test_series_terminates(self):
        for n, l, k in ((1, 0, -0.01), (2, 0, -0.01), (3, 1, -0.01),
                        (2, 1, 1e-2), (4, 0, 1e-4), (3, 2, 1e-2)):
            qn = QuantumNumbers(n, l)
            hd = hypergeometric_data(qn, k)
            assert hd.a == pytest.approx(complex(-qn.m), abs=1e-9)
            assert hd.c == 2 * l + 2

    def test_parameter_sum_identity(self):
        # a + b + 1 = 2 (l + q_+ + 1) ties the Jacobi and 2F1 views together
        for n, l, k in ((2, 0, -0.01), (3, 1, 1e-2), (5, 2, 1e-4)):
            hd = hypergeometric_data(QuantumNumbers(n, l), k)
            lhs = hd.a + hd.b + 1.0
            rhs = 2.0 * (l + hd.q_plus + 1.0)
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))

    def test_jacobi_degree_parameter(self):
        for n, l, k in ((2, 0, -0.01), (3, 0, 1e-2)):
            hd = hypergeometric_data(QuantumNumbers(n, l), k)
            assert hd.jacobi_nu == pytest.approx(-n + (hd.omega_plus + hd.omega_minus) / 2.0,
                                                 rel=1e-13)

    def test_exponent_coeff_structure(self):
        # coeff = beta/(2n) - sigma m, so it tends to 1/n as kappa -> 0
        import cmath
        for k in (-1e-6, -1e-8, 1e-6, 1e-8):
            qn = QuantumNumbers(2, 0)
            hd = hypergeometric_data(qn, k)
            sigma = cmath.sqrt(complex(-k))
            assert abs(hd.exponent_coeff - (0.5 - sigma * qn.m)) <= 1e-12
            assert abs(hd.exponent_coeff - 0.5) <= 2.0 * math.sqrt(abs(k))

    def test_spherical_coeff_complex(self):
        hd = hypergeometric_data(QuantumNumbers(2, 0), 1.0)
        assert hd.exponent_coeff.real == pytest.approx(0.5, rel=1e-12)
        assert hd.exponent_coeff.imag != 0.0

    def test_unbound_rejected(self):
        with pytest.raises(BranchError):
            hypergeometric_data(QuantumNumbers(4, 0), -0.01)

    def test_probe_residual_certifies_branch(self):
        # the probe grid is coarse (64 points), so the certified branch sits
        # at the stencil truncation floor, orders below any wrong branch
        hd = hypergeometric_data(QuantumNumbers(3, 1), -0.01)
        assert hd.probe_residual < 1e-3


class TestRadialWavefunction:
    def test_hyperbolic_ground_state_is_exponential(self):
        # kappa = -0.01, n = 1: G proportional to e^{-r}
        tab = radial_wavefunction(QuantumNumbers(1, 0), -0.01)
        mask = tab.grid < 30.0
        ratio = tab.values[mask] / np.exp(-tab.grid[mask])
        assert np.max(ratio) - np.min(ratio) <= 1e-10 * np.max(np.abs(ratio))

    def test_spherical_n2_closed_form(self):
        # kappa = 1, n = 2, l = 0: G proportional to e^{-r/2}(2 cos r - sin r)
        tab = radial_wavefunction(QuantumNumbers(2, 0), 1.0)
        r = tab.grid
        ref = np.exp(-r / 2.0) * (2.0 * np.cos(r) - np.sin(r))
        scale = tab.values[100] / ref[100]
        assert np.max(np.abs(tab.values - scale * ref)) <= 1e-10 * np.max(np.abs(tab.values))

    def test_flat_n2_node_position(self):
        # flat 2s radial function vanishes at r = 2 a1
        tab = radial_wavefunction(QuantumNumbers(2, 0), 0.0)
        i = int(np.argmin(np.abs(tab.grid - 2.0)))
        interior_peak = np.max(np.abs(tab.values))
        assert abs(tab.values[i]) <= 1e-2 * interior_peak
        assert tab.node_count == 1

    @pytest.mark.parametrize("n,l,k", [
        (1, 0, -0.01), (2, 0, -0.01), (3, 0, -0.01), (3, 1, -0.01),
        (1, 0, 1e-2), (2, 0, 1e-2), (3, 1, 1e-2), (4, 2, 1e-4),
        (2, 0, 0.0), (4, 1, 0.0),
    ])
    def test_node_counts(self, n, l, k):
        tab = radial_wavefunction(QuantumNumbers(n, l), k)
        assert tab.node_count == n - l - 1

    @pytest.mark.parametrize("n,l,k", [
        (2, 0, -0.01), (3, 1, -0.01), (2, 1, 1e-2), (3, 2, 0.0),
    ])
    def test_residual_against_radial_equation(self, n, l, k):
        tab = radial_wavefunction(QuantumNumbers(n, l), k)
        res = ode_residual(k, l, tab.lam, tab.grid[1:], tab.values[1:])
        assert res <= 1e-8

    def test_residual_small_spherical_curvature(self):
        # kappa = 1e-4 has a huge antipodal domain; resolve the decayed
        # region with a fine step instead of spreading points to r = pi/sqrt(k)
        grid = np.linspace(0.0, 60.0, 15001)
        tab = radial_wavefunction(QuantumNumbers(3, 0), 1e-4, grid=grid)
        res = ode_residual(1e-4, 0, tab.lam, tab.grid[1:], tab.values[1:])
        assert res <= 1e-8

    def test_unit_norm(self):
        from scipy.integrate import simpson
        for n, l, k in ((2, 0, -0.01), (2, 1, 1e-2), (3, 0, 0.0)):
            tab = radial_wavefunction(QuantumNumbers(n, l), k)
            w = volume_weight(k, tab.grid)
            assert simpson(tab.values**2 * w, x=tab.grid) == pytest.approx(1.0, abs=1e-6)

    def test_flat_dispatch_matches_laguerre_route(self):
        qn = QuantumNumbers(3, 1)
        a = radial_wavefunction(qn, 0.0)
        b = radial_wavefunction_flat(qn)
        assert np.array_equal(a.values, b.values)

    def test_tiny_kappa_routes_flat(self):
        qn = QuantumNumbers(2, 0)
        a = radial_wavefunction(qn, 1e-15)
        b = radial_wavefunction_flat(qn)
        assert np.array_equal(a.values, b.values)

    def test_sign_convention_positive_at_origin(self):
        for n, l, k in ((2, 0, -0.01), (3, 1, 1e-2)):
            tab = radial_wavefunction(QuantumNumbers(n, l), k)
            lead = tab.values[np.abs(tab.values) > 1e-6 * np.max(np.abs(tab.values))][0]
            assert lead > 0.0

    def test_wrong_branch_negative_control(self):
        # an exponent coefficient off the certified branch leaves a large
        # residual: the probe certification is actually discriminating
        qn = QuantumNumbers(1, 0)
        k = -0.01
        hd = hypergeometric_data(qn, k)
        grid = np.linspace(0.0, 40.0, 1001)
        bad = _raw_values(qn.m, qn.l, k, hd.sqrt_minus_kappa, 0.8, hd.b, grid)
        res = ode_residual(k, 0, hd.lam, grid[1:], np.real(bad[1:]))
        assert res >= 1e-2


class TestFlatLimit:
    def test_zero_kappa_zero_gap(self):
        gaps = flat_limit_gap(QuantumNumbers(1, 0), [0.0])
        assert gaps == [0.0]

    def test_gap_halves_with_kappa(self):
        g = flat_limit_gap(QuantumNumbers(2, 0), [2e-4, 1e-4])
        assert g[0] / g[1] == pytest.approx(2.0, rel=0.05)

    def test_small_kappa_small_gap(self):
        (gap,) = flat_limit_gap(QuantumNumbers(1, 0), [-1e-4])
        assert gap < 1e-3

    def test_antipode_guard(self):
        grid = np.linspace(0.0, 50.0, 501)
        with pytest.raises(ValueError):
            flat_limit_gap(QuantumNumbers(1, 0), [1e-2], grid=grid)

    def test_loglog_slope_one(self):
        ks = np.array([3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5])
        gaps = np.array(flat_limit_gap(QuantumNumbers(2, 1), ks))
        slope = np.polyfit(np.log(ks), np.log(gaps), 1)[0]
        assert slope == pytest.approx(1.0, abs=0.1)
