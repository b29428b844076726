import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvedh.geometry import (ATOMIC, Curvature, DomainError, PoleError,
                              UnitScales, curved_cos, curved_cot, curved_sin,
                              curved_tan, volume_weight)

# frozen high-precision series evaluations (mpmath, 25 digits)
SINH_1 = 1.175201193643801456882382
COSH_1 = 1.543080634815243778477906
COTH_1_TENTH = 0.1313035285499331303636161
SINH_1_SQ = 1.381097845541815729781107


class TestCurvature:
    def test_radius_invariant(self):
        for k in (0.3, -0.3, 2.0, -1e-4):
            c = Curvature(k)
            assert c.radius**2 * abs(k) == pytest.approx(1.0, rel=1e-15)

    def test_flat_sentinel(self):
        assert Curvature(0.0).radius == math.inf

    def test_sign_trichotomy(self):
        assert Curvature(1.0).is_spherical
        assert Curvature(0.0).is_euclidean
        assert Curvature(-1.0).is_hyperbolic

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            Curvature(math.nan)


class TestUnitScales:
    def test_atomic_values(self):
        s = ATOMIC
        assert s.bohr_radius == 1.0
        assert s.rydberg == 0.5
        assert s.beta == 2.0

    def test_lambda_energy_roundtrip(self):
        s = UnitScales()
        for e in (-0.5, -0.125, 0.37):
            assert s.energy_from_lambda(s.lambda_from_energy(e)) == pytest.approx(e, rel=1e-12)
        assert s.lambda_from_energy(-0.5) == -1.0


class TestCurvedSin:
    def test_flat_identity(self):
        assert curved_sin(0.0, 2.0) == 2.0

    def test_sphere_quarter(self):
        assert curved_sin(1.0, math.pi / 2) == pytest.approx(1.0, abs=1e-15)

    def test_hyperbolic(self):
        assert curved_sin(-1.0, 1.0) == pytest.approx(SINH_1, rel=1e-14)

    def test_negative_radius_rejected(self):
        with pytest.raises(DomainError):
            curved_sin(1.0, -0.1)

    def test_beyond_antipode_rejected(self):
        with pytest.raises(DomainError):
            curved_sin(1.0, math.pi + 0.1)

    def test_accepts_curvature_object_and_arrays(self):
        r = np.array([0.5, 1.0, 2.0])
        out = curved_sin(Curvature(-1.0), r)
        assert out == pytest.approx(np.sinh(r), rel=1e-14)


class TestCurvedCos:
    def test_flat(self):
        assert curved_cos(0.0, 5.0) == 1.0

    def test_antipode(self):
        assert curved_cos(1.0, math.pi) == pytest.approx(-1.0, abs=1e-15)

    def test_hyperbolic(self):
        assert curved_cos(-1.0, 1.0) == pytest.approx(COSH_1, rel=1e-14)


class TestCurvedTanCot:
    def test_tan_sphere(self):
        assert curved_tan(1.0, math.pi / 4) == pytest.approx(1.0, rel=1e-14)

    def test_cot_flat(self):
        assert curved_cot(0.0, 3.0) == pytest.approx(1.0 / 3.0, rel=1e-15)

    def test_cot_hyperbolic(self):
        assert curved_cot(-0.01, 10.0) == pytest.approx(COTH_1_TENTH, rel=1e-13)

    def test_tan_pole(self):
        with pytest.raises(PoleError):
            curved_tan(1.0, math.pi / 2)

    def test_cot_pole_at_origin(self):
        with pytest.raises(PoleError):
            curved_cot(-1.0, 0.0)


class TestVolumeWeight:
    def test_flat(self):
        assert volume_weight(0.0, 2.0) == 4.0

    def test_sphere(self):
        assert volume_weight(1.0, math.pi / 2) == pytest.approx(1.0, abs=1e-15)

    def test_hyperbolic(self):
        assert volume_weight(-1.0, 1.0) == pytest.approx(SINH_1_SQ, rel=1e-13)


@st.composite
def kappa_and_radius(draw):
    k = draw(st.floats(-2.0, 2.0, allow_nan=False))
    u = draw(st.floats(1e-3, 0.999))
    r = u * (math.pi / math.sqrt(k)) if k > 0 else u * 50.0
    return k, r


@given(kappa_and_radius())
@settings(max_examples=300, deadline=None)
def test_fundamental_identity(kr):
    k, r = kr
    s = curved_sin(k, r)
    c = curved_cos(k, r)
    scale = max(1.0, c * c + abs(k) * s * s)
    assert abs(c * c + k * s * s - 1.0) < 1e-13 * scale


@given(kappa_and_radius())
@settings(max_examples=200, deadline=None)
def test_cot_tan_product(kr):
    k, r = kr
    try:
        t = curved_tan(k, r)
        y = curved_cot(k, r)
    except PoleError:
        return
    assert abs(t * y - 1.0) < 1e-12


@given(st.floats(-1.0, 1.0), st.floats(1e-3, 0.3))
@settings(max_examples=200, deadline=None)
def test_flat_continuity_taylor_bound(k, r):
    # |S_k(r) - r| <= |k| r^3 / 6 * (1 + eps) in the |k| r^2 <= 0.1 regime
    if abs(k) * r * r > 0.1:
        return
    bound = abs(k) * r**3 / 6.0 * (1.0 + abs(k) * r * r / 10.0) + 1e-15
    assert abs(curved_sin(k, r) - r) <= bound


@pytest.mark.parametrize("k", [0.7, 0.0, -0.7, 1e-9, -1e-9])
def test_derivative_of_sin_is_cos(k):
    # central difference converges to C_k with order h^2 (ratio ~4 on halving)
    r = 0.8
    errs = []
    for h in (1e-3, 5e-4):
        approx = (curved_sin(k, r + h) - curved_sin(k, r - h)) / (2 * h)
        errs.append(abs(approx - curved_cos(k, r)))
    if errs[0] > 1e-12:  # above rounding floor
        assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.1)


def test_series_switch_continuity():
    # values just below and above the series threshold agree closely
    r = 1.0
    for k in (9.9e-9, 1.01e-8, -9.9e-9, -1.01e-8):
        assert curved_sin(k, r) == pytest.approx(r * (1 - k * r**2 / 6), rel=1e-14)
