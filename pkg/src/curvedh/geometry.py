"""Curved trigonometry kernel for 3D spaces of constant curvature.

Provides the "curved" sine/cosine/tangent family S, C, T that unifies the
spherical (kappa > 0), euclidean (kappa = 0) and hyperbolic (kappa < 0)
geometries, plus the unit system used by the rest of the package.  All
functions are continuous in kappa at kappa = 0: below a small |kappa| r^2
threshold they switch to a Taylor series in kappa r^2 to avoid cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# |kappa| r^2 below this: evaluate by the 4-term Taylor series in kappa r^2.
SERIES_SWITCH = 1e-8

_ANTIPODE_SLACK = 1.0 + 1e-12


class DomainError(ValueError):
    """Radius outside the geometric domain for the given curvature."""


class PoleError(ValueError):
    """Evaluation at a pole of the curved tangent/cotangent."""


@dataclass(frozen=True)
class Curvature:
    """Signed curvature kappa (units 1/length^2, atomic-unit lengths)."""

    kappa: float

    def __post_init__(self):
        if not math.isfinite(self.kappa):
            raise ValueError(f"curvature must be finite, got {self.kappa}")

    @property
    def radius(self) -> float:
        """Curvature radius 1/sqrt(|kappa|); inf sentinel for flat space."""
        if self.kappa == 0.0:
            return math.inf
        return 1.0 / math.sqrt(abs(self.kappa))

    @property
    def antipode(self) -> float:
        """Domain end pi/sqrt(kappa) for kappa > 0, inf otherwise."""
        if self.kappa > 0.0:
            return math.pi / math.sqrt(self.kappa)
        return math.inf

    @property
    def is_spherical(self) -> bool:
        return self.kappa > 0.0

    @property
    def is_euclidean(self) -> bool:
        return self.kappa == 0.0

    @property
    def is_hyperbolic(self) -> bool:
        return self.kappa < 0.0


@dataclass(frozen=True)
class UnitScales:
    """Hydrogen length/energy scales.  Internal math is in atomic units
    (bohr_radius = 1, rydberg = 1/2 hartree); the SI constants are only used
    when converting inputs/outputs."""

    bohr_radius: float = 1.0
    rydberg: float = 0.5
    bohr_radius_m: float = 5.29177210903e-11
    rydberg_ev: float = 13.605693
    planck_length_m: float = 1.616255e-35

    @property
    def beta(self) -> float:
        """Coulomb coupling 2 m e^2 / hbar^2 = 2 / a1."""
        return 2.0 / self.bohr_radius

    @property
    def planck_length_ratio(self) -> float:
        """Planck length over Bohr radius (dimensionless)."""
        return self.planck_length_m / self.bohr_radius_m

    @property
    def hartree_ev(self) -> float:
        return 2.0 * self.rydberg_ev

    def lambda_from_energy(self, energy):
        """Eigenvalue parameter lambda = 2 m E / hbar^2 (atomic units)."""
        return 2.0 * energy / (2.0 * self.rydberg)

    def energy_from_lambda(self, lam):
        return lam * self.rydberg

    def energy_to_ev(self, energy_au):
        return energy_au * self.hartree_ev / 1.0


ATOMIC = UnitScales()


def _kappa_value(kappa) -> float:
    if isinstance(kappa, Curvature):
        return kappa.kappa
    return float(kappa)


def _check_domain(k: float, r):
    arr = np.asarray(r, dtype=float)
    if np.any(arr < 0.0):
        raise DomainError("radius must be non-negative")
    if k > 0.0:
        end = math.pi / math.sqrt(k)
        if np.any(arr > end * _ANTIPODE_SLACK):
            raise DomainError(f"radius beyond antipode {end} for kappa={k}")
    return arr


def curved_sin(kappa, r):
    """S_kappa(r): sin(sqrt(k) r)/sqrt(k), r, or sinh(sqrt(-k) r)/sqrt(-k)."""
    k = _kappa_value(kappa)
    arr = _check_domain(k, r)
    x = k * arr * arr
    small = np.abs(x) < SERIES_SWITCH
    out = np.empty_like(arr)
    xs = x[small]
    out[small] = arr[small] * (1.0 - xs / 6.0 * (1.0 - xs / 20.0 * (1.0 - xs / 42.0)))
    big = ~small
    if np.any(big):
        if k > 0.0:
            rk = math.sqrt(k)
            out[big] = np.sin(rk * arr[big]) / rk
        else:
            s = math.sqrt(-k)
            out[big] = np.sinh(s * arr[big]) / s
    if np.isscalar(r) or np.ndim(r) == 0:
        return float(out)
    return out


def curved_cos(kappa, r):
    """C_kappa(r): cos(sqrt(k) r), 1, or cosh(sqrt(-k) r).  S' = C."""
    k = _kappa_value(kappa)
    arr = _check_domain(k, r)
    x = k * arr * arr
    small = np.abs(x) < SERIES_SWITCH
    out = np.empty_like(arr)
    xs = x[small]
    out[small] = 1.0 - xs / 2.0 * (1.0 - xs / 12.0 * (1.0 - xs / 30.0))
    big = ~small
    if np.any(big):
        if k > 0.0:
            out[big] = np.cos(math.sqrt(k) * arr[big])
        else:
            out[big] = np.cosh(math.sqrt(-k) * arr[big])
    if np.isscalar(r) or np.ndim(r) == 0:
        return float(out)
    return out


def curved_tan(kappa, r):
    """T_kappa(r) = S/C; pole error where C vanishes (kappa > 0)."""
    k = _kappa_value(kappa)
    s = curved_sin(k, r)
    c = curved_cos(k, r)
    if np.any(np.abs(np.asarray(c)) < 1e-14):
        raise PoleError(f"curved tangent pole (C_kappa = 0) at r={r}")
    return s / c


def curved_cot(kappa, r):
    """y = 1/T_kappa(r) = C/S, the normal-form variable; pole at S = 0."""
    arr = np.asarray(r, dtype=float)
    if np.any(arr <= 0.0):
        raise PoleError("curved cotangent requires r > 0")
    s = curved_sin(kappa, r)
    c = curved_cos(kappa, r)
    if np.any(np.abs(np.asarray(s)) == 0.0):
        raise PoleError(f"curved cotangent pole (S_kappa = 0) at r={r}")
    return c / s


def volume_weight(kappa, r):
    """Radial measure S_kappa(r)^2 of the curved volume element."""
    s = curved_sin(kappa, r)
    return s * s
