"""Minimal-length (generalized-uncertainty) spectral corrections and the
order-of-magnitude comparisons between the minimal-length and curvature
effects.

Everything is computed dimensionless-first (ratios L/a1 and kappa*a1^2)
before multiplying by the Rydberg energy, so magnitudes down to 1e-71 stay
well inside double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import ATOMIC, UnitScales, _kappa_value
from .analytic import lambda_n, QuantumNumbers


class CrossoverError(RuntimeError):
    """One effect dominates the other over the whole searched n range."""


@dataclass(frozen=True)
class MinimalLength:
    """Deformation length scale, stored as the dimensionless ratio L/a1."""

    ratio: float  # L / a1

    def __post_init__(self):
        if self.ratio < 0.0:
            raise ValueError("minimal length must be non-negative")

    @classmethod
    def planck(cls, scales: UnitScales = ATOMIC) -> "MinimalLength":
        return cls(ratio=scales.planck_length_ratio)

    def meters(self, scales: UnitScales = ATOMIC) -> float:
        return self.ratio * scales.bohr_radius_m


@dataclass(frozen=True)
class CorrectedLevel:
    qn: QuantumNumbers
    kappa: float
    base_energy: float
    ml_shift: float
    curvature_term: float

    @property
    def total(self) -> float:
        return self.base_energy + self.ml_shift + self.curvature_term


def ml_shift(qn: QuantumNumbers, length_ratio: float, scales: UnitScales = ATOMIC) -> float:
    """First-order minimal-length energy shift
    B * 4 (L/a1)^2 (4n - 3(l + 1/2)) / (n^4 (l + 1/2)); always positive."""
    n, l = qn.n, qn.l
    B = scales.rydberg
    x2 = length_ratio * length_ratio
    return B * 4.0 * x2 * (4.0 * n - 3.0 * (l + 0.5)) / (n**4 * (l + 0.5))


def relative_shift_s(n: int, length_ratio: float) -> float:
    """Relative shift of the l = 0 levels: -4 (L/a1)^2 (8n - 3) / n^2
    (the intra-multiplet maximum; -20 (L/a1)^2 for the ground state).

    Evaluated through ml_shift so the identity
    relative_shift_s(n) == -ml_shift(n, 0) * n^2 / B holds bitwise.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    B = ATOMIC.rydberg
    return -ml_shift(QuantumNumbers(n, 0), length_ratio, ATOMIC) * n * n / B


def combined_level(qn: QuantumNumbers, kappa, length_ratio: float,
                   scales: UnitScales = ATOMIC) -> CorrectedLevel:
    """Level with flat Coulomb term, minimal-length shift and curvature term
    displayed separately; total is their exact algebraic sum."""
    k = _kappa_value(kappa)
    n = qn.n
    B = scales.rydberg
    a1 = scales.bohr_radius
    base = -B / (n * n)
    curv = B * k * a1 * a1 * (n * n - 1.0)
    return CorrectedLevel(qn=qn, kappa=k, base_energy=base,
                          ml_shift=ml_shift(qn, length_ratio, scales),
                          curvature_term=curv)


def planck_Q(scales: UnitScales = ATOMIC) -> float:
    """Relative ground-state effect for a Planck-length deformation:
    -20 (L_P/a1)^2 (approximately -2e-48 for the reference constants)."""
    x = scales.planck_length_ratio
    return -20.0 * x * x


def length_bound_from_precision(precision_ev: float, scales: UnitScales = ATOMIC) -> float:
    """Minimal length (meters) at which the 1S-2S shift difference equals
    the given energy precision: L/a1 = sqrt(dE / (16.75 B))."""
    if precision_ev < 0.0:
        raise ValueError("precision must be non-negative")
    # 16.75 = 20 - 13/4, the (1,0) minus (2,0) shift coefficients
    ratio = math.sqrt(precision_ev / (16.75 * scales.rydberg_ev))
    return ratio * scales.bohr_radius_m


def relative_curvature_effect(n: int, kappa, scales: UnitScales = ATOMIC) -> float:
    """|curvature term| / |flat term| = |kappa| a1^2 (n^2 - 1) n^2."""
    k = _kappa_value(kappa)
    a1 = scales.bohr_radius
    return abs(k) * a1 * a1 * (n * n - 1.0) * n * n


def relative_ml_effect(n: int, length_ratio: float) -> float:
    """|minimal-length term| / |flat term| = 4 (L/a1)^2 (8n - 3) / n^2 at l=0."""
    return abs(relative_shift_s(n, length_ratio))


def crossover_level(kappa, length_ratio: float, scales: UnitScales = ATOMIC,
                    n_hi: float = 1e20) -> float:
    """Real n* where the curvature and minimal-length relative effects are
    equal, by monotone bisection on their (log) ratio over [1, n_hi]."""
    k = _kappa_value(kappa)
    if k == 0.0 or length_ratio <= 0.0:
        raise ValueError("crossover needs kappa != 0 and a positive minimal length")

    def imbalance(n):
        return relative_curvature_effect(n, k, scales) - relative_ml_effect(n, length_ratio)

    lo, hi = 1.0 + 1e-9, n_hi
    f_lo, f_hi = imbalance(lo), imbalance(hi)
    if f_lo == 0.0:
        return lo
    if f_lo * f_hi > 0.0:
        raise CrossoverError(
            f"one effect dominates over n in [1, {n_hi:g}] for kappa={k}, "
            f"L/a1={length_ratio}")
    for _ in range(200):
        mid = math.sqrt(lo * hi)
        f_mid = imbalance(mid)
        if f_mid == 0.0:
            return mid
        if f_lo * f_mid < 0.0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
        if hi / lo < 1.0 + 1e-14:
            break
    return math.sqrt(lo * hi)
