"""Closed-form curved-space hydrogen: spectrum, hypergeometric parameter
assembly and radial wavefunctions.

The quantized eigenvalue parameter is

    lambda_n = -beta^2 / (4 n^2) + (n^2 - 1) kappa,

and the radial function is the product S_kappa^l * exp(-sqrt(-kappa) r
(l + 2 q)) * 2F1(-m, b; 2l+2; z(r)) with z(r) = 1 - exp(-2 sqrt(-kappa) r),
equivalently a Jacobi polynomial with a non-classical second parameter.
The square roots entering (omega_+, omega_-, q) are branch-ambiguous; the
branch is fixed by enumerating the finite candidate set, keeping candidates
that terminate the hypergeometric series (a = -m) and decay at infinity,
and certifying the survivor by its radial-equation residual on a probe
grid.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.integrate import simpson

from . import oracle
from .geometry import ATOMIC, UnitScales, _kappa_value, curved_sin, volume_weight
from .specfun import laguerre_poly

# |kappa| a1^2 below this routes to the flat (Laguerre) formulas.
FLAT_SWITCH = 1e-12

_PROBE_POINTS = 64


class BranchError(RuntimeError):
    """No admissible hypergeometric branch: non-normalizable level."""


class PhaseError(RuntimeError):
    """Residual imaginary part after constant-phase removal too large."""


@dataclass(frozen=True)
class QuantumNumbers:
    """(n, l, m) with n = l + m + 1; m may be omitted and is derived."""

    n: int
    l: int
    m: Optional[int] = None

    def __post_init__(self):
        if self.n < 1 or not (0 <= self.l <= self.n - 1):
            raise ValueError(f"invalid quantum numbers n={self.n}, l={self.l}")
        if self.m is None:
            object.__setattr__(self, "m", self.n - self.l - 1)
        elif self.n != self.l + self.m + 1:
            raise ValueError(
                f"inconsistent triple (n={self.n}, l={self.l}, m={self.m})")


@dataclass(frozen=True)
class EnergyLevel:
    qn: QuantumNumbers
    kappa: float
    lam: float
    energy: float
    bound: bool


@dataclass(frozen=True)
class HypergeometricData:
    qn: QuantumNumbers
    kappa: float
    lam: float
    omega_plus: complex
    omega_minus: complex
    q_plus: complex
    a: complex
    b: complex
    c: float
    jacobi_nu: complex
    exponent_coeff: complex
    sqrt_minus_kappa: complex
    branch_tag: str
    probe_residual: float


@dataclass
class RadialFunctionTable:
    grid: np.ndarray
    values: np.ndarray
    qn: QuantumNumbers
    kappa: float
    lam: float
    norm: float

    @property
    def node_count(self) -> int:
        return oracle.node_count(self.values)


def lambda_n(n, kappa, scales: UnitScales = ATOMIC) -> float:
    """Quantized eigenvalue parameter -beta^2/(4n^2) + (n^2 - 1) kappa."""
    if n < 1:
        raise ValueError("principal quantum number must be >= 1")
    k = _kappa_value(kappa)
    beta = scales.beta
    return -beta * beta / (4.0 * n * n) + (n * n - 1.0) * k


def energy_n(n, kappa, scales: UnitScales = ATOMIC) -> float:
    return scales.energy_from_lambda(lambda_n(n, kappa, scales))


def energy_level(qn: QuantumNumbers, kappa, scales: UnitScales = ATOMIC) -> EnergyLevel:
    k = _kappa_value(kappa)
    lam = lambda_n(qn.n, k, scales)
    return EnergyLevel(qn=qn, kappa=k, lam=lam,
                       energy=scales.energy_from_lambda(lam),
                       bound=bound_state_admissible(qn, k, scales))


def transition_level(kappa, scales: UnitScales = ATOMIC) -> float:
    """Real root n* of n^2 (n^2 - 1) = (R/a1)^2, where the spherical
    spectrum crosses E = 0; asymptotically sqrt(R/a1)."""
    k = _kappa_value(kappa)
    if k <= 0.0:
        raise ValueError("transition level is defined for kappa > 0")
    rho = 1.0 / (math.sqrt(k) * scales.bohr_radius)
    return math.sqrt(0.5 * (1.0 + math.sqrt(1.0 + 4.0 * rho * rho)))


def bound_state_admissible(qn: QuantumNumbers, kappa, scales: UnitScales = ATOMIC) -> bool:
    """kappa >= 0: always bound.  kappa < 0: bound iff n^2 < R/a1 (strict);
    the cutoff is certified against the numeric bound-state count."""
    k = _kappa_value(kappa)
    if k >= 0.0:
        return True
    ratio = 1.0 / (math.sqrt(-k) * scales.bohr_radius)
    return qn.n * qn.n < ratio


def mobius_argument(kappa, r):
    """z(r) = 2 sqrt(-kappa) S_kappa(r) exp(-sqrt(-kappa) r), evaluated in
    the overflow-safe equivalent form 1 - exp(-2 sqrt(-kappa) r)."""
    k = _kappa_value(kappa)
    sigma = cmath.sqrt(complex(-k, 0.0))
    r_arr = np.asarray(r, dtype=float)
    z = 1.0 - np.exp(-2.0 * sigma * r_arr)
    if np.ndim(r) == 0:
        return complex(z)
    return z


def hypergeometric_data(qn: QuantumNumbers, kappa, scales: UnitScales = ATOMIC) -> HypergeometricData:
    """Hypergeometric parameters for one level, with the branch fixed by
    enumeration + probe-grid residual minimization."""
    k = _kappa_value(kappa)
    if abs(k) < FLAT_SWITCH:
        raise ValueError("flat-space levels use the Laguerre route, not "
                         "hypergeometric_data")
    if not bound_state_admissible(qn, k, scales):
        raise BranchError(f"level n={qn.n} not bound for kappa={k}")
    n, l, m = qn.n, qn.l, qn.m
    beta = scales.beta
    lam = lambda_n(n, k, scales)
    sigma = cmath.sqrt(complex(-k, 0.0))
    w_plus_sq = (k + lam + beta * sigma) / k
    w_minus_sq = (k + lam - beta * sigma) / k
    root_p = cmath.sqrt(w_plus_sq)
    root_m = cmath.sqrt(w_minus_sq)

    tol = 1e-6 * max(1.0, abs(root_p), abs(root_m))
    candidates = []
    for sp in (+1, -1):
        for sm in (+1, -1):
            wp = sp * root_p
            wm = sm * root_m
            a = l + 1 + (wp - wm) / 2.0
            if abs(a + m) > tol:
                continue
            q = (1.0 + wp) / 2.0
            coeff = sigma * (l + 2.0 * q)
            if k < 0.0 and coeff.real <= 0.0:
                continue  # grows at infinity
            b = l + 1 + (wp + wm) / 2.0
            candidates.append((sp, sm, wp, wm, q, b, coeff))
    if not candidates:
        raise BranchError(
            f"no admissible branch for n={n}, l={l}, kappa={k}: "
            "non-normalizable level")

    best = None
    for sp, sm, wp, wm, q, b, coeff in candidates:
        resid = _probe_residual(n, l, m, k, lam, sigma, coeff, b, scales)
        penalty = 1 if wm.real < 0.0 else 0  # tie-break toward Re(omega_-) >= 0
        key = (resid, penalty)
        if best is None or key < best[0]:
            best = (key, sp, sm, wp, wm, q, b, coeff, resid)
    _, sp, sm, wp, wm, q, b, coeff, resid = best
    return HypergeometricData(
        qn=qn, kappa=k, lam=lam,
        omega_plus=wp, omega_minus=wm, q_plus=q,
        a=complex(-m), b=b, c=float(2 * l + 2),
        jacobi_nu=-n + (wm + wp) / 2.0,
        exponent_coeff=coeff, sqrt_minus_kappa=sigma,
        branch_tag=f"omega+:{'+' if sp > 0 else '-'},omega-:{'+' if sm > 0 else '-'}",
        probe_residual=resid)


def _raw_values(m, l, kappa, sigma, coeff, b, grid):
    """Complex, unnormalized product S^l * exp(-coeff r) * 2F1(-m, b; 2l+2; z)."""
    r = np.asarray(grid, dtype=float)
    z = 1.0 - np.exp(-2.0 * sigma * r)
    # terminating 2F1 accumulated term by term over the whole grid
    acc = np.ones_like(z)
    term = np.ones_like(z)
    c = 2 * l + 2
    for j in range(m):
        term = term * ((-m + j) * (b + j) / ((c + j) * (1.0 + j))) * z
        acc = acc + term
    s = curved_sin(kappa, r)
    return (s.astype(complex) ** l) * np.exp(-coeff * r) * acc


def _probe_residual(n, l, m, kappa, lam, sigma, coeff, b, scales):
    if kappa > 0.0:
        r_end = math.pi / math.sqrt(kappa)
    else:
        r_end = max(20.0, 3.0 * n * n) * scales.bohr_radius
    grid = np.linspace(0.0, r_end, _PROBE_POINTS)
    v = _raw_values(m, l, kappa, sigma, coeff, b, grid)
    v = _remove_phase(v)
    g = np.real(v)
    if np.max(np.abs(g)) == 0.0:
        return math.inf
    try:
        return oracle.ode_residual(kappa, l, lam, grid[1:], g[1:], scales, margin=2)
    except (ValueError, FloatingPointError):
        return math.inf


def _remove_phase(v):
    idx = int(np.argmax(np.abs(v)))
    peak = v[idx]
    if peak == 0.0:
        return v
    return v * (abs(peak) / peak)


def default_grid(qn: QuantumNumbers, kappa, scales: UnitScales = ATOMIC,
                 num: int = 4001) -> np.ndarray:
    """Uniform grid over [0, r_max]: the full domain for kappa > 0, else
    max(20, 3 n^2) Bohr radii (covers the classical turning region)."""
    k = _kappa_value(kappa)
    if k > 0.0:
        r_max = math.pi / math.sqrt(k)
    else:
        r_max = max(20.0, 3.0 * qn.n * qn.n) * scales.bohr_radius
    return np.linspace(0.0, r_max, num)


def radial_wavefunction(qn: QuantumNumbers, kappa, scales: UnitScales = ATOMIC,
                        grid: Optional[np.ndarray] = None) -> RadialFunctionTable:
    """Normalized radial wavefunction G on the grid; kappa is dispatched to
    the flat Laguerre route below the FLAT_SWITCH threshold."""
    k = _kappa_value(kappa)
    if abs(k) < FLAT_SWITCH:
        return radial_wavefunction_flat(qn, scales, grid)
    if grid is None:
        grid = default_grid(qn, k, scales)
    hd = hypergeometric_data(qn, k, scales)
    v = _raw_values(qn.m, qn.l, k, hd.sqrt_minus_kappa, hd.exponent_coeff,
                    hd.b, grid)
    v = _remove_phase(v)
    re = np.real(v)
    im_frac = np.max(np.abs(np.imag(v))) / max(np.max(np.abs(re)), 1e-300)
    if im_frac > 1e-8:
        raise PhaseError(
            f"imaginary residue {im_frac:.3e} after phase removal for "
            f"n={qn.n}, l={qn.l}, kappa={k} (wrong branch?)")
    return _finalize_table(grid, re, qn, k, hd.lam)


def radial_wavefunction_flat(qn: QuantumNumbers, scales: UnitScales = ATOMIC,
                             grid: Optional[np.ndarray] = None) -> RadialFunctionTable:
    """Flat-space route: G ~ r^l exp(-beta r / 2n) L_m^(2l+1)(beta r / n)."""
    if grid is None:
        grid = default_grid(qn, 0.0, scales)
    r = np.asarray(grid, dtype=float)
    n, l, m = qn.n, qn.l, qn.m
    kappa0 = scales.beta / (2.0 * n)  # sqrt(-lambda_0)
    g = r**l * np.exp(-kappa0 * r) * laguerre_poly(m, 2 * l + 1, 2.0 * kappa0 * r)
    lam0 = lambda_n(n, 0.0, scales)
    return _finalize_table(r, g, qn, 0.0, lam0)


def _finalize_table(grid, values, qn, kappa, lam) -> RadialFunctionTable:
    g = np.asarray(values, dtype=float)
    # sign convention: leading small-r coefficient positive
    lead = g[np.argmax(np.abs(g) > 1e-8 * np.max(np.abs(g)))]
    if lead < 0.0:
        g = -g
    w = volume_weight(kappa, grid)
    norm_sq = simpson(g * g * w, x=grid)
    if norm_sq <= 0.0:
        raise ValueError("wavefunction norm vanished")
    norm = math.sqrt(norm_sq)
    return RadialFunctionTable(grid=np.asarray(grid, dtype=float), values=g / norm,
                               qn=qn, kappa=kappa, lam=lam, norm=norm)


def flat_limit_gap(qn: QuantumNumbers, kappas, scales: UnitScales = ATOMIC,
                   grid: Optional[np.ndarray] = None):
    """Sup-norm gap between the curved and flat normalized wavefunctions on
    a common grid, one entry per kappa (O(kappa) as kappa -> 0)."""
    if grid is None:
        grid = default_grid(qn, 0.0, scales)
    flat = radial_wavefunction_flat(qn, scales, grid)
    gaps = []
    for k in kappas:
        kv = _kappa_value(k)
        if kv > 0.0 and math.pi / math.sqrt(kv) < float(grid[-1]):
            raise ValueError(f"grid extends beyond the antipode for kappa={kv}")
        curved = radial_wavefunction(qn, kv, scales, grid)
        gaps.append(float(np.max(np.abs(curved.values - flat.values))))
    return gaps
