"""Independent numerical eigensolver for the curved radial problem.

The radial equation is brought to normal form u = S_kappa * G (which removes
the first-derivative term; S''/S = -kappa folds the curvature shift into the
diagonal so the reported eigenvalues are directly the lambda of the radial
equation).  The operator is discretized as a symmetric tridiagonal matrix on
a uniform grid excluding the singular endpoints; eigenvalues come from
bisection on Sturm-sequence counts, eigenfunctions from inverse iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numba import njit
from scipy.linalg import solve_banded

from .geometry import ATOMIC, Curvature, UnitScales, _kappa_value, curved_cot, curved_cos, curved_sin

BISECT_TOL = 1e-12


class NonConvergenceError(RuntimeError):
    """Iterative stage failed to stabilize."""


def potential(kappa, r, scales: UnitScales = ATOMIC):
    """Scaled Kepler-Coulomb potential U_kappa = -beta / T_kappa(r)."""
    return -scales.beta * curved_cot(kappa, r)


@dataclass
class Discretization:
    """Symmetric tridiagonal normal-form operator on a uniform open grid."""

    kappa: float
    l: int
    n_points: int
    h: float
    r_min: float
    r_max: float
    diag: np.ndarray
    offdiag: float
    lambda_c: float
    scales: UnitScales = field(default=ATOMIC, repr=False)

    @property
    def grid(self) -> np.ndarray:
        return self.r_min + self.h * np.arange(1, self.n_points + 1)

    def gershgorin(self):
        lo = float(np.min(self.diag)) - 2.0 * abs(self.offdiag)
        hi = float(np.max(self.diag)) + 2.0 * abs(self.offdiag)
        return lo, hi


def continuum_threshold(kappa, scales: UnitScales = ATOMIC) -> float:
    """Bottom of the essential spectrum: s^2 - beta*s for kappa < 0, 0 for
    flat space, +inf for the (fully discrete) spherical case."""
    k = _kappa_value(kappa)
    if k < 0.0:
        s = math.sqrt(-k)
        return s * s - scales.beta * s
    if k == 0.0:
        return 0.0
    return math.inf


def build(kappa, l, n, r_max=None, scales: UnitScales = ATOMIC, r_min=0.0) -> Discretization:
    """Interior-point 3-point discretization with Dirichlet values at both
    ends (u ~ r^(l+1) forces u(0) = 0; for kappa > 0 u also vanishes at the
    antipode)."""
    k = _kappa_value(kappa)
    if n < 4:
        raise ValueError(f"need at least 4 grid points, got {n}")
    end = r_max
    if k > 0.0:
        antipode = math.pi / math.sqrt(k)
        end = antipode if end is None else min(end, antipode)
    if end is None or not (end > r_min >= 0.0):
        raise ValueError(f"invalid domain [{r_min}, {end}] for kappa={k}")
    h = (end - r_min) / (n + 1)
    r = r_min + h * np.arange(1, n + 1)
    s2 = curved_sin(k, r) ** 2
    diag = 2.0 / h**2 + l * (l + 1) / s2 + potential(k, r, scales) - k
    return Discretization(kappa=k, l=l, n_points=n, h=h, r_min=r_min,
                          r_max=end, diag=diag, offdiag=-1.0 / h**2,
                          lambda_c=continuum_threshold(k, scales), scales=scales)


@njit(cache=True)
def _sturm_kernel(diag, e2, lam):
    count = 0
    q = diag[0] - lam
    if q == 0.0:
        q = -1e-300
    if q < 0.0:
        count += 1
    for i in range(1, diag.shape[0]):
        q = (diag[i] - lam) - e2 / q
        if q == 0.0:
            q = -1e-300
        if q < 0.0:
            count += 1
    return count


def sturm_count(d: Discretization, lam: float) -> int:
    """Number of eigenvalues of the operator strictly below lam."""
    return int(_sturm_kernel(d.diag, d.offdiag * d.offdiag, float(lam)))


def eigenvalues(d: Discretization, k: int) -> np.ndarray:
    """The k lowest eigenvalues, each bracketed by bisection on the Sturm
    count to absolute tolerance BISECT_TOL."""
    if k > d.n_points:
        raise ValueError(f"requested {k} eigenvalues from an {d.n_points}-point operator")
    lo0, hi0 = d.gershgorin()
    out = np.empty(k)
    for j in range(1, k + 1):
        lo, hi = lo0, hi0
        while hi - lo > BISECT_TOL:
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break  # float spacing limit
            if sturm_count(d, mid) >= j:
                hi = mid
            else:
                lo = mid
        out[j - 1] = 0.5 * (lo + hi)
    return out


def richardson(lam_h, lam_h2):
    """Second-order Richardson extrapolation (4*lam(h/2) - lam(h)) / 3."""
    return (4.0 * np.asarray(lam_h2) - np.asarray(lam_h)) / 3.0


def eigenvalues_extrapolated(kappa, l, k, n, r_max=None, scales: UnitScales = ATOMIC):
    """Eigenvalues on grids h and h/2 over the same domain, plus the
    Richardson-extrapolated values.  Returns (lam_h, lam_h2, lam_rich)."""
    d1 = build(kappa, l, n, r_max, scales)
    d2 = build(kappa, l, 2 * n + 1, r_max, scales)
    lam1 = eigenvalues(d1, k)
    lam2 = eigenvalues(d2, k)
    return lam1, lam2, richardson(lam1, lam2)


def eigenfunction(d: Discretization, lam: float, max_iter: int = 8) -> np.ndarray:
    """Normal-form eigenfunction u by inverse iteration with shift lam,
    normalized to h * sum(u^2) = 1 with positive leading sign."""
    n = d.n_points
    shift = lam + 1e-9 * max(1.0, abs(lam))
    ab = np.zeros((3, n))
    ab[0, 1:] = d.offdiag
    ab[1, :] = d.diag - shift
    ab[2, :-1] = d.offdiag
    rng = np.random.default_rng(12345)
    u = rng.standard_normal(n)
    u /= np.linalg.norm(u)
    prev_res = math.inf
    for it in range(max_iter):
        u = solve_banded((1, 1), ab, u)
        u /= np.linalg.norm(u)
        au = d.diag * u
        au[:-1] += d.offdiag * u[1:]
        au[1:] += d.offdiag * u[:-1]
        res = np.linalg.norm(au - lam * u)
        if it >= 1 and (res < 1e-8 * max(1.0, abs(lam)) or res >= prev_res):
            break
        prev_res = res
    else:
        raise NonConvergenceError(f"inverse iteration did not settle at lam={lam}")
    u /= math.sqrt(d.h * float(np.dot(u, u)))
    i0 = np.argmax(np.abs(u) > 1e-3 * np.max(np.abs(u)))
    if u[i0] < 0.0:
        u = -u
    return u


def node_count(values, rel_floor: float = 1e-7) -> int:
    """Interior sign changes, ignoring sub-floor numerical dust."""
    v = np.asarray(values, dtype=float)
    big = v[np.abs(v) > rel_floor * np.max(np.abs(v))]
    return int(np.sum(np.sign(big[1:]) * np.sign(big[:-1]) < 0))


def ode_residual(kappa, l, lam, grid, values, scales: UnitScales = ATOMIC,
                 margin: int = 3) -> float:
    """Max scaled residual of the radial equation applied to sampled G.

    Fourth-order central stencils on the (uniform) grid; points within
    `margin` of either end are excluded.  The local scale folds in the
    potential and centrifugal magnitudes so the 1/r and antipodal walls do
    not inflate the report.
    """
    r = np.asarray(grid, dtype=float)
    g = np.asarray(values, dtype=float)
    if r.size < 2 * margin + 9:
        raise ValueError("grid too short for the residual stencil")
    h = r[1] - r[0]
    if not np.allclose(np.diff(r), h, rtol=1e-9, atol=1e-12 * h):
        raise ValueError("residual needs a uniform grid")
    lo = max(2, margin)
    hi = r.size - max(2, margin)
    i = np.arange(lo, hi)
    # O(h^4) first and second derivatives.
    d1 = (g[i - 2] - 8.0 * g[i - 1] + 8.0 * g[i + 1] - g[i + 2]) / (12.0 * h)
    d2 = (-g[i - 2] + 16.0 * g[i - 1] - 30.0 * g[i] + 16.0 * g[i + 1] - g[i + 2]) / (12.0 * h * h)
    ri = r[i]
    if ri[0] <= 0.0:
        raise ValueError("residual grid must exclude r = 0")
    s = curved_sin(kappa, ri)
    c = curved_cos(kappa, ri)
    u = potential(kappa, ri, scales)
    cf = l * (l + 1) / s**2
    resid = -d2 - 2.0 * (c / s) * d1 + (cf + u - lam) * g[i]
    gmax = np.max(np.abs(g))
    scale = gmax * (abs(lam) + np.abs(u) + cf + scales.beta / ri)
    return float(np.max(np.abs(resid) / scale))


def residual_of_table(table, scales: UnitScales = ATOMIC, margin: int = 3) -> float:
    """Residual of a sampled radial wavefunction table."""
    lam = table.lam
    return ode_residual(table.kappa, table.qn.l, lam, table.grid, table.values,
                        scales, margin)


def count_bound_states(kappa, l, scales: UnitScales = ATOMIC,
                       r0: float = 60.0, n0: int = 6000,
                       max_doublings: int = 8) -> int:
    """Discrete-spectrum count below the continuum threshold for kappa < 0,
    grown in r_max until stable for two consecutive doublings."""
    k = _kappa_value(kappa)
    if k >= 0.0:
        raise ValueError("bound-state counting applies to hyperbolic space only")
    lam_c = continuum_threshold(k, scales)
    probe = lam_c - 1e-9
    r_max = r0
    counts = []
    for _ in range(max_doublings + 1):
        n = max(n0, int(r_max * 60))
        d = build(k, l, n, r_max, scales)
        counts.append(sturm_count(d, probe))
        if len(counts) >= 3 and counts[-1] == counts[-2] == counts[-3]:
            return counts[-1]
        r_max *= 2.0
    raise NonConvergenceError(
        f"bound-state count did not stabilize (kappa={k}, l={l}, counts={counts})")


@dataclass
class LevelRecord:
    kappa: float
    n: int
    l: int
    lambda_analytic: float
    lambda_numeric: float
    relative_error: float
    node_count: int
    analytic_residual: float


@dataclass
class SpectralReport:
    """Analytic-vs-numeric comparison over a curvature/level matrix."""

    records: list
    grid_meta: dict
    extrapolation_meta: dict

    @property
    def max_relative_error(self) -> float:
        return max((rec.relative_error for rec in self.records), default=0.0)

    @property
    def max_residual(self) -> float:
        return max((rec.analytic_residual for rec in self.records), default=0.0)
