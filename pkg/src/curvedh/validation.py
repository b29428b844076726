"""Cross-validation driver: closed-form spectrum and wavefunctions against
the finite-difference oracle, over a configurable curvature/level matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import analytic, oracle
from .geometry import ATOMIC, UnitScales, _kappa_value

DEFAULT_KAPPAS = (0.0, 1e-2, 1e-4, -1e-4, -1e-2)
EIGENVALUE_TOL = 1e-6
RESIDUAL_TOL = 1e-8


def admissible_levels(kappa, n_max, scales: UnitScales = ATOMIC):
    """Principal quantum numbers n <= n_max that are bound for this kappa."""
    out = []
    for n in range(1, n_max + 1):
        if analytic.bound_state_admissible(analytic.QuantumNumbers(n, 0), kappa, scales):
            out.append(n)
    return out


def channel_domain(kappa, levels, scales: UnitScales = ATOMIC):
    """(r_max, N) for one (kappa, l) oracle channel.  Hyperbolic tails only
    reach their asymptotic decay rate for r >> 1/(2 s), hence the 3/s pad."""
    k = _kappa_value(kappa)
    if k > 0.0:
        domain = math.pi / math.sqrt(k)
        return None, max(8000, int(domain * 80))
    lam_c = oracle.continuum_threshold(k, scales)
    deltas = [math.sqrt(lam_c - analytic.lambda_n(n, k, scales)) for n in levels]
    r_max = max(60.0, 6.0 * max(levels) ** 2, 14.0 / min(deltas))
    if k < 0.0:
        r_max += 3.0 / math.sqrt(-k)
    return r_max, max(8000, min(int(r_max * 80), 60000))


def run_validation(kappas=DEFAULT_KAPPAS, n_max=4, l_values=None,
                   grid_n=None, r_max=None, scales: UnitScales = ATOMIC,
                   residual_grid_n=20001):
    """Compare oracle eigenvalues (Richardson-extrapolated) and analytic
    wavefunction residuals for every admissible (kappa, n, l)."""
    records = []
    grid_meta = {}
    for kap in kappas:
        k = _kappa_value(kap)
        ns = admissible_levels(k, n_max, scales)
        if not ns:
            continue
        ls = l_values if l_values is not None else range(max(ns))
        for l in ls:
            levels = [n for n in ns if n > l]
            if not levels:
                continue
            rm, N = channel_domain(k, levels, scales)
            if r_max is not None:
                rm = r_max
            if grid_n is not None:
                N = grid_n
            lam1, lam2, rich = oracle.eigenvalues_extrapolated(k, l, len(levels), N, rm, scales)
            grid_meta[(k, l)] = {"n_points": N, "r_max": rm}
            for idx, n in enumerate(levels):
                qn = analytic.QuantumNumbers(n, l)
                lam_exact = analytic.lambda_n(n, k, scales)
                rel = abs(rich[idx] - lam_exact) / abs(lam_exact)
                table = _residual_table(qn, k, rm, scales, residual_grid_n)
                resid = oracle.residual_of_table(table, scales)
                records.append(oracle.LevelRecord(
                    kappa=k, n=n, l=l,
                    lambda_analytic=lam_exact,
                    lambda_numeric=float(rich[idx]),
                    relative_error=float(rel),
                    node_count=table.node_count,
                    analytic_residual=float(resid)))
    report = oracle.SpectralReport(
        records=records,
        grid_meta={f"kappa={k},l={l}": v for (k, l), v in grid_meta.items()},
        extrapolation_meta={"scheme": "richardson", "order": 2,
                            "bisect_tol": oracle.BISECT_TOL})
    return report


def _residual_table(qn, kappa, r_max, scales, num):
    if kappa > 0.0:
        end = math.pi / math.sqrt(kappa)
    else:
        end = min(r_max if r_max else 60.0, max(20.0, 3.0 * qn.n**2) * 4.0)
    # keep h small enough for the O(h^4) residual stencil to resolve 1e-8
    num = max(num, int(end / 0.004) + 1)
    grid = np.linspace(0.0, end, num)
    return analytic.radial_wavefunction(qn, kappa, scales, grid)


def convergence_order(kappa=0.0, l=0, n_level=1, N=1500, r_max=60.0,
                      scales: UnitScales = ATOMIC):
    """Measured eigenvalue-error ratio between grids h and h/2 (should be
    about 4 for the second-order scheme)."""
    lam_exact = analytic.lambda_n(n_level, kappa, scales)
    lam1, lam2, _ = oracle.eigenvalues_extrapolated(kappa, l, n_level - l, N, r_max, scales)
    e1 = abs(lam1[n_level - l - 1] - lam_exact)
    e2 = abs(lam2[n_level - l - 1] - lam_exact)
    return e1 / e2
