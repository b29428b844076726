"""Orthogonal-polynomial and terminating-hypergeometric kernel.

Everything here is a finite object: Jacobi and associated Laguerre
polynomials by three-term recurrence, and 2F1/1F1 with a negative-integer
first parameter evaluated as exact finite sums.  Jacobi parameters may be
complex (the spherical case needs this); recurrences are used instead of
gamma-function closed forms because the curved-space parameters sit outside
the classical range where those have poles.
"""

from __future__ import annotations

import numpy as np

_OVERFLOW = 1e290
_DEGENERATE = 1e-12


class SpecfunOverflowError(OverflowError):
    """Intermediate polynomial value left the representable range."""


class ParameterError(ValueError):
    """Hypergeometric lower parameter hit a zero denominator."""


def _check_degree(m):
    if m < 0 or m != int(m):
        raise ValueError(f"degree must be a non-negative integer, got {m}")
    return int(m)


def jacobi_poly(m, alpha, nu, x):
    """P_m^(alpha, nu)(x) for arbitrary complex parameters and argument.

    Uses the standard three-term recurrence; if a leading recurrence
    coefficient degenerates (possible for non-classical parameters) the
    explicit finite-sum definition is used instead.
    """
    m = _check_degree(m)
    alpha = complex(alpha)
    nu = complex(nu)
    x = np.asarray(x, dtype=complex)
    if m == 0:
        p = np.ones_like(x)
        return complex(p) if p.ndim == 0 else p
    ab = alpha + nu
    p_prev = np.ones_like(x)
    p = (alpha + 1.0) + (ab + 2.0) * (x - 1.0) / 2.0
    for j in range(2, m + 1):
        c0 = 2.0 * j * (j + ab) * (2.0 * j + ab - 2.0)
        if abs(c0) < _DEGENERATE:
            return _jacobi_series(m, alpha, nu, x)
        c1 = (2.0 * j + ab - 1.0) * (ab * (alpha - nu))
        c2 = (2.0 * j + ab - 1.0) * (2.0 * j + ab) * (2.0 * j + ab - 2.0)
        c3 = 2.0 * (j + alpha - 1.0) * (j + nu - 1.0) * (2.0 * j + ab)
        p, p_prev = ((c1 + c2 * x) * p - c3 * p_prev) / c0, p
        mx = np.max(np.abs(p))
        if not np.isfinite(mx) or mx > _OVERFLOW:
            raise SpecfunOverflowError(
                f"jacobi recurrence overflow at degree {j} "
                f"(m={m}, alpha={alpha}, nu={nu})")
    return complex(p) if p.ndim == 0 else p


def _jacobi_series(m, alpha, nu, x):
    # Finite-sum definition; valid for every complex (alpha, nu).
    acc = np.zeros_like(np.asarray(x, dtype=complex))
    for j in range(m + 1):
        term = _gen_binom(m + alpha, m - j) * _gen_binom(m + nu, j)
        acc = acc + term * ((x - 1.0) / 2.0) ** j * ((x + 1.0) / 2.0) ** (m - j)
    return complex(acc) if acc.ndim == 0 else acc


def _gen_binom(a, k):
    """binom(a, k) for complex a and integer k >= 0, as a product."""
    out = 1.0 + 0.0j
    for i in range(int(k)):
        out *= (a - i) / (k - i)
    return out


def jacobi_poly_real(m, alpha, nu, x):
    """Real wrapper: asserts the imaginary part vanishes."""
    val = jacobi_poly(m, alpha, nu, x)
    im = np.max(np.abs(np.imag(np.asarray(val))))
    scale = max(np.max(np.abs(np.asarray(val))), 1.0)
    if im > 1e-10 * scale:
        raise ValueError(f"jacobi value not real: imag fraction {im / scale}")
    return np.real(val)


def laguerre_poly(m, alpha, x):
    """Associated Laguerre polynomial L_m^alpha(x) by recurrence."""
    m = _check_degree(m)
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if m == 0:
        return float(p_prev) if p_prev.ndim == 0 else p_prev
    p = 1.0 + alpha - x
    for j in range(1, m):
        p, p_prev = ((2.0 * j + 1.0 + alpha - x) * p - (j + alpha) * p_prev) / (j + 1.0), p
        mx = np.max(np.abs(p))
        if not np.isfinite(mx) or mx > _OVERFLOW:
            raise SpecfunOverflowError(
                f"laguerre recurrence overflow at degree {j + 1} (m={m}, alpha={alpha})")
    return float(p) if p.ndim == 0 else p


def gauss2f1_terminating(m, b, c, z):
    """2F1(-m, b; c; z) as the exact (m+1)-term sum; complex capable."""
    m = _check_degree(m)
    b = complex(b)
    c = complex(c)
    z = np.asarray(z, dtype=complex)
    acc = np.ones_like(z)
    term = np.ones_like(z)
    for j in range(m):
        denom = (c + j) * (1.0 + j)
        if abs(c + j) < _DEGENERATE:
            raise ParameterError(f"2F1 lower parameter c={c} hits zero at term {j + 1}")
        term = term * ((-m + j) * (b + j) / denom) * z
        acc = acc + term
    return complex(acc) if acc.ndim == 0 else acc


def kummer1f1_terminating(m, c, z):
    """1F1(-m; c; z) as the exact (m+1)-term sum (real)."""
    m = _check_degree(m)
    c = float(c)
    z = np.asarray(z, dtype=float)
    acc = np.ones_like(z)
    term = np.ones_like(z)
    for j in range(m):
        if abs(c + j) < _DEGENERATE:
            raise ParameterError(f"1F1 lower parameter c={c} hits zero at term {j + 1}")
        term = term * ((-m + j) / ((c + j) * (1.0 + j))) * z
        acc = acc + term
    return float(acc) if acc.ndim == 0 else acc


def jacobi_laguerre_limit_gap(m, alpha, nu, x):
    """|P_m^(alpha, nu)(1 - 2x/nu) - L_m^alpha(x)|, the nu -> infinity
    degeneration gap (decays as O(1/nu))."""
    if nu <= 0:
        raise ValueError("limit gap needs nu > 0")
    pj = jacobi_poly(m, alpha, nu, 1.0 - 2.0 * x / nu)
    lg = laguerre_poly(m, alpha, x)
    return float(abs(pj - lg))
