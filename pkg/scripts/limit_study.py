#!/usr/bin/env python3
"""Flat-limit and polynomial-degeneration studies with fitted slopes.

The curved wavefunctions should approach the flat Laguerre ones linearly in
kappa, and the Jacobi polynomials should approach Laguerre as 1/nu.
"""

import numpy as np

from curvedh import analytic, specfun
from curvedh.analytic import QuantumNumbers


def main():
    kappas = np.array([3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5])
    print("flat-limit gaps (sup norm vs kappa):")
    for n, l in ((1, 0), (2, 0), (2, 1)):
        for sign in (+1.0, -1.0):
            gaps = analytic.flat_limit_gap(QuantumNumbers(n, l), sign * kappas)
            slope = np.polyfit(np.log(kappas), np.log(gaps), 1)[0]
            tag = "spherical" if sign > 0 else "hyperbolic"
            print(f"  n={n} l={l} {tag:>10}: slope {slope:+.4f}  "
                  f"gaps {['%.2e' % g for g in gaps]}")

    nus = np.array([1e2, 1e3, 1e4, 1e5, 1e6])
    print("\nJacobi -> Laguerre gaps (vs nu):")
    for m in range(1, 6):
        gaps = [specfun.jacobi_laguerre_limit_gap(m, 2.0, nu, 1.0) for nu in nus]
        slope = np.polyfit(np.log(nus), np.log(gaps), 1)[0]
        print(f"  m={m}: slope {slope:+.4f}  gaps {['%.2e' % g for g in gaps]}")


if __name__ == "__main__":
    main()
