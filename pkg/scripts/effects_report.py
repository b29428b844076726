#!/usr/bin/env python3
"""Order-of-magnitude comparison of the minimal-length and curvature effects.

Prints the ground-state Planck-scale relative shift, the curvature effect for
a cosmological-scale curvature radius, the level where the two effects cross,
and the minimal-length bound implied by 1S-2S spectroscopy precision.
"""

from curvedh import analytic, corrections
from curvedh.geometry import ATOMIC


def main():
    x = ATOMIC.planck_length_ratio
    kappa = 1e-72  # R / a1 = 1e36

    print(f"Planck / Bohr ratio          : {x:.6e}")
    print(f"ground-state relative shift  : {corrections.planck_Q():.6e}")
    print(f"curvature effect, n=2        : "
          f"{corrections.relative_curvature_effect(2, kappa):.6e}")
    print(f"minimal-length effect, n=2   : "
          f"{corrections.relative_ml_effect(2, x):.6e}")

    n_star = corrections.crossover_level(kappa, x)
    print(f"crossover level n*           : {n_star:.1f}")
    print(f"common relative magnitude    : "
          f"{corrections.relative_ml_effect(n_star, x):.6e}")

    n_t = analytic.transition_level(kappa)
    print(f"spherical E=0 transition n   : {n_t:.6e}")

    bound = corrections.length_bound_from_precision(1e-12)
    print(f"length bound (1e-12 eV)      : {bound:.4e} m "
          f"({bound * 1e15:.4f} fm)")


if __name__ == "__main__":
    main()
