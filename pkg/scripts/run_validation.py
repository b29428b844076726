#!/usr/bin/env python3
"""Run the full analytic-vs-oracle validation matrix and print a summary.

Usage: python3 scripts/run_validation.py [--nmax N]
"""

import argparse

from curvedh import validation


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=4)
    args = ap.parse_args()

    report = validation.run_validation(n_max=args.nmax)
    print(f"{'kappa':>10} {'n':>3} {'l':>3} {'lambda_exact':>18} "
          f"{'rel_err':>10} {'residual':>10} {'nodes':>5}")
    for rec in report.records:
        print(f"{rec.kappa:>10.2e} {rec.n:>3} {rec.l:>3} "
              f"{rec.lambda_analytic:>18.12f} {rec.relative_error:>10.2e} "
              f"{rec.analytic_residual:>10.2e} {rec.node_count:>5}")
    print(f"\n{len(report.records)} levels; "
          f"max relative error {report.max_relative_error:.3e} "
          f"(tol {validation.EIGENVALUE_TOL:g}); "
          f"max residual {report.max_residual:.3e} "
          f"(tol {validation.RESIDUAL_TOL:g})")
    order = validation.convergence_order()
    print(f"convergence-order error ratio h vs h/2: {order:.3f} (expect ~4)")


if __name__ == "__main__":
    main()
