"""Command-line front end: spectra, wavefunctions, validation reports,
limit studies and effect comparisons, serialized as CSV or JSON.

Inputs are dimensionless (kappa a1^2, L/a1, R/a1); eV output is a pure
formatting concern.  Identical configurations produce byte-identical
output files.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import analytic, corrections, oracle, specfun, validation
from .geometry import ATOMIC

CONFIG_ENV = "CURVEDH_CONFIG"

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_UNBOUND = 3
EXIT_VALIDATION = 4

_CONFIG_KEYS = ("kappa", "ratio", "nmax", "n", "l", "minimal_length",
                "grid_n", "rmax", "units", "format", "out", "precision_ev")


class ConfigError(ValueError):
    pass


def _fmt(x) -> str:
    """Round-trip-safe float formatting (17 significant digits)."""
    return format(float(x), ".17g")


def _energy_factor(units: str) -> float:
    return ATOMIC.hartree_ev if units == "ev" else 1.0


def _resolve_kappa(args) -> float:
    if args.kappa is not None and args.ratio is not None:
        raise ConfigError("--kappa and --ratio are mutually exclusive")
    if args.ratio is not None:
        if args.ratio <= 0.0:
            raise ConfigError("--ratio must be positive")
        return 1.0 / (args.ratio * args.ratio)
    if args.kappa is None:
        return 0.0
    return args.kappa


def _resolve_length(value) -> float:
    if value is None:
        return 0.0
    if isinstance(value, str):
        if value.lower() == "planck":
            return ATOMIC.planck_length_ratio
        value = float(value)
    if value < 0.0:
        raise ConfigError("minimal length must be non-negative")
    return float(value)


def _emit(rows, meta, args, float_cols):
    """Serialize rows (list of dicts) as CSV or JSON to --out or stdout."""
    if args.format == "json":
        payload = {"metadata": meta, "rows": rows}
        text = json.dumps(payload, indent=2, sort_keys=True, allow_nan=True) + "\n"
    else:
        cols = list(rows[0].keys()) if rows else []
        lines = [f"# {key} = {val}" for key, val in sorted(meta.items())]
        lines.append(",".join(cols))
        for row in rows:
            cells = []
            for col in cols:
                v = row[col]
                if v is None:
                    cells.append("")
                elif col in float_cols:
                    cells.append(_fmt(v))
                else:
                    cells.append(str(v))
            lines.append(",".join(cells))
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_spectrum(args) -> int:
    kappa = _resolve_kappa(args)
    length = _resolve_length(args.minimal_length)
    if args.nmax < 1:
        raise ConfigError("--nmax must be >= 1")
    factor = _energy_factor(args.units)
    rows = []
    for n in range(1, args.nmax + 1):
        l_values = [args.l] if args.l is not None else range(n)
        for l in l_values:
            if l >= n:
                continue
            qn = analytic.QuantumNumbers(n, l)
            bound = analytic.bound_state_admissible(qn, kappa)
            if bound:
                lev = corrections.combined_level(qn, kappa, length)
                rows.append({
                    "n": n, "l": l,
                    "E_base": lev.base_energy * factor,
                    "E_ml_shift": lev.ml_shift * factor,
                    "E_curvature_term": lev.curvature_term * factor,
                    "E_total": lev.total * factor,
                    "bound": True,
                })
            else:
                rows.append({"n": n, "l": l, "E_base": None, "E_ml_shift": None,
                             "E_curvature_term": None, "E_total": None,
                             "bound": False})
    meta = {"command": "spectrum", "kappa": _fmt(kappa),
            "minimal_length_ratio": _fmt(length), "units": args.units}
    _emit(rows, meta, args,
          float_cols={"E_base", "E_ml_shift", "E_curvature_term", "E_total"})
    return EXIT_OK


def cmd_wavefunction(args) -> int:
    kappa = _resolve_kappa(args)
    qn = analytic.QuantumNumbers(args.n, args.l if args.l is not None else 0)
    if not analytic.bound_state_admissible(qn, kappa):
        print(f"level n={qn.n} is not bound for kappa={kappa}", file=sys.stderr)
        return EXIT_UNBOUND
    num = args.grid_n if args.grid_n else 2001
    if args.rmax is not None:
        if kappa > 0.0 and args.rmax > math.pi / math.sqrt(kappa):
            raise ConfigError("--rmax beyond the antipode")
        grid = np.linspace(0.0, args.rmax, num)
    else:
        grid = analytic.default_grid(qn, kappa, num=num)
    table = analytic.radial_wavefunction(qn, kappa, grid=grid)
    rows = [{"r": float(r), "G": float(g)}
            for r, g in zip(table.grid, table.values)]
    meta = {"command": "wavefunction", "n": qn.n, "l": qn.l,
            "kappa": _fmt(kappa), "norm": _fmt(table.norm),
            "node_count": table.node_count}
    _emit(rows, meta, args, float_cols={"r", "G"})
    return EXIT_OK


def cmd_validate(args) -> int:
    kappa_list = ([_resolve_kappa(args)] if (args.kappa is not None or args.ratio is not None)
                  else list(validation.DEFAULT_KAPPAS))
    if args.nmax < 1:
        raise ConfigError("--nmax must be >= 1")
    report = validation.run_validation(kappas=kappa_list, n_max=args.nmax,
                                       grid_n=args.grid_n, r_max=args.rmax)
    if not report.records:
        raise ConfigError("validation matrix is empty")
    rows = [{
        "kappa": rec.kappa, "n": rec.n, "l": rec.l,
        "lambda_analytic": rec.lambda_analytic,
        "lambda_numeric": rec.lambda_numeric,
        "relative_error": rec.relative_error,
        "node_count": rec.node_count,
        "analytic_residual": rec.analytic_residual,
    } for rec in report.records]
    order = validation.convergence_order(N=args.grid_n or 1500)
    meta = {"command": "validate",
            "max_relative_error": _fmt(report.max_relative_error),
            "max_residual": _fmt(report.max_residual),
            "convergence_order_ratio": _fmt(order),
            "eigenvalue_tol": _fmt(validation.EIGENVALUE_TOL),
            "residual_tol": _fmt(validation.RESIDUAL_TOL)}
    _emit(rows, meta, args,
          float_cols={"kappa", "lambda_analytic", "lambda_numeric",
                      "relative_error", "analytic_residual"})
    ok = (report.max_relative_error <= validation.EIGENVALUE_TOL
          and report.max_residual <= validation.RESIDUAL_TOL)
    return EXIT_OK if ok else EXIT_VALIDATION


def cmd_limits(args) -> int:
    rows = []
    # flat-limit study: wavefunction gap vs kappa (O(kappa))
    kappas = [3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5]
    for qn in (analytic.QuantumNumbers(1, 0), analytic.QuantumNumbers(2, 0),
               analytic.QuantumNumbers(2, 1)):
        for sign in (+1.0, -1.0):
            seq = [sign * k for k in kappas]
            gaps = analytic.flat_limit_gap(qn, seq)
            slope = _loglog_slope(kappas, gaps)
            for k, gap in zip(seq, gaps):
                rows.append({"study": "flat_limit", "n": qn.n, "l": qn.l,
                             "parameter": k, "gap": gap, "slope": slope})
    # Jacobi -> Laguerre degeneration: gap vs nu (O(1/nu))
    nus = [1e2, 1e3, 1e4, 1e5, 1e6]
    for m in range(1, 6):
        gaps = [specfun.jacobi_laguerre_limit_gap(m, 2.0, nu, 1.0) for nu in nus]
        slope = _loglog_slope(nus, gaps)
        for nu, gap in zip(nus, gaps):
            rows.append({"study": "jacobi_laguerre", "n": None, "l": None,
                         "parameter": nu, "gap": gap, "slope": slope})
    meta = {"command": "limits"}
    _emit(rows, meta, args, float_cols={"parameter", "gap", "slope"})
    return EXIT_OK


def _loglog_slope(xs, ys):
    lx = np.log(np.asarray(xs, dtype=float))
    ly = np.log(np.asarray(ys, dtype=float))
    return float(np.polyfit(lx, ly, 1)[0])


def cmd_effects(args) -> int:
    length = _resolve_length(args.minimal_length or "planck")
    ratio = args.ratio if args.ratio is not None else 1e36
    kappa = 1.0 / (ratio * ratio)
    report = {
        "planck_Q": corrections.planck_Q(),
        "minimal_length_ratio": length,
        "curvature_ratio_R_over_a1": ratio,
        "relative_ml_effect_n2": corrections.relative_ml_effect(2, length),
        "relative_curvature_effect_n2": corrections.relative_curvature_effect(2, kappa),
        "transition_level": analytic.transition_level(kappa),
    }
    report["relative_curvature_effect_at_transition"] = \
        corrections.relative_curvature_effect(report["transition_level"], kappa)
    try:
        n_star = corrections.crossover_level(kappa, length)
        report["crossover_n"] = n_star
        report["crossover_relative_effect"] = corrections.relative_ml_effect(n_star, length)
    except corrections.CrossoverError as exc:
        report["crossover_n"] = None
        report["crossover_note"] = str(exc)
    if args.precision_ev is not None:
        report["precision_ev"] = args.precision_ev
        report["length_bound_m"] = corrections.length_bound_from_precision(args.precision_ev)
    meta = {"command": "effects"}
    _emit([report], meta, args, float_cols=set(report))
    return EXIT_OK


def _load_config(path):
    if not path:
        return {}
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}")
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a flat JSON object")
    unknown = set(data) - set(_CONFIG_KEYS)
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    return data


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvedh",
        description="Hydrogen bound states on constant-curvature 3D spaces, "
                    "with minimal-length corrections and numeric cross-checks.")
    parser.add_argument("--config", default=None,
                        help="flat key-value JSON config file "
                             f"(default from ${CONFIG_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, nmax=False, level=False):
        p.add_argument("--kappa", type=float, default=None,
                       help="curvature kappa * a1^2 (dimensionless)")
        p.add_argument("--ratio", type=float, default=None,
                       help="curvature radius over Bohr radius R/a1 "
                            "(alternative to --kappa)")
        if nmax:
            p.add_argument("--nmax", type=int, default=4)
        if level:
            p.add_argument("-n", type=int, default=1)
        p.add_argument("-l", type=int, default=None)
        p.add_argument("--minimal-length", dest="minimal_length", default=None,
                       help="L/a1 or the word 'planck'")
        p.add_argument("--grid-n", dest="grid_n", type=int, default=None)
        p.add_argument("--rmax", type=float, default=None)
        p.add_argument("--units", choices=("atomic", "ev"), default="atomic")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None)
        p.add_argument("--precision-ev", dest="precision_ev", type=float, default=None)

    common(sub.add_parser("spectrum", help="energy table"), nmax=True)
    common(sub.add_parser("wavefunction", help="radial wavefunction table"), level=True)
    common(sub.add_parser("validate", help="analytic vs numeric report"), nmax=True)
    common(sub.add_parser("limits", help="flat-limit and polynomial-limit study"))
    common(sub.add_parser("effects", help="order-of-magnitude effect report"))
    return parser


_HANDLERS = {
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "validate": cmd_validate,
    "limits": cmd_limits,
    "effects": cmd_effects,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config or os.environ.get(CONFIG_ENV))
        # config fills anything left at its parser default; explicit flags win
        defaults = build_parser().parse_args([args.command])
        for key, val in config.items():
            if hasattr(args, key) and getattr(args, key) == getattr(defaults, key, object()):
                setattr(args, key, val)
        return _HANDLERS[args.command](args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
