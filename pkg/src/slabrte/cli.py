"""Command-line driver: single solves, benchmark table sweeps, debug dumps.

Subcommands
-----------
solve        solve one configured problem, write a summary CSV (and
             optionally sampled field CSVs)
table2       transmitted-flux sweep of the pure-scattering benchmark
             (anisotropy x optical depth, MQ kernel)
table3       grid-refinement sweep of the fourth-order-phase benchmark
table4       residual-norm sweep of the pure-scattering benchmark over
             kernels, grid sizes and optical depths
dump-grid    write the node list with classes as CSV
dump-matrix  write the assembled matrix and right-hand side as CSV

Configuration is a flat ``key = value`` text file; every key has a
matching command-line flag which takes precedence.  Exit codes: 0 on
success, 1 for usage/configuration errors, 2 for numerical failures.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import numpy as np

from . import _reference as ref
from .assembly import assemble
from .estimator import RteCollocationSolver
from .grid import NodeClass, X_GRID_MODES, build_partition
from .kernels import KERNEL_FAMILIES, RbfKernel
from .legendre import PhaseExpansion
from .problems import SlabProblem, constant, example1, example2, polynomial
from .quadrature import gauss_legendre
from .solver import SingularMatrixError


class ConfigError(Exception):
    """Invalid configuration or usage."""


_FLOAT_KEYS = ("t0", "omega", "i0_const", "i1_const", "c")
_INT_KEYS = ("m", "n", "scatter_quad_points", "flux_quad_points", "resnorm_grid_x", "resnorm_grid_y")
_LIST_KEYS = ("phase_coeffs", "source_poly")
_STR_KEYS = ("kernel", "builtin", "x_grid", "out_dir")
KNOWN_KEYS = _FLOAT_KEYS + _INT_KEYS + _LIST_KEYS + _STR_KEYS

PROBLEM_DEFAULTS = {
    "t0": 1.0,
    "omega": 1.0,
    "phase_coeffs": (1.0,),
    "source_poly": (0.0,),
    "i0_const": 1.0,
    "i1_const": 0.0,
}

BUILTIN_PRESETS = {
    "example1": {
        "omega": 1.0,
        "phase_coeffs": (1.0, 0.7),
        "source_poly": (0.0,),
        "i0_const": 1.0,
        "i1_const": 0.0,
    },
    "example2": {
        "t0": 1.0,
        "omega": 0.8,
        "phase_coeffs": (1.0, 0.6438, 0.5542, 0.1036, 0.0105),
        "source_poly": (0.0,),
        "i0_const": 1.0,
        "i1_const": 0.0,
    },
}

SOLVER_DEFAULTS = {
    "kernel": "mq",
    "c": 0.3,
    "m": 20,
    "n": 20,
    "scatter_quad_points": 64,
    "flux_quad_points": 64,
    "resnorm_grid_x": 200,
    "resnorm_grid_y": 100,
    "x_grid": "full",
}


def _convert(key, raw):
    try:
        if key in _FLOAT_KEYS:
            return float(raw)
        if key in _INT_KEYS:
            return int(raw)
        if key in _LIST_KEYS:
            parts = [p for p in str(raw).replace(",", " ").split() if p]
            if not parts:
                raise ValueError("empty list")
            return tuple(float(p) for p in parts)
        return str(raw)
    except ValueError as exc:
        raise ConfigError(f"bad value for config key {key!r}: {raw!r} ({exc})") from None


def parse_config_file(path):
    """Parse a flat ``key = value`` config file; unknown keys are rejected."""
    values = {}
    text = Path(path).read_text()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in KNOWN_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown config key {key!r}")
        values[key] = _convert(key, raw)
    return values


def _collect_settings(args):
    """Merge config-file values with command-line overrides (flags win)."""
    settings = {}
    if getattr(args, "config", None):
        settings.update(parse_config_file(args.config))
    for key in KNOWN_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = _convert(key, value)
    return settings


def build_problem(settings):
    """Construct the SlabProblem described by merged settings."""
    merged = dict(PROBLEM_DEFAULTS)
    builtin = settings.get("builtin")
    if builtin is not None:
        if builtin not in BUILTIN_PRESETS:
            raise ConfigError(
                f"unknown builtin {builtin!r}; choose from {sorted(BUILTIN_PRESETS)}"
            )
        merged.update(BUILTIN_PRESETS[builtin])
    for key in PROBLEM_DEFAULTS:
        if key in settings:
            merged[key] = settings[key]
    try:
        return SlabProblem(
            optical_depth=merged["t0"],
            albedo=merged["omega"],
            phase=PhaseExpansion(merged["phase_coeffs"]),
            source=polynomial(merged["source_poly"]),
            inflow_top=constant(merged["i0_const"]),
            inflow_bottom=constant(merged["i1_const"]),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def build_solver(settings):
    params = {key: settings.get(key, SOLVER_DEFAULTS[key]) for key in SOLVER_DEFAULTS}
    if params["kernel"] not in KERNEL_FAMILIES:
        raise ConfigError(f"unknown kernel {params['kernel']!r}; choose from {KERNEL_FAMILIES}")
    if params["x_grid"] not in X_GRID_MODES:
        raise ConfigError(f"x_grid must be one of {X_GRID_MODES}")
    return RteCollocationSolver(**params)


def _out_dir(settings):
    out = Path(settings.get("out_dir", "."))
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _full(v):
    """Full-precision, round-trippable text for a float."""
    return repr(float(v))


# -- subcommands -----------------------------------------------------------


def cmd_solve(args):
    settings = _collect_settings(args)
    problem = build_problem(settings)
    solver = build_solver(settings)
    out = _out_dir(settings)

    try:
        solver.fit(problem)
        flux = solver.flux(1.0)
        resnorm = solver.residual_norm()
    except SingularMatrixError as exc:
        print(f"solve failed: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        raise ConfigError(str(exc)) from None

    _write_csv(
        out / "summary.csv",
        [
            "kernel", "c", "m", "n",
            "flux_transmitted", "residual_norm_sq",
            "condition_estimate", "relative_residual",
        ],
        [[
            solver.kernel, _full(solver.c), solver.m, solver.n,
            _full(flux), _full(resnorm),
            _full(solver.condition_), _full(solver.relative_residual_),
        ]],
    )
    print(f"flux_transmitted = {flux:.6f}")
    print(f"residual_norm_sq = {resnorm:.4e}")
    if args.verbose:
        print(f"condition_estimate = {solver.condition_:.4e}")
        print(f"relative_residual = {solver.relative_residual_:.4e}")
        print(f"n_nodes = {solver.n_nodes_}")

    if args.fields:
        ys = np.linspace(0.0, 1.0, 101)
        fluxes = solver.field_.flux(ys, solver.flux_rule_)
        _write_csv(out / "flux.csv", ["y", "flux"],
                   [[_full(y), _full(f)] for y, f in zip(ys, fluxes)])

        ys = np.linspace(0.0, 1.0, 51)
        xs = np.linspace(-1.0, 1.0, 51)
        intensity = solver.field_.intensity(ys[:, None], xs[None, :])
        residual = solver.field_.residual_grid(ys, xs, solver.scatter_rule_)
        grid_rows = lambda grid: [
            [_full(y), _full(x), _full(grid[i, j])]
            for i, y in enumerate(ys)
            for j, x in enumerate(xs)
        ]
        _write_csv(out / "intensity.csv", ["y", "x", "intensity"], grid_rows(intensity))
        _write_csv(out / "residual.csv", ["y", "x", "residual"], grid_rows(residual))
    return 0


def _sweep_solver(settings, **overrides):
    params = dict(SOLVER_DEFAULTS)
    for key in ("scatter_quad_points", "flux_quad_points", "resnorm_grid_x", "resnorm_grid_y"):
        if key in settings:
            params[key] = settings[key]
    params.update(overrides)
    return RteCollocationSolver(**params)


def cmd_table2(args):
    settings = _collect_settings(args)
    out = _out_dir(settings)
    rows = []
    failures = 0
    print(f"{'c1':>5} {'t0':>5} {'computed':>10} {'method':>10} {'delta':>10} "
          f"{'exact':>8} {'delta':>10}")
    for c1 in ref.EX1_C1_SWEEP:
        for t0 in ref.EX1_DEPTH_SWEEP:
            method = ref.EX1_FLUX_METHOD[(c1, t0)]
            exact = ref.EX1_FLUX_EXACT[(c1, t0)]
            try:
                solver = _sweep_solver(settings).fit(example1(t0, c1))
                flux = solver.flux(1.0)
            except SingularMatrixError as exc:
                failures += 1
                print(f"{c1:5.1f} {t0:5.1f} solve failed: {exc}", file=sys.stderr)
                rows.append([_full(c1), _full(t0), "error", _full(method), "", _full(exact), ""])
                continue
            rows.append([
                _full(c1), _full(t0), _full(flux),
                _full(method), _full(flux - method),
                _full(exact), _full(flux - exact),
            ])
            print(f"{c1:5.1f} {t0:5.1f} {flux:10.5f} {method:10.5f} {flux - method:10.2e} "
                  f"{exact:8.3f} {flux - exact:10.2e}")
    _write_csv(
        out / "table2.csv",
        ["c1", "t0", "flux_computed", "flux_reference", "delta_reference",
         "flux_exact", "delta_exact"],
        rows,
    )
    return 2 if failures else 0


def cmd_table3(args):
    settings = _collect_settings(args)
    out = _out_dir(settings)
    rows = []
    failures = 0
    print(f"{'n=m':>4} {'flux':>10} {'flux_ref':>10} {'delta':>10} "
          f"{'resnorm':>12} {'resnorm_ref':>12}")
    for size in ref.GRID_SWEEP:
        flux_ref, resnorm_ref = ref.EX2_CONVERGENCE[size]
        try:
            solver = _sweep_solver(settings, m=size, n=size).fit(example2())
            flux = solver.flux(1.0)
            resnorm = solver.residual_norm()
        except SingularMatrixError as exc:
            failures += 1
            print(f"n=m={size} solve failed: {exc}", file=sys.stderr)
            rows.append([size, "error", _full(flux_ref), "", "", _full(resnorm_ref), ""])
            continue
        rows.append([
            size, _full(flux), _full(flux_ref), _full(flux - flux_ref),
            _full(resnorm), _full(resnorm_ref), _full(resnorm / resnorm_ref),
        ])
        print(f"{size:4d} {flux:10.6f} {flux_ref:10.6f} {flux - flux_ref:10.2e} "
              f"{resnorm:12.4e} {resnorm_ref:12.4e}")
    _write_csv(
        out / "table3.csv",
        ["n", "flux_computed", "flux_reference", "delta_flux",
         "resnorm_computed", "resnorm_reference", "resnorm_ratio"],
        rows,
    )
    return 2 if failures else 0


def cmd_table4(args):
    settings = _collect_settings(args)
    out = _out_dir(settings)
    rows = []
    failures = 0
    print(f"{'kernel':>6} {'n=m':>4} {'t0':>5} {'resnorm':>12} {'reference':>12} {'ratio':>8}")
    for size in ref.GRID_SWEEP:
        for kernel in ref.RESNORM_KERNELS:
            for t0 in ref.EX1_DEPTH_SWEEP:
                reference = ref.EX1_RESNORM[(kernel, size, t0)]
                try:
                    solver = _sweep_solver(settings, kernel=kernel, m=size, n=size)
                    solver.fit(example1(t0, 0.7))
                    resnorm = solver.residual_norm()
                except SingularMatrixError as exc:
                    failures += 1
                    print(f"{kernel} n=m={size} t0={t0} solve failed: {exc}", file=sys.stderr)
                    rows.append([kernel, size, _full(t0), "error", _full(reference), ""])
                    continue
                rows.append([
                    kernel, size, _full(t0), _full(resnorm),
                    _full(reference), _full(resnorm / reference),
                ])
                print(f"{kernel:>6} {size:4d} {t0:5.1f} {resnorm:12.4e} "
                      f"{reference:12.4e} {resnorm / reference:8.3f}")
    _write_csv(
        out / "table4.csv",
        ["kernel", "n", "t0", "resnorm_computed", "resnorm_reference", "resnorm_ratio"],
        rows,
    )
    return 2 if failures else 0


def cmd_dump_grid(args):
    settings = _collect_settings(args)
    out = _out_dir(settings)
    try:
        partition = build_partition(
            settings.get("m", SOLVER_DEFAULTS["m"]),
            settings.get("n", SOLVER_DEFAULTS["n"]),
            x_grid=settings.get("x_grid", SOLVER_DEFAULTS["x_grid"]),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    rows = [
        [k, _full(y), _full(x), NodeClass(cls).name]
        for k, ((y, x), cls) in enumerate(zip(partition.nodes, partition.classes))
    ]
    _write_csv(out / "grid.csv", ["k", "y", "x", "class"], rows)
    print(f"wrote {partition.n_nodes} nodes to {out / 'grid.csv'}")
    return 0


def cmd_dump_matrix(args):
    settings = _collect_settings(args)
    problem = build_problem(settings)
    out = _out_dir(settings)
    try:
        partition = build_partition(
            settings.get("m", SOLVER_DEFAULTS["m"]),
            settings.get("n", SOLVER_DEFAULTS["n"]),
            x_grid=settings.get("x_grid", SOLVER_DEFAULTS["x_grid"]),
        )
        kernel = RbfKernel(
            settings.get("kernel", SOLVER_DEFAULTS["kernel"]),
            settings.get("c", SOLVER_DEFAULTS["c"]),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    rule = gauss_legendre(settings.get("scatter_quad_points", 64), -1.0, 1.0)
    system = assemble(problem, partition, kernel, rule)
    with open(out / "matrix.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        for row in system.a:
            writer.writerow([_full(v) for v in row])
    _write_csv(
        out / "rhs.csv",
        ["k", "class", "b"],
        [
            [k, NodeClass(cls).name, _full(v)]
            for k, (cls, v) in enumerate(zip(system.row_class, system.b))
        ],
    )
    print(f"wrote {system.size}x{system.size} matrix to {out / 'matrix.csv'}")
    return 0


# -- argument parsing --------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors through ConfigError (exit 1)."""

    def error(self, message):
        raise ConfigError(message)


def _add_common(parser, problem_keys=True):
    parser.add_argument("--config", help="flat key = value configuration file")
    parser.add_argument("--out-dir", dest="out_dir", help="output directory (default: .)")
    parser.add_argument("--scatter-quad-points", dest="scatter_quad_points",
                        help="Gauss-Legendre points for the scattering integral")
    parser.add_argument("--flux-quad-points", dest="flux_quad_points",
                        help="Gauss-Legendre points for the flux integral")
    parser.add_argument("--resnorm-grid-x", dest="resnorm_grid_x",
                        help="Simpson cells in x for the residual norm")
    parser.add_argument("--resnorm-grid-y", dest="resnorm_grid_y",
                        help="Simpson cells in y for the residual norm")
    if problem_keys:
        parser.add_argument("--builtin", choices=sorted(BUILTIN_PRESETS),
                            help="start from a builtin benchmark problem")
        parser.add_argument("--t0", help="optical depth (> 0)")
        parser.add_argument("--omega", help="single-scattering albedo in [0, 1]")
        parser.add_argument("--phase-coeffs", dest="phase_coeffs",
                            help="comma-separated phase coefficients, first must be 1")
        parser.add_argument("--source-poly", dest="source_poly",
                            help="comma-separated polynomial coefficients of the source")
        parser.add_argument("--i0-const", dest="i0_const",
                            help="intensity entering the top face (y=0, x>0)")
        parser.add_argument("--i1-const", dest="i1_const",
                            help="intensity entering the bottom face (y=1, x<0)")
        parser.add_argument("--kernel", choices=KERNEL_FAMILIES, help="radial basis family")
        parser.add_argument("--c", help="kernel shape parameter (> 0)")
        parser.add_argument("--m", help="depth divisions (>= 2)")
        parser.add_argument("--n", help="direction-cosine divisions (even, >= 2)")
        parser.add_argument("--x-grid", dest="x_grid", choices=X_GRID_MODES,
                            help="center layout in x (full: [-1,1]; half: [-1/2,1/2])")


def make_parser():
    parser = _Parser(prog="slabrte",
                     description="Meshless RBF collocation solver for slab radiative transfer")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[], help="solve one configured problem")
    _add_common(p)
    p.add_argument("--fields", action="store_true",
                   help="also write sampled intensity/residual/flux CSVs")
    p.add_argument("--verbose", action="store_true", help="print solve diagnostics")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table2", help="transmitted-flux benchmark sweep (anisotropy x depth)")
    _add_common(p, problem_keys=False)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("table3", help="grid-refinement benchmark sweep (fourth-order phase)")
    _add_common(p, problem_keys=False)
    p.set_defaults(func=cmd_table3)

    p = sub.add_parser("table4", help="residual-norm benchmark sweep (kernels x grids x depths)")
    _add_common(p, problem_keys=False)
    p.set_defaults(func=cmd_table4)

    p = sub.add_parser("dump-grid", help="write the node list with classes as CSV")
    _add_common(p)
    p.set_defaults(func=cmd_dump_grid)

    p = sub.add_parser("dump-matrix", help="write the assembled matrix and rhs as CSV")
    _add_common(p)
    p.set_defaults(func=cmd_dump_matrix)
    return parser


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SingularMatrixError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
