"""Command-line front end: spectra, bounds, solver runs, sweeps, verification.

Output contract: CSV is UTF-8 with LF line endings, a ``# manifest:`` comment
header carrying everything needed to reproduce the run (command, parameters,
tool version, tolerances), lowercase snake_case column names, and 17
significant digits.  Repeated identical invocations produce byte-identical
output, so the manifest carries no wall-clock fields; the human-readable
table format shows the timestamp instead.

Exit codes: 0 success, 1 internal error or failed verification, 2 usage or
validation error, 3 numerical failure (ill-conditioning, non-convergence).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np

from . import __version__, rayleigh, shell_spectrum, solver, verify
from .errors import IllConditionedError, NonConvergenceError
from .geometry import ShellConfig


def _fmt(x: float) -> str:
    return f"{x:.17g}"


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility header for one invocation."""

    command: str
    parameters: dict
    tool_version: str = __version__
    tolerances: dict = field(default_factory=dict)
    timestamp: str = ""

    @classmethod
    def create(cls, command: str, parameters: dict, tolerances: dict) -> "RunManifest":
        return cls(
            command=command,
            parameters=dict(parameters),
            tolerances=dict(tolerances),
            timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        )

    def _kv(self, mapping: dict) -> str:
        return " ".join(f"{k}={mapping[k]}" for k in sorted(mapping))

    def csv_header(self) -> list[str]:
        # Deterministic fields only: repeated identical runs must be
        # byte-identical, so the timestamp stays out of machine output.
        return [
            f"# manifest: command={self.command}",
            f"# manifest: parameters: {self._kv(self.parameters)}",
            f"# manifest: tool_version={self.tool_version}",
            f"# manifest: tolerances: {self._kv(self.tolerances)}",
        ]

    def table_header(self) -> list[str]:
        return self.csv_header() + [f"# manifest: timestamp={self.timestamp}"]


def _emit(lines: list[str], out_path: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _csv_rows(header: list[str], columns: list[str], rows, footer: list[str] = ()) -> list[str]:
    lines = list(header)
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    lines.extend(footer)
    return lines


def _table_rows(header: list[str], columns: list[str], rows, footer: list[str] = ()) -> list[str]:
    str_rows = [
        [_fmt(v) if isinstance(v, float) else str(v) for v in row] for row in rows
    ]
    widths = [
        max(len(columns[j]), max((len(r[j]) for r in str_rows), default=0))
        for j in range(len(columns))
    ]
    lines = list(header)
    lines.append("  ".join(c.ljust(w) for c, w in zip(columns, widths)))
    for r in str_rows:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)))
    lines.extend(footer)
    return lines


def _render(args, manifest, columns, rows, footer=()) -> list[str]:
    if args.format == "csv":
        return _csv_rows(manifest.csv_header(), columns, rows, footer)
    return _table_rows(manifest.table_header(), columns, rows, footer)


def _tolerances(args) -> dict:
    return {"quad_abs": args.tol, "quad_rel": args.tol}


def _apply_tol(args) -> None:
    rayleigh.set_quad_tolerance(args.tol, args.tol)


# ----------------------------------------------------------------------
# subcommands


def cmd_spectrum(args) -> int:
    entries = shell_spectrum.spectrum(args.dim, args.a, args.kmax)
    manifest = RunManifest.create(
        "spectrum", {"dim": args.dim, "a": args.a, "kmax": args.kmax}, _tolerances(args)
    )
    rows = [(e.value, e.k, e.branch, e.multiplicity) for e in entries]
    complete = shell_spectrum.spectrum_complete_below(args.dim, args.a, args.kmax)
    footer = [f"# complete_below={_fmt(complete)}"]
    _emit(_render(args, manifest, ["value", "k", "branch", "multiplicity"], rows, footer), args.out)
    return 0


def cmd_bound(args) -> int:
    _apply_tol(args)
    cfg = ShellConfig(args.dim, args.a, args.d)
    manifest = RunManifest.create(
        "bound",
        {"dim": args.dim, "a": args.a, "d": args.d, "problem": args.problem},
        _tolerances(args),
    )
    if args.problem == "steklov":
        b = rayleigh.steklov_bound(cfg)
        fields = [
            ("mu", b.mu),
            ("w1", b.W1),
            ("w2", b.W2),
            ("w3", b.W3),
            ("v1", b.V1),
            ("v2", b.V2),
            ("v3", b.V3),
            ("i_n", b.In),
            ("inner_mass", b.inner_mass),
            ("energy", b.energy),
            ("boundary_mass", b.boundary_mass),
            ("bound", b.bound),
            ("sigma1_concentric", shell_spectrum.sigma1_closed_form(cfg.n, cfg.a)),
        ]
    else:
        energy = rayleigh.ds_energy(cfg)
        mass = rayleigh.ds_boundary_mass(cfg)
        tau0 = (
            1.0 / math.log(1.0 / cfg.a)
            if cfg.n == 2
            else (cfg.n - 2) / (cfg.a ** (2 - cfg.n) - 1.0)
        )
        fields = [
            ("energy", energy),
            ("boundary_mass", mass),
            ("bound", energy / mass),
            ("tau1_concentric", tau0),
        ]
    if args.format == "csv":
        columns = [name for name, _ in fields]
        rows = [tuple(val for _, val in fields)]
        _emit(_csv_rows(manifest.csv_header(), columns, rows), args.out)
    else:
        rows = [(name, val) for name, val in fields]
        _emit(_table_rows(manifest.table_header(), ["field", "value"], rows), args.out)
    return 0


def cmd_solve(args) -> int:
    cfg = ShellConfig(2, args.a, args.d)
    manifest = RunManifest.create(
        "solve",
        {
            "a": args.a,
            "d": args.d,
            "order": args.order,
            "points": args.points,
            "problem": args.problem,
        },
        _tolerances(args),
    )
    if args.problem == "steklov":
        res = solver.solve_steklov(cfg, N=args.order, m=args.points)
        principal = res.first_nonzero()
        label = "sigma1"
    else:
        res = solver.solve_dirichlet_steklov(cfg, N=args.order, m=args.points)
        principal = float(res.eigenvalues[0])
        label = "tau1"
    groups = solver.group_eigenvalues(res.eigenvalues[:12])
    footer = [
        f"# {label}={_fmt(principal)}",
        f"# residual={_fmt(res.residual)}",
        f"# gram_condition={_fmt(res.gram_condition)}",
    ]
    rows = [(val, mult) for val, mult in groups]
    _emit(_render(args, manifest, ["eigenvalue", "multiplicity"], rows, footer), args.out)
    return 0


# Sweep workers are top-level so the process pool can pickle them.


def _steklov_point(task) -> tuple:
    n, a, d, use_solver, order, points, tol = task
    rayleigh.set_quad_tolerance(tol, tol)
    cfg = ShellConfig(n, a, d)
    bound = rayleigh.steklov_bound(cfg).bound
    closed = shell_spectrum.sigma1_closed_form(n, a)
    if use_solver:
        res = solver.solve_with_order_fallback(cfg, N=order, m=points)
        return (d, bound, res.first_nonzero(), closed)
    return (d, bound, closed)


def _ds_point(task) -> tuple:
    n, a, d, use_solver, order, points, tol = task
    rayleigh.set_quad_tolerance(tol, tol)
    cfg = ShellConfig(n, a, d)
    bound = rayleigh.ds_bound(cfg)
    closed = 1.0 / math.log(1.0 / a) if n == 2 else (n - 2) / (a ** (2 - n) - 1.0)
    if use_solver:
        res = solver.solve_with_order_fallback(cfg, N=order, m=points, problem="dirichlet-steklov")
        return (d, bound, float(res.eigenvalues[0]), closed)
    return (d, bound, closed)


def _ratio_point(task) -> tuple:
    n, eps = task
    return (eps, shell_spectrum.scale_invariant(n, eps))


def _run_pool(fn, tasks, jobs: int):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def cmd_sweep(args) -> int:
    _apply_tol(args)
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    params = {"dim": args.dim, "problem": args.problem}

    if args.problem == "ratio":
        if args.eps_steps < 1:
            raise ValueError("eps sweep needs at least one grid point")
        eps_grid = np.linspace(0.0, 0.99, args.eps_steps)
        tasks = [(args.dim, float(e)) for e in eps_grid]
        rows = _run_pool(_ratio_point, tasks, jobs)
        eps_star, value = shell_spectrum.optimal_eps(args.dim)
        params["eps_steps"] = args.eps_steps
        manifest = RunManifest.create("sweep", params, _tolerances(args))
        footer = [f"# eps_star={_fmt(eps_star)}", f"# value_at_eps_star={_fmt(value)}"]
        _emit(_render(args, manifest, ["eps", "normalized_value"], rows, footer), args.out)
        return 0

    if args.d_steps < 1:
        raise ValueError("offset sweep needs at least one grid point")
    a = args.a
    use_solver = args.dim == 2 and not args.no_solver
    d_max = args.d_max if args.d_max is not None else 0.95 * (1.0 - a)
    cfg0 = ShellConfig(args.dim, a, 0.0)
    if not 0.0 <= d_max < 1.0 - a:
        raise ValueError("sweep offset cap must lie in [0, 1 - a)")
    if use_solver:
        solver.validate_problem_size(cfg0, args.order, args.points)
    d_grid = np.linspace(0.0, d_max, args.d_steps)
    point = _steklov_point if args.problem == "steklov" else _ds_point
    tasks = [
        (args.dim, a, float(d), use_solver, args.order, args.points, args.tol)
        for d in d_grid
    ]
    rows = _run_pool(point, tasks, jobs)
    params.update({"a": a, "d_steps": args.d_steps, "d_max": d_max, "solver": use_solver})
    if use_solver:
        params.update({"order": args.order, "points": args.points})
        columns = ["d", "bound", "solver_value", "closed_form"]
    else:
        columns = ["d", "bound", "closed_form"]
    manifest = RunManifest.create("sweep", params, _tolerances(args))
    _emit(_render(args, manifest, columns, rows), args.out)
    return 0


def cmd_verify(args) -> int:
    results = verify.run_checks(
        args.level, inject_fault=args.inject_fault, name_filter=args.checks
    )
    report = verify.format_report(results)
    if args.out is None:
        sys.stdout.write(report)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(report)
    return 0 if all(r.passed for r in results) else 1


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv"), default="table")
    common.add_argument("--out", metavar="PATH", default=None)
    common.add_argument("--jobs", type=int, default=0, metavar="K",
                        help="worker processes for sweeps (0 = all cores)")
    common.add_argument("--tol", type=float, default=1e-12,
                        help="quadrature tolerance per integral")

    parser = argparse.ArgumentParser(
        prog="steklov-shell",
        description="Steklov spectra of spherical shells: exact values, bounds, solver, sweeps.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common],
                       help="exact concentric-shell spectrum")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--kmax", type=int, default=shell_spectrum.DEFAULT_K_MAX)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("bound", parents=[common],
                       help="Rayleigh upper bound with its full breakdown")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--problem", choices=("steklov", "dirichlet-steklov"), default="steklov")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("solve", parents=[common],
                       help="planar boundary-Galerkin eigensolver")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--order", type=int, default=24)
    p.add_argument("--points", type=int, default=512)
    p.add_argument("--problem", choices=("steklov", "dirichlet-steklov"), default="steklov")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", parents=[common],
                       help="offset or hole-ratio sweeps to CSV")
    p.add_argument("--problem", choices=("steklov", "dirichlet-steklov", "ratio"),
                   required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--a", type=float, default=0.5)
    p.add_argument("--d-steps", type=int, default=21)
    p.add_argument("--d-max", type=float, default=None)
    p.add_argument("--eps-steps", type=int, default=200)
    p.add_argument("--no-solver", action="store_true",
                   help="skip the planar eigensolver column")
    p.add_argument("--order", type=int, default=24)
    p.add_argument("--points", type=int, default=512)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", parents=[common],
                       help="run the named invariant suite")
    p.add_argument("--level", choices=("fast", "full"), default="fast")
    p.add_argument("--inject-fault", choices=verify.FAULTS, default=None,
                   help="debug: deliberately break one identity to test the harness")
    p.add_argument("--checks", metavar="SUBSTRING", default=None,
                   help="run only checks whose name contains SUBSTRING")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IllConditionedError, NonConvergenceError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
