"""Command-line front end: ecokmap <command> --config <path> [options].

Each command reads one JSON config, runs the corresponding analysis and
writes CSV data (plus an SVG with --plot) into the output directory.
Flags override config values.  Exit codes: 0 success, 1 usage, 2 invalid
config/values, 3 runtime failure.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .config import ConfigError, RunConfig, parse_config
from .csvio import write_csv
from .dynamics import NonFiniteStepError
from .equilibria import stability_report
from .lyapunov import EscapedTooEarly, lambda_series, lyapunov_spectrum
from .orbit import PERIOD_TOL, Settled, iterate
from .svgplot import heatmap_svg, line_svg, scatter_svg
from .sweep import ChaosGridSpec, SweepSpec, bifurcation_sweep, chaos_grid, outcome_label

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_RUNTIME = 3

# Default recording window for phase portraits (iterations 501..600).
PHASE_TRANSIENT = 500
PHASE_RECORD = 100


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit code 2; this CLI pins them to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ecokmap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_text in (
        ("simulate", "iterate one orbit and write its post-transient tail"),
        ("fixed-points", "enumerate and classify all fixed points"),
        ("bifurcate", "sweep one parameter; tails, periods and lambda1 per grid value"),
        ("lyapunov", "Lyapunov exponent pair with its convergence series"),
        ("chaos-grid", "largest exponent over the (c2, c3) coupling plane"),
        ("phase", "phase portrait of the orbit tail"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--config", required=True, help="path to the JSON config")
        cmd.add_argument("--out", default=None, help="output directory (default: config out_dir)")
        if name != "fixed-points":
            cmd.add_argument("--plot", action="store_true", help="also write an SVG plot")
            cmd.add_argument("--steps", type=int, default=None, help="override the step budget")
            cmd.add_argument(
                "--transient", type=int, default=None, help="override the transient length"
            )
            cmd.add_argument(
                "--seed-tolerance",
                type=float,
                default=None,
                help="relative tolerance for period detection",
            )
        if name in ("bifurcate", "chaos-grid"):
            cmd.add_argument("--grid", type=int, default=None, help="override grid point count")
            cmd.add_argument(
                "--workers", type=int, default=None, help="worker threads (default: cpu count)"
            )
    return parser


def _pick(override, fallback):
    return fallback if override is None else override


def _orbit_rows(rec):
    for i, s in enumerate(rec.tail):
        yield rec.first_index + i, s.x, s.y


def _write(out_dir: Path, name: str, text: str) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / name
    path.write_text(text, encoding="ascii")
    print(f"wrote {path}")
    return path


def _write_rows(out_dir: Path, name: str, header, rows) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / name
    write_csv(path, header, rows)
    print(f"wrote {path}")
    return path


def cmd_simulate(cfg: RunConfig, args, out_dir: Path) -> int:
    transient = _pick(args.transient, cfg.budgets.transient)
    record = _pick(args.steps, cfg.budgets.record)
    tol = _pick(args.seed_tolerance, PERIOD_TOL)
    rec = iterate(cfg.params, cfg.initial, transient + record, transient, period_tol=tol)
    rows = list(_orbit_rows(rec))
    _write_rows(out_dir, "orbit.csv", ["n", "x", "y"], rows)
    print(f"outcome: {outcome_label(rec.outcome)}")
    if args.plot:
        svg = line_svg(
            [r[1] for r in rows],
            [r[2] for r in rows],
            xlabel="x",
            ylabel="y",
            title=f"orbit tail, r2={cfg.params.r2:g} ({outcome_label(rec.outcome)})",
        )
        _write(out_dir, "orbit.svg", svg)
    return EXIT_OK


def cmd_fixed_points(cfg: RunConfig, args, out_dir: Path) -> int:
    report = stability_report(cfg.params)
    _write(out_dir, "fixed_points.txt", report.to_text())
    return EXIT_OK


def cmd_bifurcate(cfg: RunConfig, args, out_dir: Path) -> int:
    s = cfg.sweep
    spec = SweepSpec(
        base=cfg.params,
        parameter=s.parameter,
        lo=s.lo,
        hi=s.hi,
        n_points=_pick(args.grid, s.points),
        s0=cfg.initial,
        n_transient=_pick(args.transient, cfg.budgets.transient),
        n_record=_pick(args.steps, cfg.budgets.record),
        n_lyap=s.lyap,
        period_tol=_pick(args.seed_tolerance, PERIOD_TOL),
    )
    result = bifurcation_sweep(spec, workers=args.workers)
    rows = []
    for pt in result.points:
        label = pt.orbit.outcome.period if isinstance(pt.orbit.outcome, Settled) else (
            outcome_label(pt.orbit.outcome)
        )
        for n, x, y in _orbit_rows(pt.orbit):
            rows.append((pt.value, n, x, y, label, pt.lambda1))
    _write_rows(out_dir, "bifurcation.csv", ["param", "n", "x", "y", "period", "lambda1"], rows)
    if args.plot:
        svg = scatter_svg(
            [r[0] for r in rows],
            [r[3] for r in rows],
            xlabel=spec.parameter,
            ylabel="y",
            title=f"bifurcation diagram: y vs {spec.parameter}",
        )
        _write(out_dir, "bifurcation.svg", svg)
    return EXIT_OK


def cmd_lyapunov(cfg: RunConfig, args, out_dir: Path) -> int:
    transient = _pick(args.transient, cfg.budgets.transient)
    n_iter = _pick(args.steps, cfg.budgets.lyap)
    result = lyapunov_spectrum(cfg.params, cfg.initial, transient, n_iter)
    stride = max(1, n_iter // 1000)
    series = lambda_series(result, stride)
    rows = [(int(n), l1, l2) for n, l1, l2 in series]
    _write_rows(out_dir, "lyapunov.csv", ["n", "lambda1", "lambda2"], rows)
    print(
        f"lambda1={result.lambda1:.6g} lambda2={result.lambda2:.6g} "
        f"n_used={result.n_used} escaped={str(result.escaped).lower()}"
    )
    if args.plot:
        svg = line_svg(
            [r[0] for r in rows],
            [r[1] for r in rows],
            xlabel="n",
            ylabel="lambda1",
            title=f"largest Lyapunov exponent vs n, r2={cfg.params.r2:g}",
        )
        _write(out_dir, "lyapunov.svg", svg)
    return EXIT_OK


def cmd_chaos_grid(cfg: RunConfig, args, out_dir: Path) -> int:
    g = cfg.grid
    spec = ChaosGridSpec(
        base=cfg.params,
        c2_lo=g.c2_lo,
        c2_hi=g.c2_hi,
        c2_points=_pick(args.grid, g.c2_points),
        c3_lo=g.c3_lo,
        c3_hi=g.c3_hi,
        c3_points=_pick(args.grid, g.c3_points),
        r2_values=g.r2_values if g.r2_values is not None else (cfg.params.r2,),
        s0=cfg.initial,
        n_transient=_pick(args.transient, cfg.budgets.transient),
        n_record=_pick(args.steps, cfg.budgets.record),
        n_lyap=g.lyap,
        period_tol=_pick(args.seed_tolerance, PERIOD_TOL),
    )
    result = chaos_grid(spec, workers=args.workers)
    rows = [(c.c2, c.c3, c.r2, c.lambda1, c.label) for c in result.cells]
    _write_rows(out_dir, "chaos_grid.csv", ["c2", "c3", "r2", "lambda1", "label"], rows)
    if args.plot:
        for i, r2 in enumerate(spec.r2_values):
            cells = [c for c in result.cells if c.r2 == r2]
            svg = heatmap_svg(
                [c.c2 for c in cells],
                [c.c3 for c in cells],
                [c.lambda1 for c in cells],
                xlabel="c2",
                ylabel="c3",
                title=f"lambda1 over (c2, c3) at r2={r2:g}",
            )
            name = "chaos_grid.svg" if len(spec.r2_values) == 1 else f"chaos_grid_{i + 1}.svg"
            _write(out_dir, name, svg)
    return EXIT_OK


def cmd_phase(cfg: RunConfig, args, out_dir: Path) -> int:
    transient = _pick(args.transient, PHASE_TRANSIENT)
    record = _pick(args.steps, PHASE_RECORD)
    tol = _pick(args.seed_tolerance, PERIOD_TOL)
    rec = iterate(cfg.params, cfg.initial, transient + record, transient, period_tol=tol)
    rows = list(_orbit_rows(rec))
    _write_rows(out_dir, "phase.csv", ["n", "x", "y"], rows)
    print(f"outcome: {outcome_label(rec.outcome)}")
    if args.plot:
        svg = scatter_svg(
            [r[1] for r in rows],
            [r[2] for r in rows],
            xlabel="x",
            ylabel="y",
            title=f"phase portrait, iterations {rec.first_index}..{rec.first_index + len(rows) - 1}",
            radius=2.0,
        )
        _write(out_dir, "phase.svg", svg)
    return EXIT_OK


_COMMANDS = {
    "simulate": cmd_simulate,
    "fixed-points": cmd_fixed_points,
    "bifurcate": cmd_bifurcate,
    "lyapunov": cmd_lyapunov,
    "chaos-grid": cmd_chaos_grid,
    "phase": cmd_phase,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as e:
        print(f"ecokmap: cannot read config: {e}", file=sys.stderr)
        return EXIT_RUNTIME
    try:
        cfg = parse_config(text)
        out_dir = Path(args.out) if args.out is not None else Path(cfg.out_dir)
        return _COMMANDS[args.command](cfg, args, out_dir)
    except (ConfigError, ValueError) as e:
        print(f"ecokmap: invalid configuration: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except (EscapedTooEarly, NonFiniteStepError) as e:
        print(f"ecokmap: {e}", file=sys.stderr)
        return EXIT_RUNTIME
    except OSError as e:
        print(f"ecokmap: io error: {e}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
