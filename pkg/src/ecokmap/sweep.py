"""Batch engine: one-parameter bifurcation sweeps and (c2, c3) chaos grids.

Each grid point is an independent pure computation (orbit tail + period
label + largest Lyapunov exponent), so points may be evaluated on any
number of worker threads; results are assembled by grid index and are
bitwise identical regardless of worker count.  The kernels release the
GIL under numba, so threads give real parallelism.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .dynamics import ModelParams, State
from .lyapunov import SWEEP_STEPS, EscapedTooEarly, lyapunov_spectrum
from .orbit import (
    DEFAULT_RECORD,
    DEFAULT_TRANSIENT,
    MAX_PERIOD,
    PERIOD_TOL,
    Aperiodic,
    Escaped,
    OrbitRecord,
    Settled,
    iterate,
)

__all__ = [
    "SWEEPABLE_PARAMETERS",
    "SweepSpec",
    "SweepPoint",
    "SweepResult",
    "ChaosGridSpec",
    "GridCell",
    "ChaosGridResult",
    "grid_values",
    "bifurcation_sweep",
    "chaos_grid",
    "outcome_label",
]

SWEEPABLE_PARAMETERS = ("r1", "r2", "c1", "c2", "c3", "c4")


def grid_values(lo: float, hi: float, n_points: int) -> np.ndarray:
    """Evenly spaced grid lo + i*(hi - lo)/(n_points - 1), endpoints exact."""
    return np.linspace(lo, hi, n_points)


def _check_range(base: ModelParams, parameter: str, lo: float, hi: float, n_points: int):
    if parameter not in SWEEPABLE_PARAMETERS:
        raise ValueError(f"unknown sweep parameter {parameter!r}")
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ValueError(f"need finite lo < hi, got {lo!r}, {hi!r}")
    if n_points < 2:
        raise ValueError(f"n_points must be >= 2, got {n_points}")
    # Endpoint substitution reuses the ModelParams invariants to confirm
    # the whole swept range stays in the parameter's domain.
    replace(base, **{parameter: lo})
    replace(base, **{parameter: hi})


@dataclass(frozen=True)
class SweepSpec:
    """One-parameter scan: base parameters with one field swept over a grid."""

    base: ModelParams
    parameter: str
    lo: float
    hi: float
    n_points: int
    s0: State
    n_transient: int = DEFAULT_TRANSIENT
    n_record: int = DEFAULT_RECORD
    n_lyap: int = SWEEP_STEPS
    max_period: int = MAX_PERIOD
    period_tol: float = PERIOD_TOL

    def __post_init__(self):
        _check_range(self.base, self.parameter, self.lo, self.hi, self.n_points)
        if self.n_transient < 0 or self.n_record < 1 or self.n_lyap < 1:
            raise ValueError("budgets must satisfy n_transient >= 0, n_record >= 1, n_lyap >= 1")


@dataclass(frozen=True)
class SweepPoint:
    """Result at one grid value: the orbit record and the largest exponent.

    lambda1 is NaN when the orbit escaped before the Lyapunov estimate had
    its minimum number of steps.
    """

    value: float
    orbit: OrbitRecord
    lambda1: float


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    grid: np.ndarray
    points: tuple[SweepPoint, ...]


def _resolve_workers(workers: int | None, n_tasks: int) -> int:
    if workers is None:
        workers = os.cpu_count() or 1
    return max(1, min(workers, n_tasks))


def _eval_point(p: ModelParams, spec_like, value: float) -> SweepPoint:
    s = spec_like
    rec = iterate(
        p,
        s.s0,
        s.n_transient + s.n_record,
        s.n_transient,
        max_period=s.max_period,
        period_tol=s.period_tol,
    )
    if isinstance(rec.outcome, Escaped) and not rec.tail:
        # Escape during the transient: keep the last pre-escape state as a
        # single marker row so output carries a marker instead of a blank gap.
        pre = iterate(p, s.s0, rec.outcome.at_step, 0).tail
        if pre:
            rec = OrbitRecord(
                initial=rec.initial,
                transient_len=rec.outcome.at_step - 2,
                tail=pre[-1:],
                outcome=rec.outcome,
            )
    try:
        lam1 = lyapunov_spectrum(p, s.s0, s.n_transient, s.n_lyap).lambda1
    except EscapedTooEarly:
        lam1 = math.nan
    return SweepPoint(value=value, orbit=rec, lambda1=lam1)


def bifurcation_sweep(spec: SweepSpec, workers: int | None = None) -> SweepResult:
    """Evaluate orbit tail, period label and lambda1 at every grid value.

    Output ordering is by grid index; escape at a point is recorded in
    place and never aborts the sweep.
    """
    grid = grid_values(spec.lo, spec.hi, spec.n_points)

    def job(value: float) -> SweepPoint:
        p = replace(spec.base, **{spec.parameter: value})
        return _eval_point(p, spec, value)

    n_workers = _resolve_workers(workers, spec.n_points)
    if n_workers == 1:
        points = tuple(job(v) for v in grid)
    else:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            points = tuple(pool.map(job, grid))
    return SweepResult(spec=spec, grid=grid, points=points)


@dataclass(frozen=True)
class ChaosGridSpec:
    """Two-coupling scan: lambda1 over a (c2, c3) grid at one or more r2."""

    base: ModelParams
    c2_lo: float
    c2_hi: float
    c2_points: int
    c3_lo: float
    c3_hi: float
    c3_points: int
    r2_values: tuple[float, ...]
    s0: State
    n_transient: int = DEFAULT_TRANSIENT
    n_record: int = DEFAULT_RECORD
    n_lyap: int = SWEEP_STEPS
    max_period: int = MAX_PERIOD
    period_tol: float = PERIOD_TOL

    def __post_init__(self):
        _check_range(self.base, "c2", self.c2_lo, self.c2_hi, self.c2_points)
        _check_range(self.base, "c3", self.c3_lo, self.c3_hi, self.c3_points)
        if not self.r2_values:
            raise ValueError("r2_values must be non-empty")
        for v in self.r2_values:
            replace(self.base, r2=v)
        if self.n_transient < 0 or self.n_record < 1 or self.n_lyap < 1:
            raise ValueError("budgets must satisfy n_transient >= 0, n_record >= 1, n_lyap >= 1")


@dataclass(frozen=True)
class GridCell:
    c2: float
    c3: float
    r2: float
    lambda1: float
    label: str


@dataclass(frozen=True)
class ChaosGridResult:
    spec: ChaosGridSpec
    c2_grid: np.ndarray
    c3_grid: np.ndarray
    cells: tuple[GridCell, ...]


def outcome_label(outcome) -> str:
    if isinstance(outcome, Settled):
        return f"period-{outcome.period}"
    if isinstance(outcome, Escaped):
        return "escaped"
    return "aperiodic"


def chaos_grid(spec: ChaosGridSpec, workers: int | None = None) -> ChaosGridResult:
    """lambda1 plus period label over the (c2, c3) plane at fixed r2 values.

    Cells are ordered (r2 outer, c2 middle, c3 inner), deterministically
    regardless of worker count.
    """
    c2_grid = grid_values(spec.c2_lo, spec.c2_hi, spec.c2_points)
    c3_grid = grid_values(spec.c3_lo, spec.c3_hi, spec.c3_points)
    tasks = [(r2, c2, c3) for r2 in spec.r2_values for c2 in c2_grid for c3 in c3_grid]

    def job(task: tuple[float, float, float]) -> GridCell:
        r2, c2, c3 = task
        p = replace(spec.base, r2=r2, c2=c2, c3=c3)
        pt = _eval_point(p, spec, r2)
        return GridCell(
            c2=c2, c3=c3, r2=r2, lambda1=pt.lambda1, label=outcome_label(pt.orbit.outcome)
        )

    n_workers = _resolve_workers(workers, len(tasks))
    if n_workers == 1:
        cells = tuple(job(t) for t in tasks)
    else:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            cells = tuple(pool.map(job, tasks))
    return ChaosGridResult(spec=spec, c2_grid=c2_grid, c3_grid=c3_grid, cells=cells)
