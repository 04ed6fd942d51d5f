"""Orbit iteration, transient handling, escape detection and periodicity.

An orbit record keeps the post-transient window of an orbit together with
its detected outcome: settled on a k-cycle, aperiodic within the tested
period range, or escaped (any component beyond ESCAPE_THRESHOLD or
non-finite).  Escape is an outcome, not an error; the record is truncated
at the step where it was detected and never stores a non-finite state.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .dynamics import ModelParams, State

__all__ = [
    "Settled",
    "Aperiodic",
    "Escaped",
    "Outcome",
    "OrbitRecord",
    "iterate",
    "detect_period",
    "ESCAPE_THRESHOLD",
    "DEFAULT_TRANSIENT",
    "DEFAULT_RECORD",
    "PERIOD_TOL",
    "MAX_PERIOD",
]

ESCAPE_THRESHOLD = 1e6
DEFAULT_TRANSIENT = 400
DEFAULT_RECORD = 100
PERIOD_TOL = 1e-6
MAX_PERIOD = 64


@dataclass(frozen=True)
class Settled:
    period: int


@dataclass(frozen=True)
class Aperiodic:
    pass


@dataclass(frozen=True)
class Escaped:
    at_step: int


Outcome = Settled | Aperiodic | Escaped


@dataclass(frozen=True)
class OrbitRecord:
    """Post-transient window of one orbit.

    `tail` holds the states at global iteration indices
    transient_len + 1 ... transient_len + len(tail); for an escaped orbit
    it is truncated at the last finite pre-escape state (and may be empty
    if the orbit escaped during the transient).
    """

    initial: State
    transient_len: int
    tail: tuple[State, ...]
    outcome: Outcome

    @property
    def first_index(self) -> int:
        """Global iteration index of tail[0]."""
        return self.transient_len + 1

    def tail_array(self) -> np.ndarray:
        """Tail as a (len(tail), 2) float array."""
        a = np.empty((len(self.tail), 2))
        for i, s in enumerate(self.tail):
            a[i, 0] = s.x
            a[i, 1] = s.y
        return a


def _as_array(tail) -> np.ndarray:
    if isinstance(tail, np.ndarray):
        a = np.asarray(tail, dtype=float)
        if a.ndim != 2 or a.shape[1] != 2:
            raise ValueError(f"tail array must have shape (n, 2), got {a.shape}")
        return a
    return np.array([(s.x, s.y) for s in tail], dtype=float).reshape(-1, 2)


def detect_period(tail, max_period: int = MAX_PERIOD, period_tol: float = PERIOD_TOL) -> Outcome:
    """Smallest period k <= max_period under a relative sup-norm test.

    The tail is k-periodic when for every index i,
    ||tail[i] - tail[i+k]||_inf <= period_tol * (1 + ||tail[i]||_inf).
    Candidates are tried in increasing order, so the returned period is
    minimal.  Accepts a sequence of State or an (n, 2) array.
    """
    a = _as_array(tail)
    n = len(a)
    if n == 0:
        raise ValueError("tail must be non-empty")
    if max_period < 1:
        raise ValueError(f"max_period must be >= 1, got {max_period}")
    for k in range(1, min(max_period, n - 1) + 1):
        diffs = np.abs(a[:-k] - a[k:]).max(axis=1)
        scale = 1.0 + np.abs(a[:-k]).max(axis=1)
        if np.all(diffs <= period_tol * scale):
            return Settled(k)
    return Aperiodic()


def iterate(
    p: ModelParams,
    s0: State,
    n_total: int,
    n_transient: int,
    max_period: int = MAX_PERIOD,
    period_tol: float = PERIOD_TOL,
) -> OrbitRecord:
    """Apply the map n_total times from s0 and record the post-transient tail.

    The first n_transient generated states are discarded.  Escape (any
    component with |value| > ESCAPE_THRESHOLD, or non-finite) truncates the
    record at the offending step and yields an Escaped outcome; otherwise
    the tail is classified by detect_period.
    """
    if n_transient < 0 or n_total <= n_transient:
        raise ValueError(f"need n_total > n_transient >= 0, got {n_total}, {n_transient}")
    out = np.empty((n_total - n_transient, 2))
    n_rec, escaped, at_step = _kernels.orbit_kernel(
        p.r1, p.r2, p.c1, p.c2, p.c3, p.c4, s0.x, s0.y, n_total, n_transient, ESCAPE_THRESHOLD, out
    )
    tail = tuple(State(out[i, 0], out[i, 1]) for i in range(n_rec))
    if escaped:
        outcome: Outcome = Escaped(at_step)
    elif n_rec > 0:
        outcome = detect_period(out[:n_rec], max_period, period_tol)
    else:
        outcome = Aperiodic()
    return OrbitRecord(initial=s0, transient_len=n_transient, tail=tail, outcome=outcome)
