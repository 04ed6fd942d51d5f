"""Lyapunov spectrum of the map by Jacobian products with re-orthonormalization.

A direct product of Jacobians over- or underflows after a few hundred
steps, so the limit is evaluated the standard way: push an orthonormal
frame through the tangent dynamics, re-orthonormalize (Gram-Schmidt) every
step, and accumulate the log norms.  The per-step means converge to the
two exponents; the full running series is kept for convergence plots.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .dynamics import ModelParams, State
from .orbit import ESCAPE_THRESHOLD

__all__ = [
    "LyapunovResult",
    "EscapedTooEarly",
    "lyapunov_spectrum",
    "lambda_series",
    "LAMBDA_FLOOR",
    "MIN_STEPS",
    "DEFAULT_TRANSIENT",
    "DEFAULT_STEPS",
    "SWEEP_STEPS",
]

# Reported exponents are floored here; a super-stable orbit (zero
# eigenvalue somewhere along it) has a true exponent of -inf.
LAMBDA_FLOOR = -50.0
MIN_STEPS = 100
DEFAULT_TRANSIENT = 400
DEFAULT_STEPS = 100_000
# Cheaper per-point budget used inside parameter sweeps.
SWEEP_STEPS = 20_000


class EscapedTooEarly(RuntimeError):
    """Orbit escaped before MIN_STEPS post-transient steps completed."""


@dataclass(frozen=True)
class LyapunovResult:
    """Exponent pair (lambda1 >= lambda2) plus the running-estimate series.

    series has shape (n_used, 3) with columns (n, lambda1(n), lambda2(n));
    its last row equals (n_used, lambda1, lambda2).  escaped marks a
    partial result whose base orbit left the admissible region.
    """

    lambda1: float
    lambda2: float
    series: np.ndarray
    n_used: int
    escaped: bool


def lyapunov_spectrum(
    p: ModelParams,
    s0: State,
    n_transient: int = DEFAULT_TRANSIENT,
    n_iter: int = DEFAULT_STEPS,
) -> LyapunovResult:
    """Estimate both exponents over n_iter steps after an n_transient warm-up.

    The frame starts as the identity (axis-aligned unit vectors).  If the
    base orbit escapes, a partial result with escaped=True is returned,
    provided at least MIN_STEPS steps completed; otherwise EscapedTooEarly
    is raised.
    """
    if n_iter < 1:
        raise ValueError(f"n_iter must be >= 1, got {n_iter}")
    if n_transient < 0:
        raise ValueError(f"n_transient must be >= 0, got {n_transient}")
    lam1_series = np.empty(n_iter)
    lam2_series = np.empty(n_iter)
    lam1, lam2, n_used, escaped, at_step = _kernels.lyapunov_kernel(
        p.r1, p.r2, p.c1, p.c2, p.c3, p.c4,
        s0.x, s0.y,
        n_transient, n_iter,
        ESCAPE_THRESHOLD, LAMBDA_FLOOR,
        lam1_series, lam2_series,
    )
    if n_used < MIN_STEPS:
        raise EscapedTooEarly(
            f"orbit escaped at step {at_step} with only {n_used} post-transient steps "
            f"(need {MIN_STEPS})"
        )
    series = np.column_stack(
        (np.arange(1, n_used + 1, dtype=float), lam1_series[:n_used], lam2_series[:n_used])
    )
    return LyapunovResult(
        lambda1=lam1, lambda2=lam2, series=series, n_used=n_used, escaped=escaped
    )


def lambda_series(result: LyapunovResult, stride: int = 1) -> np.ndarray:
    """Running-estimate series downsampled by stride.

    Keeps rows with n divisible by stride and always includes the final
    row, so a convergence plot ends at the reported exponents.
    """
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    s = result.series
    keep = (s[:, 0] % stride) == 0
    keep[-1] = True
    return s[keep]
