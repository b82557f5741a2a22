"""Composite Simpson quadrature on the run grid.

The run grids always carry an even number of uniform intervals, so the
cumulative rule pairs intervals exactly; odd interior nodes get a trapezoid
half-step (plot-quality only).  The final cumulative entry IS the composite
Simpson total; callers that need the scalar take cumulative[-1] so the two
never disagree bitwise.
"""

from __future__ import annotations

import numpy as np


def cumulative_simpson(y: np.ndarray, dx: float) -> np.ndarray:
    y = np.asarray(y, dtype=float)
    n = y.shape[0] - 1
    if n < 2 or n % 2:
        raise ValueError(f"need an even number >= 2 of intervals, got {n}")
    if dx <= 0:
        raise ValueError("dx must be positive")
    pair = (dx / 3.0) * (y[0:-2:2] + 4.0 * y[1:-1:2] + y[2::2])
    out = np.empty_like(y)
    out[0] = 0.0
    even = np.cumsum(pair)
    out[2::2] = even
    out[1::2] = out[0:-1:2] + (0.5 * dx) * (y[0:-1:2] + y[1::2])
    return out


def composite_simpson(y: np.ndarray, dx: float) -> float:
    return float(cumulative_simpson(y, dx)[-1])
