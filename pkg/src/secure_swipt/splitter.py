"""Power-splitting ratio search.

The secrecy outage capacity is not concave in theta, so the search is a
fixed-step scan over [0, 1]; golden-section refinement is only applied
inside the bracket around the best grid point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .capacity import c_soc_of_theta
from .params import SystemParams, derive_coeffs

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SplitResult:
    theta_star: float
    c_soc_star: float
    evaluations: int


def theta_grid(grid_step: float) -> np.ndarray:
    n = int(math.floor(1.0 / grid_step + 1e-9))
    grid = np.arange(n + 1, dtype=np.float64) * grid_step
    if grid[-1] < 1.0 - 1e-12:
        grid = np.append(grid, 1.0)
    else:
        grid[-1] = 1.0
    return grid


def golden_section_max(f, lo: float, hi: float, tol: float = 1e-12, max_iter: int = 200):
    """Maximize a unimodal ``f`` on [lo, hi]. Returns (x, f(x), evaluations)."""
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1 = f(x1)
    f2 = f(x2)
    evals = 2
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = f(x1)
        evals += 1
    if f1 >= f2:
        return x1, f1, evals
    return x2, f2, evals


def optimize_theta(p: SystemParams, grid_step: float = 1e-3, refine: bool = True) -> SplitResult:
    """Maximize the closed-form secrecy outage capacity over theta (``p.theta`` is ignored)."""
    if not 0.0 < grid_step <= 0.01:
        raise ValueError(f"grid_step={grid_step!r} must lie in (0, 0.01]")
    coeffs = derive_coeffs(p)
    grid = theta_grid(grid_step)
    values = c_soc_of_theta(p, grid, coeffs)
    best = int(np.argmax(values))
    theta_star = float(grid[best])
    c_star = float(values[best])
    evaluations = grid.size

    if refine and c_star > 0.0:
        lo = max(0.0, theta_star - grid_step)
        hi = min(1.0, theta_star + grid_step)
        x, fx, n = golden_section_max(lambda t: c_soc_of_theta(p, t, coeffs), lo, hi)
        evaluations += n
        if fx > c_star:
            theta_star, c_star = float(x), float(fx)

    return SplitResult(theta_star=theta_star, c_soc_star=c_star, evaluations=evaluations)
