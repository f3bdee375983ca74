"""Ground-truth inversion of I(a) = c and error sweeps over c-grids."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from heatinv.composite import ErrorReport, relative_error
from heatinv.errors import BracketError, DomainError, HeatInvError, ToleranceError
from heatinv.series import I_series

ROUND_TRIP_TOL = 1e-12


@dataclass(frozen=True)
class RootFindSpec:
    """Bracket and tolerances for :func:`true_a`."""

    a_lo: float = 1e-8
    a_hi: float = 50.0
    tol_a: float = 1e-13
    max_iter: int = 200

    def __post_init__(self):
        if not 0.0 < self.a_lo < self.a_hi:
            msg = "bracket must satisfy 0 < a_lo < a_hi"
            raise DomainError(msg)
        if not self.tol_a > 0:
            msg = "tol_a must be positive"
            raise DomainError(msg)
        if self.max_iter < 1:
            msg = "max_iter must be at least 1"
            raise DomainError(msg)


DEFAULT_ROOT_FIND = RootFindSpec()


def true_a(c: float, spec: RootFindSpec = DEFAULT_ROOT_FIND) -> float:
    """Numerically exact root of ``I(a) = c``.

    Brent's method (bisection with secant and inverse quadratic steps) on the
    exact series evaluators.

    Raises
    ------
    BracketError
        If ``c`` is outside ``(I(a_lo), I(a_hi))``.
    ToleranceError
        If the root misses ``|I(a) - c| <= 1e-12``.

    Examples
    --------
    >>> round(true_a(0.5), 5)
    0.37875
    """
    if not 0.0 < c < 1.0:
        msg = f"c must lie in (0, 1), got {c!r}"
        raise DomainError(msg)
    lo, hi = I_series(spec.a_lo) - c, I_series(spec.a_hi) - c
    if lo > 0 or hi < 0:
        msg = f"c={c!r} is outside the bracket [I({spec.a_lo}), I({spec.a_hi})]"
        raise BracketError(msg)
    if lo == 0:
        return spec.a_lo
    if hi == 0:
        return spec.a_hi
    a = brentq(
        lambda x: I_series(x) - c,
        spec.a_lo,
        spec.a_hi,
        xtol=spec.tol_a,
        rtol=4 * np.finfo(float).eps,
        maxiter=spec.max_iter,
    )
    if abs(I_series(a) - c) > ROUND_TRIP_TOL:
        msg = f"root a={a!r} misses I(a)=c by {abs(I_series(a) - c):.3g}"
        raise ToleranceError(msg)
    return a


def default_grid(n: int = 999) -> list[float]:
    """``n`` uniform points on ``(0, 1)`` with spacing ``1/(n+1)``; 999 gives 0.001..0.999."""
    if n < 1:
        msg = "grid needs at least one point"
        raise DomainError(msg)
    return [round((k + 1) / (n + 1), 12) for k in range(n)]


def _report(solver, c):
    try:
        return relative_error(c, solver(c))
    except HeatInvError as exc:
        nan = math.nan
        return ErrorReport(c, nan, nan, nan, error=f"{type(exc).__name__}: {exc}")


def error_sweep(scheme: str, c_grid, workers: int = 1) -> list[ErrorReport]:
    """Relative error of a named scheme at each grid point.

    Failures are recorded in the row's ``error`` field; the sweep never
    aborts. Output order follows ``c_grid`` regardless of ``workers``.
    """
    from heatinv.schemes import get_solver

    solver = get_solver(scheme)
    grid = [float(c) for c in c_grid]
    for c in grid:
        if not 0.0 < c < 1.0:
            msg = f"grid values must lie in (0, 1), got {c!r}"
            raise DomainError(msg)
    if any(b <= a for a, b in zip(grid, grid[1:])):
        msg = "grid must be strictly increasing"
        raise DomainError(msg)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda c: _report(solver, c), grid))
    return [_report(solver, c) for c in grid]
