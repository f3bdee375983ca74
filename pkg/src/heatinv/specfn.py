"""Special functions used by the inversion formulas.

Only real arguments are supported: ``erfc`` on the whole line, its inverse on
``(0, 2)``, and the principal Lambert W branch on ``[0, inf)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from heatinv.errors import DomainError

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)
# erfc(27.3) underflows to zero in binary64
_X_LIMIT = 27.3


@dataclass(frozen=True)
class SpecFnConfig:
    """Iteration controls shared by :func:`erfc_inv` and :func:`lambert_w0`."""

    newton_tol: float = 1e-15
    max_iter: int = 100

    def __post_init__(self):
        if not self.newton_tol > 0:
            msg = "newton_tol must be positive"
            raise DomainError(msg)
        if self.max_iter < 1:
            msg = "max_iter must be at least 1"
            raise DomainError(msg)


DEFAULT_CONFIG = SpecFnConfig()


def erfc(x: float) -> float:
    """Complementary error function ``(2/sqrt(pi)) * int_x^inf exp(-z^2) dz``."""
    return math.erfc(x)


def _erfc_inv_seed(y: float) -> float:
    # y <= 1 here; two regimes glued at y = 0.3
    if y > 0.3:
        z = 1.0 - y
        return 0.5 * math.sqrt(math.pi) * z * (1.0 + math.pi * z * z / 12.0)
    big = -math.log(y)
    return math.sqrt(max(big - 0.5 * math.log(math.pi * max(big, 1.0)), 0.25))


def _erfc_inv_bisect(y: float) -> float:
    lo, hi = -_X_LIMIT, _X_LIMIT
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if erfc(mid) > y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def erfc_inv(y: float, config: SpecFnConfig = DEFAULT_CONFIG) -> float:
    """Inverse complementary error function on ``0 < y < 2``.

    Newton iteration on ``erfc(x) - y`` from a two-regime seed. Newton is
    monotone for the convex branch ``x > 0``; if an iterate leaves
    ``(-6, 6)`` or the iteration stalls, the root is bracketed and bisected
    instead.

    Raises
    ------
    DomainError
        If ``y`` is not strictly inside ``(0, 2)``.
    """
    y = float(y)
    if not 0.0 < y < 2.0:
        msg = f"erfc_inv requires 0 < y < 2, got {y!r}"
        raise DomainError(msg)
    if y == 1.0:
        return 0.0
    if y > 1.0:
        return -erfc_inv(2.0 - y, config)

    x = _erfc_inv_seed(y)
    for _ in range(config.max_iter):
        if not -6.0 < x < 6.0:
            return _erfc_inv_bisect(y)
        slope = -_TWO_OVER_SQRT_PI * math.exp(-x * x)
        step = (erfc(x) - y) / slope
        x -= step
        if abs(step) <= config.newton_tol * max(1.0, abs(x)):
            break
    else:
        return _erfc_inv_bisect(y)
    if not -6.0 < x < 6.0:
        return _erfc_inv_bisect(y)
    return x


def lambert_w0(x: float, config: SpecFnConfig = DEFAULT_CONFIG) -> float:
    """Principal branch of the Lambert W function for ``x >= 0``.

    Halley iteration seeded with ``log1p(x)``. Above ``1e300`` the update
    switches to Newton on ``w + log(w) = log(x)`` so ``exp(w)`` cannot
    overflow.
    """
    x = float(x)
    if not x >= 0.0:
        msg = f"lambert_w0 requires x >= 0, got {x!r}"
        raise DomainError(msg)
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf

    w = math.log1p(x)
    if x > 1e300:
        log_x = math.log(x)
        for _ in range(config.max_iter):
            step = (w + math.log(w) - log_x) / (1.0 + 1.0 / w)
            w -= step
            if abs(step) <= config.newton_tol * w:
                break
        return w

    for _ in range(config.max_iter):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= step
        if abs(step) <= config.newton_tol * max(1.0, abs(w)):
            break
    return w
