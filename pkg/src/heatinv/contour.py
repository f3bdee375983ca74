"""Contour quadrature along the hyperbola k(r) = s (2 sinh r + i cosh r).

All integrals here have the form ``(i/pi) * int_C F(k) dk`` with ``F`` odd
under ``k -> -conj(k)``, so the exact value is real. Quadrature runs over the
real parameter ``r`` with composite Gauss-Legendre panels, doubling the panel
count until successive estimates agree to ``tol``.

The scale ``s`` is 1 (the plain hyperbola) for ``a <= 1``. For larger ``a``
the Gaussian factor reaches ``exp(a s^2)`` at ``r = 0`` and the sum cancels
down to an O(1) result, so the curve is shrunk to ``s = 1/sqrt(a)``. Any
``s > 0`` stays above the real poles and keeps the asymptotic directions, so
the value is unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np

from heatinv import _kernels
from heatinv.errors import DomainError, ToleranceError
from heatinv.series import BN_MAX_ORDER, I_erfc_sum, a_star

if TYPE_CHECKING:
    from heatinv.physics import DrainageScenario, InfiltrationScenario

GL_ORDER = 16
R_MIN, R_MAX = 2.0, 40.0
# eval_I switches to the erfc sum below this a
SMALL_A = 0.02

_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_legendre(order):
    if order not in _GL_CACHE:
        _GL_CACHE[order] = np.polynomial.legendre.leggauss(order)
    return _GL_CACHE[order]


@dataclass(frozen=True)
class QuadratureSpec:
    """Truncation and refinement controls for the contour quadrature.

    Parameters
    ----------
    r_max : float or None
        Truncation of the contour parameter to ``|r| <= r_max``. ``None``
        selects it per integrand from the Gaussian decay rate.
    n_nodes : int
        Nodes of the first estimate; refinement doubles it.
    tol : float
        Absolute tolerance between successive estimates.
    max_nodes : int
        Node budget; exceeding it raises :class:`ToleranceError`.
    """

    r_max: float | None = None
    n_nodes: int = 64
    tol: float = 1e-12
    max_nodes: int = 1 << 16

    def __post_init__(self):
        if self.r_max is not None and not self.r_max > 0:
            msg = "r_max must be positive"
            raise DomainError(msg)
        if self.n_nodes < 8:
            msg = "n_nodes must be at least 8"
            raise DomainError(msg)
        if not self.tol > 0:
            msg = "tol must be positive"
            raise DomainError(msg)


DEFAULT_QUADRATURE = QuadratureSpec()


@dataclass(frozen=True)
class DimensionlessPair:
    """A point (a, c) on the graph of I."""

    a: float
    c: float

    def __post_init__(self):
        if not self.a > 0:
            msg = f"a must be positive, got {self.a!r}"
            raise DomainError(msg)
        if not 0.0 < self.c < 1.0:
            msg = f"c must lie in (0, 1), got {self.c!r}"
            raise DomainError(msg)


def contour_scale(a: float) -> float:
    return 1.0 if a <= 1.0 else 1.0 / math.sqrt(a)


def hyperbola(r, scale=1.0):
    """Points ``k(r)`` and derivatives ``dk/dr`` on the scaled hyperbola."""
    r = np.asarray(r, dtype=float)
    k = scale * (2.0 * np.sinh(r) + 1j * np.cosh(r))
    dk = scale * (2.0 * np.cosh(r) + 1j * np.sinh(r))
    return k, dk


def integrand_bound(kind: int, a: float, scale: float, r: float, power: int = -1) -> float:
    """Upper bound on ``|F(k(r)) dk/dr|`` for the given integrand kind.

    ``power`` is the exponent of ``k`` multiplying ``1/cos k`` for the moment
    kind; the ratio kinds carry ``1/k``.
    """
    sh, ch = math.sinh(r), math.cosh(r)
    im_k = scale * ch
    gauss = math.exp(-a * scale * scale * (3.0 * sh * sh - 1.0))
    mod_k = scale * math.sqrt(4.0 * sh * sh + ch * ch)
    mod_dk = scale * math.sqrt(4.0 * ch * ch + sh * sh)
    damp = 1.0 - math.exp(-2.0 * im_k)
    if kind == _kernels.KIND_MOMENTS:
        factor = 2.0 * math.exp(-im_k) / damp * mod_k**power
    else:
        factor = 2.0 / damp / mod_k
    return gauss * factor * mod_dk


def truncation_radius(a: float, tol: float, kind: int = 0, power: int = -1, scale: float = 1.0) -> float:
    """Contour truncation making the integrand smaller than ``tol`` at the ends.

    Starts from ``asinh(sqrt((ln(1/tol) + ln(1/a)) / (3a)))`` with the
    effective coefficient ``a s^2``, clamped to ``[2, 40]``, and then grows in
    steps of 1/4 until :func:`integrand_bound` is below ``tol``.
    """
    a_eff = a * scale * scale
    if a_eff > 0:
        arg = (math.log(1.0 / tol) + math.log(1.0 / a_eff)) / (3.0 * a_eff)
        r = math.asinh(math.sqrt(max(arg, 0.0)))
    else:
        r = R_MIN
    r = min(max(r, R_MIN), R_MAX)
    while r < R_MAX and integrand_bound(kind, a, scale, r, power) >= tol:
        r += 0.25
    return min(r, R_MAX)


def _integrate(kind, a, scale, param, nmax, q, power):
    """Refined ``(1/pi) * raw`` integrals; caller applies the factor ``i``.

    Convergence is absolute for values below 1 and relative above, since
    the high moments at small ``a`` reach O(1e3) and carry rounding noise
    proportional to their size.
    """
    r_max = q.r_max if q.r_max is not None else truncation_radius(a, q.tol, kind, power, scale)
    order = min(GL_ORDER, q.n_nodes)
    gl_x, gl_w = _gauss_legendre(order)
    panels = max(1, q.n_nodes // order)
    prev = _kernels.hyperbola_integrals(kind, a, scale, param, nmax, r_max, panels, gl_x, gl_w) / math.pi
    while True:
        panels *= 2
        if panels * order > q.max_nodes:
            msg = (
                f"contour quadrature did not reach tol={q.tol:g} within {q.max_nodes} nodes "
                f"(a={a!r}, kind={kind})"
            )
            raise ToleranceError(msg)
        cur = _kernels.hyperbola_integrals(kind, a, scale, param, nmax, r_max, panels, gl_x, gl_w) / math.pi
        if np.all(np.abs(cur - prev) <= q.tol * np.maximum(1.0, np.abs(cur))):
            return cur
        prev = cur


def _real_part(raw, q, what):
    # (i/pi) * raw: real part is -Im(raw), residual is Re(raw)
    value = 1j * raw
    if abs(value.imag) > 10.0 * q.tol * max(1.0, abs(value.real)):
        msg = f"{what}: imaginary residual {value.imag:.3g} exceeds 10*tol"
        raise ToleranceError(msg)
    return float(value.real)


def eval_I(a: float, q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """I(a) = (i/pi) int_C exp(-a k^2) / (k cos k) dk.

    For ``a < 0.02`` the integrand is O(1) while the result is below 1e-5,
    so the alternating erfc sum is returned instead.
    """
    if not a > 0 or math.isinf(a):
        msg = f"a must be a positive finite number, got {a!r}"
        raise DomainError(msg)
    if a < SMALL_A:
        return I_erfc_sum(a)
    s = contour_scale(a)
    raw = _integrate(_kernels.KIND_MOMENTS, a, s, 0.0, 0, q, -1)
    # rounding can push the value a few ulp past 1 at large a
    return min(_real_part(raw[0], q, f"I({a!r})"), 1.0)


def vanishing_moment(n: int, q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """(i/pi) int_C k^(2n-1) / cos k dk on the unscaled hyperbola (exactly zero)."""
    if n < 0:
        msg = "n must be non-negative"
        raise DomainError(msg)
    raw = _integrate(_kernels.KIND_MOMENTS, 0.0, 1.0, 0.0, n, q, 2 * n - 1)
    return _real_part(raw[n], q, f"B_{n}")


@lru_cache(maxsize=4096)
def bn_all(c: float, q: QuadratureSpec = DEFAULT_QUADRATURE) -> tuple[float, ...]:
    """All coefficients b_0..b_4 at ``c`` from one quadrature pass (cached)."""
    if not 0.0 < c < 1.0:
        msg = f"c must lie in (0, 1), got {c!r}"
        raise DomainError(msg)
    a = a_star(c)
    s = contour_scale(a)
    raw = _integrate(_kernels.KIND_MOMENTS, a, s, 0.0, BN_MAX_ORDER, q, 2 * BN_MAX_ORDER - 1)
    return tuple(
        _real_part(raw[n], q, f"b_{n}({c!r})") / math.factorial(n) for n in range(BN_MAX_ORDER + 1)
    )


def eval_bn(n: int, c: float, q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """b_n(c) = (i/pi)(1/n!) int_C exp(-a* k^2) k^(2n-1) / cos k dk with a* = a*(c)."""
    if not 0 <= n <= BN_MAX_ORDER:
        msg = f"b_n is available for 0 <= n <= {BN_MAX_ORDER}, got {n}"
        raise DomainError(msg)
    return bn_all(float(c), q)[n]


def eval_h(x: float, t: float, s: DrainageScenario, q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Water-table height h(x, t) in metres.

    Evaluated in the variable ``k = lambda L``: with ``a = A t / L^2`` and
    ``xi = x / L``::

        h = d + h0 - h0 (i/pi) int_C exp(-a k^2) cos(k (xi - 1)) / (k cos k) dk

    so ``h(L, t) = d + h0 (1 - I(a))``.
    """
    L = s.L
    A = s.diffusion_coefficient
    if L is None or not L > 0:
        msg = "scenario needs a positive half spacing L"
        raise DomainError(msg)
    if not 0.0 <= x <= L:
        msg = f"x must lie in [0, L={L}], got {x!r}"
        raise DomainError(msg)
    if not t > 0:
        msg = f"t must be positive, got {t!r}"
        raise DomainError(msg)
    a = A * t / (L * L)
    raw = _integrate(_kernels.KIND_COS_RATIO, a, contour_scale(a), x / L - 1.0, 0, q, -1)
    frac = _real_part(raw[0], q, "h(x,t)")
    h = s.d + s.h0 - s.h0 * frac
    return min(max(h, s.d), s.d + s.h0)


def eval_theta(x: float, t: float, s: InfiltrationScenario, q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Moisture content theta(x, t) in cm^3/cm^3.

    With ``a = D0 t / L^2`` and ``xi = x / L``::

        theta = theta0 + (theta1 - theta0) (i/pi) int_C exp(-a k^2) sin(k (1 - xi)) / (k sin k) dk
    """
    L = s.L
    if s.D0 is None or not s.D0 > 0:
        msg = "scenario needs a positive diffusivity D0"
        raise DomainError(msg)
    if not 0.0 <= x <= L:
        msg = f"x must lie in [0, L={L}], got {x!r}"
        raise DomainError(msg)
    if not t > 0:
        msg = f"t must be positive, got {t!r}"
        raise DomainError(msg)
    if x == L:
        return s.theta0
    a = s.D0 * t / (L * L)
    raw = _integrate(_kernels.KIND_SIN_RATIO, a, contour_scale(a), 1.0 - x / L, 0, q, -1)
    frac = _real_part(raw[0], q, "theta(x,t)")
    theta = s.theta0 + (s.theta1 - s.theta0) * frac
    return min(max(theta, s.theta0), s.theta1)
