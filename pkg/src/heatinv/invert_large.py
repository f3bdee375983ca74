"""Inverse schemes for large a (c toward 1).

The leading pole term gives ``I(a) ~ 1 - (4/pi) w`` with
``w = exp(-pi^2 a / 4)``. Keeping ``N + 1`` poles and writing
``gamma = (pi/4)(1 - c)`` turns ``I(a) = c`` into

    sum_{n=0}^{N} (-1)^n w^((2n+1)^2) / (2n+1) = gamma,

which is inverted by Lagrange-Buermann series in ``gamma^8``. The
epsilon schemes instead expand ``I(a* - eps)`` in powers of ``eps`` around
the first-order estimate ``a*`` and solve the resulting polynomial.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from heatinv.contour import DEFAULT_QUADRATURE, QuadratureSpec, eval_bn
from heatinv.errors import DiscriminantError, DomainError, UnsupportedOrderError
from heatinv.series import a_star

MAX_ORDER = 3

PAPER_G = (
    Fraction(1, 3),
    Fraction(1),
    Fraction(62, 15),
    Fraction(2669, 135),
    Fraction(13846, 135),
    Fraction(317783, 567),
)
PAPER_F = (
    Fraction(1, 3),
    Fraction(17, 18),
    Fraction(1544, 405),
    Fraction(29161, 1620),
    Fraction(112504, 1215),
    Fraction(192488308, 382725),
)

_FOUR_OVER_PI2 = 4.0 / math.pi**2


def _check_c(c):
    if not 0.0 < c < 1.0:
        msg = f"c must lie in (0, 1), got {c!r}"
        raise DomainError(msg)


def _check_order(N):
    if not isinstance(N, int) or not 0 <= N <= MAX_ORDER:
        msg = f"inversion order N must be an integer in [0, {MAX_ORDER}], got {N!r}"
        raise UnsupportedOrderError(msg)


@dataclass(frozen=True)
class InversionCoefficients:
    """Exact Lagrange-Buermann coefficients for truncation order ``N``.

    Attributes
    ----------
    N : int
        Number of retained correction poles.
    M : int
        ``N (N + 1) / 2``, the number of correction terms.
    g : tuple of Fraction
        ``g_0 = 1, g_1, ..., g_M`` with ``w = sum g_n gamma^(8n+1)``.
    f : tuple of Fraction
        ``f_1, ..., f_M`` with
        ``a = (4/pi^2) [ln(4/(pi (1-c))) - sum f_n gamma^(8n)]``.
    """

    N: int
    M: int
    g: tuple[Fraction, ...]
    f: tuple[Fraction, ...]

    def __post_init__(self):
        if self.M != self.N * (self.N + 1) // 2:
            msg = "M must equal N(N+1)/2"
            raise DomainError(msg)
        if len(self.g) != self.M + 1 or self.g[0] != 1:
            msg = "g must hold M+1 entries with g_0 = 1"
            raise DomainError(msg)
        if len(self.f) != self.M:
            msg = "f must hold M entries"
            raise DomainError(msg)


# truncated power series in y, as lists of Fractions of fixed length


def _mul(p, q):
    n = len(p)
    out = [Fraction(0)] * n
    for i, pi_ in enumerate(p):
        if pi_:
            for j in range(n - i):
                out[i + j] += pi_ * q[j]
    return out


def _reciprocal(p):
    n = len(p)
    out = [Fraction(0)] * n
    out[0] = 1 / p[0]
    for k in range(1, n):
        out[k] = -sum(p[j] * out[k - j] for j in range(1, k + 1)) / p[0]
    return out


def _power(p, e):
    result = [Fraction(1)] + [Fraction(0)] * (len(p) - 1)
    base = p if e >= 0 else _reciprocal(p)
    e = abs(e)
    while e:
        if e & 1:
            result = _mul(result, base)
        base = _mul(base, base)
        e >>= 1
    return result


def phi_series(N: int, length: int) -> list[Fraction]:
    """Coefficients of ``phi(y) = 1 + sum_{n=1}^N (-1)^n y^(n(n+1)/2) / (2n+1)``."""
    out = [Fraction(0)] * length
    out[0] = Fraction(1)
    for n in range(1, N + 1):
        t = n * (n + 1) // 2
        if t < length:
            out[t] += Fraction((-1) ** n, 2 * n + 1)
    return out


@lru_cache(maxsize=None)
def gen_inversion_coeffs(N: int) -> InversionCoefficients:
    """Generate exact g_n and f_n for order ``N`` by Lagrange-Buermann inversion.

    With ``y = w^8`` and ``x = gamma^8`` the equation reads
    ``w phi(y) = gamma``, i.e. ``y = x phi(y)^-8``. Lagrange's formula then
    gives

        g_m = -(1/m) [y^(m-1)] phi'(y) phi(y)^-(8m+2)
        f_m = -(1/m) [y^(m-1)] phi'(y) phi(y)^-(8m+1)

    as the coefficients of ``w / gamma = 1/phi(y)`` and of
    ``ln(w / gamma) = -ln phi(y)`` in powers of ``x``.

    Raises
    ------
    UnsupportedOrderError
        If ``N`` is not in ``[0, 3]``.
    """
    _check_order(N)
    M = N * (N + 1) // 2
    length = max(M, 1)
    phi = phi_series(N, length + 1)
    dphi = [k * phi[k] for k in range(1, length + 1)]
    phi = phi[:length]
    g = [Fraction(1)]
    f = []
    for m in range(1, M + 1):
        g.append(-_mul(dphi, _power(phi, -(8 * m + 2)))[m - 1] / m)
        f.append(-_mul(dphi, _power(phi, -(8 * m + 1)))[m - 1] / m)
    return InversionCoefficients(N=N, M=M, g=tuple(g), f=tuple(f))


def substitution_residual(N: int, gamma: Fraction) -> Fraction:
    """Exact residual of the truncated inverse substituted back into the forward map.

    Evaluates ``sum_n (-1)^n w^((2n+1)^2)/(2n+1) - gamma`` at
    ``w = sum_{n=0}^{M} g_n gamma^(8n+1)``. The residual is
    ``O(gamma^(8M+9))`` when the coefficients are right.
    """
    coeffs = gen_inversion_coeffs(N)
    gamma = Fraction(gamma)
    w = sum(gn * gamma ** (8 * n + 1) for n, gn in enumerate(coeffs.g))
    lhs = sum(Fraction((-1) ** n, 2 * n + 1) * w ** ((2 * n + 1) ** 2) for n in range(N + 1))
    return lhs - gamma


def _log_fraction(x: Fraction) -> float:
    return math.log(x.numerator) - math.log(x.denominator)


def residual_slope(N: int, gammas=(Fraction(1, 100), Fraction(10**-2.5), Fraction(1, 1000))) -> float:
    """Least-squares slope of ``log|residual|`` against ``log gamma``.

    Returns ``inf`` when the residual vanishes identically (``N = 0``).
    """
    pts = []
    for gm in gammas:
        res = abs(substitution_residual(N, gm))
        if res == 0:
            return math.inf
        pts.append((_log_fraction(Fraction(gm)), _log_fraction(res)))
    mx = sum(p[0] for p in pts) / len(pts)
    my = sum(p[1] for p in pts) / len(pts)
    num = sum((x - mx) * (y - my) for x, y in pts)
    den = sum((x - mx) ** 2 for x, _ in pts)
    return num / den


def invert_first_order(c: float) -> float:
    """First-order (Glover-Dumm) inverse ``(4/pi^2) ln(4 / (pi (1 - c)))``.

    Exact for the leading pole only; negative for ``c < 1 - 4/pi``.

    Examples
    --------
    >>> round(invert_first_order(0.531), 3)
    0.405
    """
    _check_c(c)
    return a_star(c)


def invert_fourier_N(c: float, N: int, n_terms: int | None = None) -> float:
    """Order-N Lagrange-Buermann inverse.

    Parameters
    ----------
    c : float
        Target value in (0, 1).
    N : int
        Truncation order in ``[0, 3]``; uses ``M = N(N+1)/2`` correction terms.
    n_terms : int, optional
        Override the number of ``f_n`` terms (at most ``M``).
    """
    _check_c(c)
    coeffs = gen_inversion_coeffs(N)
    m = coeffs.M if n_terms is None else n_terms
    if not 0 <= m <= coeffs.M:
        msg = f"n_terms must lie in [0, {coeffs.M}] for N={N}, got {n_terms!r}"
        raise DomainError(msg)
    x = (0.25 * math.pi * (1.0 - c)) ** 8
    corr = 0.0
    for fn in reversed(coeffs.f[:m]):
        corr = (corr + float(fn)) * x
    return a_star(c) - _FOUR_OVER_PI2 * corr


# quartic solver


def _cbrt(z: complex) -> complex:
    if z == 0:
        return 0j
    return cmath.exp(cmath.log(z) / 3.0)


def solve_quartic(coeffs) -> list[complex]:
    """All four roots of ``e4 x^4 + e3 x^3 + e2 x^2 + e1 x + e0`` by Ferrari's method.

    ``coeffs`` is ordered from the constant term upward. Each root gets
    two Newton steps on the original polynomial.
    """
    e0, e1, e2, e3, e4 = (complex(v) for v in coeffs)
    if e4 == 0:
        msg = "leading quartic coefficient is zero"
        raise DomainError(msg)
    B, C, D, E = e3 / e4, e2 / e4, e1 / e4, e0 / e4
    # depressed quartic y^4 + p y^2 + q y + r with x = y - B/4
    p = C - 3 * B * B / 8
    q = D - B * C / 2 + B**3 / 8
    r = E - B * D / 4 + B * B * C / 16 - 3 * B**4 / 256
    shift = -B / 4
    scale = max(abs(p), abs(r) ** 0.5, 1e-300)
    s = 0j
    if abs(q) > 1e-14 * scale**1.5:
        # resolvent cubic m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0, Cardano
        a2, a1, a0 = p, (p * p / 4 - r), -q * q / 8
        pp = a1 - a2 * a2 / 3
        qq = 2 * a2**3 / 27 - a2 * a1 / 3 + a0
        disc = cmath.sqrt(qq * qq / 4 + pp**3 / 27)
        # sign choice avoids cancellation in -qq/2 + disc
        if (-qq / 2 * disc.conjugate()).real < 0:
            disc = -disc
        u = _cbrt(-qq / 2 + disc)
        # any resolvent root works; the largest keeps s away from zero
        cands = [-a2 / 3]
        if u != 0:
            omega = cmath.exp(2j * math.pi / 3)
            cands = [u * omega**j - pp / (3 * u * omega**j) - a2 / 3 for j in range(3)]
        m = max(cands, key=abs)
        s = cmath.sqrt(2 * m)
    if s == 0:
        # q is negligible: biquadratic in y^2
        roots = []
        for z in (
            (-p + cmath.sqrt(p * p - 4 * r)) / 2,
            (-p - cmath.sqrt(p * p - 4 * r)) / 2,
        ):
            w = cmath.sqrt(z)
            roots += [w + shift, -w + shift]
    else:
        roots = []
        for sign in (1, -1):
            t = -(2 * p + 2 * m + sign * 2 * q / s)
            rt = cmath.sqrt(t)
            roots += [(sign * s + rt) / 2 + shift, (sign * s - rt) / 2 + shift]
    return [_polish(coeffs, z) for z in roots]


def _horner(coeffs, z):
    f = df = 0j
    for k in range(len(coeffs) - 1, -1, -1):
        df = df * z + f
        f = f * z + coeffs[k]
    return f, df


def _polish(coeffs, z, steps=2):
    # Newton steps that only clean up rounding noise: small steps that
    # shrink the residual (near a multiple root a full step can land on a
    # different root)
    f, df = _horner(coeffs, z)
    for _ in range(steps):
        if df == 0:
            break
        step = f / df
        if abs(step) > 1e-4 * max(1.0, abs(z)):
            break
        trial = z - step
        ft, dft = _horner(coeffs, trial)
        if abs(ft) >= abs(f):
            break
        z, f, df = trial, ft, dft
    return z


@dataclass(frozen=True)
class EpsilonExpansion:
    """Truncated expansion ``I(a* - eps) = sum_{n=0}^{K} b_n eps^n``.

    Attributes
    ----------
    a_star : float
        First-order estimate at the generating ``c``.
    b : tuple of float
        ``b_0 .. b_K``.
    K : int
        Polynomial degree, 2 or 4.
    slack : float
        Roots in ``(-slack, 0]`` are accepted. Near ``c = 1`` the true
        ``eps`` is below the rounding noise of ``b_0 - c``.
    """

    a_star: float
    b: tuple[float, ...]
    K: int
    slack: float = 1e-10

    def __post_init__(self):
        if self.K not in (2, 4):
            msg = f"K must be 2 or 4, got {self.K!r}"
            raise UnsupportedOrderError(msg)
        if len(self.b) != self.K + 1:
            msg = "b must hold K+1 coefficients"
            raise DomainError(msg)
        if not self.a_star > 0:
            msg = "a_star must be positive"
            raise DomainError(msg)

    @classmethod
    def at(cls, c: float, K: int, q: QuadratureSpec = DEFAULT_QUADRATURE) -> EpsilonExpansion:
        _check_c(c)
        return cls(a_star=a_star(c), b=tuple(eval_bn(n, c, q) for n in range(K + 1)), K=K)

    def solve(self, c: float) -> float:
        """Root ``eps`` in ``(0, a*)`` of ``sum b_n eps^n = c``."""
        b = self.b
        if self.K == 2:
            D = b[1] * b[1] - 4.0 * b[2] * (b[0] - c)
            if D < 0:
                msg = f"quadratic discriminant is negative at c={c!r}"
                raise DiscriminantError(msg)
            # the minus root, written without cancellation
            den = math.sqrt(D) - b[1]
            eps = 2.0 * (b[0] - c) / den if den != 0 else math.nan
            if not -self.slack < eps < self.a_star:
                msg = f"quadratic root eps={eps!r} outside (0, a*={self.a_star!r}) at c={c!r}"
                raise DiscriminantError(msg)
            return eps
        coeffs = [b[0] - c, b[1], b[2], b[3], b[4]]
        roots = solve_quartic(coeffs)
        cands = [z.real for z in roots if abs(z.imag) < 1e-9 and -self.slack < z.real < self.a_star]
        if not cands:
            msg = f"no real quartic root in (0, a*={self.a_star!r}) at c={c!r}"
            raise DiscriminantError(msg)
        return min(cands)


def invert_epsilon_poly(c: float, K: int = 2, q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Quadratic (``K=2``) or quartic (``K=4``) epsilon-expansion inverse.

    The coefficients ``b_n`` come from contour quadrature and are cached
    per ``c``.

    Raises
    ------
    DiscriminantError
        If no admissible real root exists, which signals ``c`` below the
        scheme's range.
    """
    if K not in (2, 4):
        msg = f"K must be 2 or 4, got {K!r}"
        raise UnsupportedOrderError(msg)
    exp = EpsilonExpansion.at(c, K, q)
    return exp.a_star - exp.solve(c)
