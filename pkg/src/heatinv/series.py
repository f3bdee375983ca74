"""Series representations of I(a).

Two exact representations are provided:

* the pole-residue (Fourier-type) series, fast for moderate and large ``a``;
* the alternating erfc sum, fast for small ``a``.

They are independent evaluators of the same function and serve as oracles
for the contour quadrature. :func:`eval_bn_residue` gives the residue form of
the epsilon-expansion coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from heatinv import _kernels
from heatinv.errors import DomainError, TruncationError

# Below this a the erfc sum needs fewer terms than the Fourier series.
SERIES_CROSSOVER = 0.05
BN_MAX_ORDER = 4


@dataclass(frozen=True)
class SeriesTruncation:
    """Stopping rule for the series evaluators.

    The Fourier series stops once the next term drops below ``term_tol``
    (absolute, since the result is ``1 - sum``); the erfc sum stops once
    the next term is below ``term_tol`` relative to the partial sum.
    """

    term_tol: float = 1e-16
    max_terms: int = 10000

    def __post_init__(self):
        if not self.term_tol > 0:
            msg = "term_tol must be positive"
            raise DomainError(msg)
        if self.max_terms < 1:
            msg = "max_terms must be at least 1"
            raise DomainError(msg)


DEFAULT_TRUNCATION = SeriesTruncation()


def pole(m: int) -> float:
    """Location of the m-th positive zero of cos k."""
    return 0.5 * math.pi + m * math.pi


def a_star(c: float) -> float:
    """First-order estimate (4/pi^2) ln(4 / (pi (1 - c)))."""
    return 4.0 / math.pi**2 * math.log(4.0 / (math.pi * (1.0 - c)))


def _check_a(a):
    if not a > 0 or math.isinf(a):
        msg = f"a must be a positive finite number, got {a!r}"
        raise DomainError(msg)


def I_fourier(a: float, tr: SeriesTruncation = DEFAULT_TRUNCATION) -> float:
    """Residue series ``1 - sum_n (-1)^n exp(-(2n+1)^2 pi^2 a/4) / ((2n+1) pi/4)``."""
    _check_a(a)
    value, used, ok = _kernels.fourier_sum(float(a), tr.term_tol, tr.max_terms)
    if not ok:
        msg = f"Fourier series for a={a!r} did not reach term_tol in {used} terms"
        raise TruncationError(msg)
    return value


def I_erfc_sum(a: float, tr: SeriesTruncation = DEFAULT_TRUNCATION) -> float:
    """Alternating sum ``2 sum_m (-1)^m erfc((2m+1) / (2 sqrt(a)))``."""
    _check_a(a)
    value, used, ok = _kernels.erfc_sum(float(a), tr.term_tol, tr.max_terms)
    if not ok:
        msg = f"erfc sum for a={a!r} did not reach term_tol in {used} terms"
        raise TruncationError(msg)
    return value


def I_series(a: float, tr: SeriesTruncation = DEFAULT_TRUNCATION) -> float:
    """Exact I(a), choosing the cheaper of the two series."""
    if a < SERIES_CROSSOVER:
        return I_erfc_sum(a, tr)
    return I_fourier(a, tr)


def eval_bn_residue(n: int, c: float, tr: SeriesTruncation = DEFAULT_TRUNCATION) -> float:
    """Coefficient b_n(c) of the epsilon expansion, summed over the poles of 1/cos k.

    Deforming the contour onto the real axis leaves half-residues at
    ``±k_m``; the residue of ``1/cos k`` at ``k_m = pi/2 + m pi`` is
    ``(-1)^(m+1)`` and the two mirror poles contribute equally, so for
    ``n >= 1``::

        b_n = (2/n!) sum_m (-1)^(m+1) k_m^(2n-1) exp(-a* k_m^2)

    For ``n = 0`` the extra pole at the origin turns this into the Fourier
    series evaluated at ``a*``.
    """
    if not 0 <= n <= BN_MAX_ORDER:
        msg = f"b_n is available for 0 <= n <= {BN_MAX_ORDER}, got {n}"
        raise DomainError(msg)
    if not 0.0 < c < 1.0:
        msg = f"c must lie in (0, 1), got {c!r}"
        raise DomainError(msg)
    a = a_star(c)
    if n == 0:
        return I_fourier(a, tr)

    power = 2 * n - 1
    # terms rise until k_m^2 ~ power / (2a), then decay
    k_peak = math.sqrt(power / (2.0 * a))
    total = 0.0
    for m in range(tr.max_terms):
        k = pole(m)
        term = k**power * math.exp(-a * k * k)
        total += -term if m % 2 == 0 else term
        if k > k_peak and term < tr.term_tol * max(abs(total), 1e-300):
            return 2.0 * total / math.factorial(n)
    msg = f"residue series for b_{n}({c!r}) did not converge"
    raise TruncationError(msg)
