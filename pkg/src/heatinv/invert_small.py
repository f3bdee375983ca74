"""Inverse schemes for small a (c toward 0).

For small ``a`` only the first term of ``I(a) = 2 sum (-1)^m erfc((2m+1)/(2 sqrt a))``
matters, so ``c ~ 2 erfc(1 / (2 sqrt a))``. The schemes below invert this
leading term exactly, through its Lambert-W asymptotics, or through the
expansion in ``P = ln(2 / (c sqrt(pi)))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from heatinv.errors import DomainError
from heatinv.specfn import erfc_inv, lambert_w0

_SQRT_PI = math.sqrt(math.pi)


def _check_c(c):
    if not 0.0 < c < 1.0:
        msg = f"c must lie in (0, 1), got {c!r}"
        raise DomainError(msg)


@dataclass(frozen=True)
class PExpansionTerms:
    """Bracket terms of the P-expansion.

    Parameters
    ----------
    P : float
        ``ln(2 / (c sqrt(pi)))``; must exceed 1.
    order : int
        Number of bracket terms kept, 1 to 3.
    """

    P: float
    order: int = 3

    def __post_init__(self):
        if not self.P > 1.0:
            msg = f"P-expansion needs P > 1, got P={self.P!r}"
            raise DomainError(msg)
        if self.order not in (1, 2, 3):
            msg = f"order must be 1, 2 or 3, got {self.order!r}"
            raise DomainError(msg)

    @classmethod
    def from_c(cls, c: float, order: int = 3) -> PExpansionTerms:
        _check_c(c)
        return cls(P=math.log(2.0 / (c * _SQRT_PI)), order=order)

    def terms(self) -> tuple[float, ...]:
        P = self.P
        lp = math.log(P)
        full = (1.0, lp / (2.0 * P), (lp * lp - lp + 2.0) / (4.0 * P * P))
        return full[: self.order]

    def value(self) -> float:
        return sum(self.terms()) / (4.0 * self.P)


def invert_erfc(c: float) -> float:
    """Exact inverse of the leading term: ``1 / (4 erfc^-1(c/2)^2)``.

    Examples
    --------
    >>> round(invert_erfc(0.295), 3)
    0.238
    """
    _check_c(c)
    x = erfc_inv(0.5 * c)
    return 1.0 / (4.0 * x * x)


def invert_lambert(c: float, use_w: bool = False) -> float:
    """Lambert-W scheme ``1 / (2 W(X))`` with ``X = 8 / (pi c^2)``.

    By default returns the explicit log-log form
    ``1 / (2 ln(X / ln X))``; ``use_w=True`` evaluates W directly.
    """
    _check_c(c)
    X = 8.0 / (math.pi * c * c)
    if use_w:
        return 1.0 / (2.0 * lambert_w0(X))
    inner = X / math.log(X)
    if not inner > 1.0:
        msg = f"log-log form needs X/ln X > 1, got {inner!r} at c={c!r}"
        raise DomainError(msg)
    return 1.0 / (2.0 * math.log(inner))


def invert_p_expansion(c: float, order: int = 3) -> float:
    """Three-term expansion ``(1/4P)(1 + ln P/(2P) + (ln^2 P - ln P + 2)/(4P^2))``.

    Raises
    ------
    DomainError
        If ``P <= 1`` (``c`` above about 0.415).
    """
    return PExpansionTerms.from_c(c, order).value()


def w_asymptote(c: float) -> float:
    """Intermediate expansion ``w = P - ln(P)/2 + (ln P - 2)/(4P)`` with ``a ~ 1/(4w)``."""
    terms = PExpansionTerms.from_c(c)
    P = terms.P
    lp = math.log(P)
    return P - 0.5 * lp + (lp - 2.0) / (4.0 * P)
