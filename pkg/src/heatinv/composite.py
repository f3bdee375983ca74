"""Piecewise solvers combining a small-a and a large-a scheme, and relative errors."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from heatinv.errors import DomainError
from heatinv.invert_large import invert_epsilon_poly, invert_first_order, invert_fourier_N
from heatinv.invert_small import invert_erfc, invert_lambert, invert_p_expansion
from heatinv.series import I_series


@dataclass(frozen=True)
class CompositeScheme:
    """A two-branch inverse with a fixed breakpoint.

    The breakpoint belongs to the lower (small-a) branch.

    Attributes
    ----------
    id : str
        ``perfect_match``, ``explicit_1`` or ``explicit_2``.
    breakpoint : float
        Switch point in (0, 1).
    advertised_re_bound : float
        Stated ceiling on the relative error, in percent.
    """

    id: str
    breakpoint: float
    advertised_re_bound: float

    def __post_init__(self):
        if self.id not in _BRANCHES:
            msg = f"unknown composite scheme {self.id!r}"
            raise DomainError(msg)
        if not 0.0 < self.breakpoint < 1.0:
            msg = f"breakpoint must lie in (0, 1), got {self.breakpoint!r}"
            raise DomainError(msg)

    def branches(self, n_terms: int | None = None) -> tuple[Callable[[float], float], Callable[[float], float]]:
        lower, upper = _BRANCHES[self.id]
        if self.id == "explicit_1":
            m = 3 if n_terms is None else n_terms
            return lower, lambda c: invert_fourier_N(c, 3, n_terms=m)
        return lower, upper


_BRANCHES = {
    "perfect_match": (invert_erfc, lambda c: invert_epsilon_poly(c, 2)),
    "explicit_1": (invert_p_expansion, None),
    "explicit_2": (invert_lambert, invert_first_order),
}

SCHEMES = {
    "perfect_match": CompositeScheme("perfect_match", 0.18, 0.0005),
    "explicit_1": CompositeScheme("explicit_1", 0.1, 1.2),
    "explicit_2": CompositeScheme("explicit_2", 0.22, 3.1),
}


def get_scheme(scheme: str | CompositeScheme) -> CompositeScheme:
    if isinstance(scheme, CompositeScheme):
        return scheme
    key = scheme.replace("-", "_")
    if key not in SCHEMES:
        msg = f"unknown composite scheme {scheme!r}; choose from {sorted(SCHEMES)}"
        raise DomainError(msg)
    return SCHEMES[key]


def composite_invert(
    c: float,
    scheme: str | CompositeScheme,
    breakpoint: float | None = None,
    n_terms: int | None = None,
) -> float:
    """Estimate ``a`` with ``I(a) = c`` using a composite scheme.

    Parameters
    ----------
    c : float
        Target value in (0, 1).
    scheme : str or CompositeScheme
        Scheme or its id; hyphens are accepted in place of underscores.
    breakpoint : float, optional
        Override the built-in switch point.
    n_terms : int, optional
        Number of ``f_n`` terms in the large branch of ``explicit_1``.

    Examples
    --------
    >>> round(composite_invert(0.017699, "perfect_match"), 7)
    0.0729612
    """
    if not 0.0 < c < 1.0:
        msg = f"c must lie in (0, 1), got {c!r}"
        raise DomainError(msg)
    s = get_scheme(scheme)
    bp = s.breakpoint if breakpoint is None else breakpoint
    if not 0.0 < bp < 1.0:
        msg = f"breakpoint must lie in (0, 1), got {bp!r}"
        raise DomainError(msg)
    lower, upper = s.branches(n_terms)
    return lower(c) if c <= bp else upper(c)


@dataclass(frozen=True)
class ErrorReport:
    """Reconstruction error of an estimate ``a`` for target ``c``.

    ``error`` holds the message when the estimate could not be produced;
    the numeric fields are then NaN.
    """

    c_target: float
    a_estimate: float
    c_reconstructed: float
    re_percent: float
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


def relative_error(c_target: float, a_estimate: float) -> ErrorReport:
    """Relative error ``|I(a_estimate) - c_target| / c_target`` in percent."""
    if not 0.0 < c_target < 1.0:
        msg = f"c_target must lie in (0, 1), got {c_target!r}"
        raise DomainError(msg)
    if not a_estimate > 0 or math.isinf(a_estimate):
        msg = f"a_estimate must be a positive finite number, got {a_estimate!r}"
        raise DomainError(msg)
    c_rec = I_series(a_estimate)
    return ErrorReport(c_target, a_estimate, c_rec, abs(c_rec - c_target) / c_target * 100.0)
