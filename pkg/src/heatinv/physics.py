"""Physical inverse problems reduced to I(a) = c.

Drainage (lengths in m, time in days)::

    c1 = 1 - (H - d) / h0,   a1 = A T / L^2

Infiltration (lengths in cm, time in h)::

    c2 = 2 (Theta - theta0) / (theta1 - theta0),   a2 = 4 D0 T / L^2

``L`` is the half drain spacing; the field spacing is ``2L``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from heatinv.contour import DEFAULT_QUADRATURE, QuadratureSpec, eval_theta
from heatinv.errors import AdmissibilityError, DomainError
from heatinv.invert_large import invert_first_order


class Problem(str, Enum):
    """IP1 recovers L, IP2 recovers T, IP3 recovers D0."""

    IP1 = "IP1"
    IP2 = "IP2"
    IP3 = "IP3"


def _positive(name, value):
    if value is not None and not value > 0:
        msg = f"{name} must be positive, got {value!r}"
        raise DomainError(msg)


@dataclass(frozen=True)
class DrainageScenario:
    """Falling water table between parallel drains.

    Parameters
    ----------
    h0 : float
        Initial water-table height above the drain level, m.
    d : float
        Drain elevation above the impervious layer, m.
    H : float, optional
        Observed height at time ``T``, m. Needed for inverse problems.
    T : float, optional
        Elapsed time, days.
    L : float, optional
        Half drain spacing, m.
    A : float, optional
        Diffusion coefficient, m^2/day. Derived as ``K (d + h0/2) / S_y``
        when omitted.
    K : float, optional
        Hydraulic conductivity, m/day.
    S_y : float, optional
        Drainable porosity.
    """

    h0: float
    d: float
    H: float | None = None
    T: float | None = None
    L: float | None = None
    A: float | None = None
    K: float | None = None
    S_y: float | None = None

    def __post_init__(self):
        _positive("h0", self.h0)
        if not self.d >= 0:
            msg = f"d must be non-negative, got {self.d!r}"
            raise DomainError(msg)
        for name in ("T", "L", "A", "K", "S_y"):
            _positive(name, getattr(self, name))
        if self.A is None and (self.K is None or self.S_y is None):
            msg = "give either A or both K and S_y"
            raise DomainError(msg)

    @property
    def B(self) -> float:
        """Mean saturated thickness ``d + h0/2``, m."""
        return self.d + 0.5 * self.h0

    @property
    def diffusion_coefficient(self) -> float:
        if self.A is not None:
            return self.A
        return self.K * self.B / self.S_y


@dataclass(frozen=True)
class InfiltrationScenario:
    """Moisture diffusion in a soil column, gravity neglected.

    Parameters
    ----------
    theta0, theta1 : float
        Residual and boundary moisture, cm^3/cm^3, ``theta1 > theta0 > 0``.
    L : float
        Profile length, cm.
    Theta : float, optional
        Moisture at depth ``L/2`` and time ``T``.
    T : float, optional
        Time, h.
    D0 : float, optional
        Diffusivity, cm^2/h.
    """

    theta0: float
    theta1: float
    L: float
    Theta: float | None = None
    T: float | None = None
    D0: float | None = None

    def __post_init__(self):
        if not 0 < self.theta0 < self.theta1:
            msg = f"need 0 < theta0 < theta1, got {self.theta0!r}, {self.theta1!r}"
            raise DomainError(msg)
        for name in ("L", "T", "D0"):
            _positive(name, getattr(self, name))


def reduce_drainage(s: DrainageScenario) -> float:
    """Normalized datum ``c1 = 1 - (H - d)/h0``; pairs with ``a1 = A T / L^2``.

    Raises
    ------
    AdmissibilityError
        If ``H`` is missing or outside ``(d, d + h0)``.
    """
    if s.H is None:
        msg = "drainage scenario needs an observed height H"
        raise AdmissibilityError(msg)
    if not s.d < s.H < s.d + s.h0:
        msg = f"H must lie strictly between d={s.d} and d+h0={s.d + s.h0}, got {s.H!r}"
        raise AdmissibilityError(msg)
    return 1.0 - (s.H - s.d) / s.h0


def reduce_infiltration(s: InfiltrationScenario) -> float:
    """Normalized datum ``c2 = 2 (Theta - theta0)/(theta1 - theta0)``; pairs with ``a2 = 4 D0 T / L^2``.

    Raises
    ------
    AdmissibilityError
        If ``Theta`` is missing or outside ``(theta0, (theta0 + theta1)/2)``.
    """
    if s.Theta is None:
        msg = "infiltration scenario needs a measured moisture Theta"
        raise AdmissibilityError(msg)
    upper = 0.5 * (s.theta0 + s.theta1)
    if not s.theta0 < s.Theta < upper:
        msg = f"Theta must lie strictly between {s.theta0} and {upper}, got {s.Theta!r}"
        raise AdmissibilityError(msg)
    return 2.0 * (s.Theta - s.theta0) / (s.theta1 - s.theta0)


def _need(s, *names):
    for name in names:
        if getattr(s, name) is None:
            msg = f"scenario is missing {name}"
            raise DomainError(msg)


def _from_a(problem, s, a):
    if problem is Problem.IP1:
        return math.sqrt(s.diffusion_coefficient * s.T / a)
    if problem is Problem.IP2:
        return a * s.L * s.L / s.diffusion_coefficient
    return a * s.L * s.L / (4.0 * s.T)


def _reduce(problem, s):
    if problem is Problem.IP3:
        if not isinstance(s, InfiltrationScenario):
            msg = "IP3 needs an InfiltrationScenario"
            raise DomainError(msg)
        _need(s, "T")
        return reduce_infiltration(s)
    if not isinstance(s, DrainageScenario):
        msg = f"{problem.value} needs a DrainageScenario"
        raise DomainError(msg)
    _need(s, "T" if problem is Problem.IP1 else "L")
    return reduce_drainage(s)


def solve_ip(problem: Problem | str, scenario, scheme: str = "perfect_match") -> float:
    """Solve an inverse problem with a named inverse scheme.

    Returns
    -------
    float
        IP1: half spacing ``L`` in m (field spacing ``2L``).
        IP2: time ``T`` in days.
        IP3: diffusivity ``D0`` in cm^2/h.
    """
    from heatinv.schemes import get_solver

    problem = Problem(problem)
    c = _reduce(problem, scenario)
    a = get_solver(scheme)(c)
    return _from_a(problem, scenario, a)


def glover_dumm(problem: Problem | str, scenario) -> float:
    """Closed forms of the first-order inverse.

    IP1: ``L = sqrt(pi^2 A T / (4 ln(4 h0 / (pi (H - d)))))``;
    IP2: ``T = (4 L^2 / (pi^2 A)) ln(4 h0 / (pi (H - d)))``;
    IP3: ``D0 = (L^2 / (pi^2 T)) ln((4/pi)(theta1 - theta0)/(theta1 + theta0 - 2 Theta))``.
    """
    problem = Problem(problem)
    _reduce(problem, scenario)
    s = scenario
    if problem is Problem.IP3:
        log = math.log(4.0 / math.pi * (s.theta1 - s.theta0) / (s.theta1 + s.theta0 - 2.0 * s.Theta))
        return s.L * s.L / (math.pi**2 * s.T) * log
    log = math.log(4.0 * s.h0 / (math.pi * (s.H - s.d)))
    A = s.diffusion_coefficient
    if problem is Problem.IP1:
        return math.sqrt(math.pi**2 * A * s.T / (4.0 * log))
    return 4.0 * s.L * s.L / (math.pi**2 * A) * log


def glover_dumm_matches_first_order(problem, scenario) -> bool:
    """Whether the closed form equals the first-order inverse to 1e-12 relative."""
    problem = Problem(problem)
    a = invert_first_order(_reduce(problem, scenario))
    ref = _from_a(problem, scenario, a)
    return abs(glover_dumm(problem, scenario) - ref) <= 1e-12 * abs(ref)


def simulate_moisture(
    seed: int,
    n: int,
    times,
    theta0: float = 0.05,
    theta1: float = 0.4,
    L: float = 100.0,
    q: QuadratureSpec = DEFAULT_QUADRATURE,
) -> list[InfiltrationScenario]:
    """Synthetic infiltration measurements with random diffusivity.

    Draws ``delta ~ U[0, 1)`` from numpy's PCG64 seeded with ``seed`` and sets
    ``D0 = 1.2 (1 + delta)`` cm^2/h. ``Theta`` is the forward solution at
    ``x = L/2``, ``t = T``.

    Parameters
    ----------
    seed : int
        PCG64 seed; equal seeds give identical output.
    n : int
        Number of scenarios.
    times : sequence of float
        Measurement times in h; one per scenario, or a single value reused.
    """
    if n < 1:
        msg = "n must be at least 1"
        raise DomainError(msg)
    times = [float(t) for t in times]
    if len(times) == 1:
        times = times * n
    if len(times) != n:
        msg = f"need 1 or {n} times, got {len(times)}"
        raise DomainError(msg)
    rng = np.random.Generator(np.random.PCG64(seed))
    deltas = rng.uniform(0.0, 1.0, size=n)
    out = []
    for delta, T in zip(deltas, times):
        base = InfiltrationScenario(theta0=theta0, theta1=theta1, L=L, T=T, D0=1.2 * (1.0 + float(delta)))
        out.append(replace(base, Theta=eval_theta(0.5 * L, T, base, q)))
    return out
