"""Registry mapping solver names to ``c -> a`` callables."""

from __future__ import annotations

from functools import partial
from typing import Callable

from heatinv.composite import composite_invert
from heatinv.errors import DomainError
from heatinv.invert_large import invert_epsilon_poly, invert_first_order, invert_fourier_N
from heatinv.invert_small import invert_erfc, invert_lambert, invert_p_expansion
from heatinv.oracle import true_a

SOLVERS: dict[str, Callable[[float], float]] = {
    "first_order": invert_first_order,
    "fourier_1": partial(invert_fourier_N, N=1),
    "fourier_2": partial(invert_fourier_N, N=2),
    "fourier_3": partial(invert_fourier_N, N=3),
    "quadratic": partial(invert_epsilon_poly, K=2),
    "quartic": partial(invert_epsilon_poly, K=4),
    "inverse_erfc": invert_erfc,
    "loglog": invert_lambert,
    "lambert_w": partial(invert_lambert, use_w=True),
    "p_expansion": invert_p_expansion,
    "perfect_match": partial(composite_invert, scheme="perfect_match"),
    "explicit_1": partial(composite_invert, scheme="explicit_1"),
    "explicit_2": partial(composite_invert, scheme="explicit_2"),
    "oracle": true_a,
}


def scheme_names() -> list[str]:
    return list(SOLVERS)


def get_solver(name: str) -> Callable[[float], float]:
    """Look up a solver; hyphens and underscores are interchangeable."""
    key = name.replace("-", "_")
    if key not in SOLVERS:
        msg = f"unknown scheme {name!r}; choose from {', '.join(SOLVERS)}"
        raise DomainError(msg)
    return SOLVERS[key]


def solve_a(c: float, scheme: str = "perfect_match") -> float:
    return get_solver(scheme)(c)
