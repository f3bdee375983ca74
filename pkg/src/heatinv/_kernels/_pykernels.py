"""Pure-Python (numpy) implementation of the hot kernels.

Mirrors ``_ckernels.pyx`` function by function; used when the compiled
extension is unavailable.
"""

import math

import numpy as np

KIND_MOMENTS = 0
KIND_COS_RATIO = 1
KIND_SIN_RATIO = 2

_PI = math.pi
_QUARTER_PI_SQ = 0.25 * math.pi * math.pi


def hyperbola_integrals(kind, a, scale, param, nmax, r_max, n_panels, gl_x, gl_w):
    """Raw integrals over r in [-r_max, r_max] on k(r) = scale*(2 sinh r + i cosh r).

    Returns a complex array of length ``nmax + 1``. For ``KIND_MOMENTS`` entry
    n is the integral of exp(-a k^2) k^(2n-1) / cos(k) dk; the ratio kinds
    fill only entry 0, with cos(k*param)/cos(k) or sin(k*param)/sin(k) in
    place of 1/cos(k) and a 1/k factor.
    """
    gl_x = np.asarray(gl_x, dtype=float)
    gl_w = np.asarray(gl_w, dtype=float)
    edges = np.linspace(-r_max, r_max, n_panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    r = (mid[:, None] + half[:, None] * gl_x[None, :]).ravel()
    w = (half[:, None] * gl_w[None, :]).ravel()

    sh = np.sinh(r)
    ch = np.cosh(r)
    k = scale * (2.0 * sh + 1j * ch)
    dk = scale * (2.0 * ch + 1j * sh)
    base = np.exp(-a * k * k) * dk / k * w
    e2 = np.exp(2j * k)

    out = np.zeros(nmax + 1, dtype=complex)
    if kind == KIND_MOMENTS:
        g = base * 2.0 * np.exp(1j * k) / (1.0 + e2)
        k2 = k * k
        for n in range(nmax + 1):
            out[n] = g.sum()
            g = g * k2
    elif kind == KIND_COS_RATIO:
        num = np.exp(1j * k * (1.0 + param)) + np.exp(1j * k * (1.0 - param))
        out[0] = (base * num / (1.0 + e2)).sum()
    elif kind == KIND_SIN_RATIO:
        num = np.exp(1j * k * (1.0 + param)) - np.exp(1j * k * (1.0 - param))
        out[0] = (base * num / (e2 - 1.0)).sum()
    else:
        msg = f"unknown integrand kind {kind}"
        raise ValueError(msg)
    return out


def fourier_sum(a, term_tol, max_terms):
    """1 - sum_n (-1)^n exp(-(2n+1)^2 pi^2 a / 4) / ((2n+1) pi / 4).

    Returns ``(value, terms_used, converged)``.
    """
    total = 0.0
    for n in range(max_terms):
        m = 2 * n + 1
        term = math.exp(-m * m * _QUARTER_PI_SQ * a) / (m * 0.25 * _PI)
        if term < term_tol:
            return 1.0 - total, n, True
        total += term if n % 2 == 0 else -term
    return 1.0 - total, max_terms, False


def erfc_sum(a, term_tol, max_terms):
    """2 * sum_m (-1)^m erfc((2m+1) / (2 sqrt(a))), relative stopping rule."""
    inv = 0.5 / math.sqrt(a)
    total = 0.0
    for m in range(max_terms):
        term = 2.0 * math.erfc((2 * m + 1) * inv)
        if term == 0.0 or (m > 0 and term < term_tol * abs(total)):
            return total, m, True
        total += term if m % 2 == 0 else -term
    return total, max_terms, False
