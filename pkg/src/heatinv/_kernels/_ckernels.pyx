# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_pykernels`` for the reference semantics."""

import numpy as np

from libc.math cimport cos, cosh, erfc, exp, sin, sinh, sqrt, M_PI

KIND_MOMENTS = 0
KIND_COS_RATIO = 1
KIND_SIN_RATIO = 2


cdef inline void _cdiv(double ar, double ai, double br, double bi,
                       double* outr, double* outi) noexcept nogil:
    cdef double inv = 1.0 / (br * br + bi * bi)
    outr[0] = (ar * br + ai * bi) * inv
    outi[0] = (ai * br - ar * bi) * inv


def hyperbola_integrals(int kind, double a, double scale, double param, int nmax,
                        double r_max, int n_panels, gl_x, gl_w):
    cdef double[::1] xs = np.ascontiguousarray(gl_x, dtype=np.float64)
    cdef double[::1] ws = np.ascontiguousarray(gl_w, dtype=np.float64)
    cdef int order = xs.shape[0]
    cdef double width = 2.0 * r_max / n_panels
    cdef double half = 0.5 * width
    cdef int p, j, n
    cdef double mid, r, er, sh, ch, wt, kr, ki, dkr, dki, k2r, k2i
    cdef double mag, ph, br, bi, tr, ti, gr, gi, e1r, e1i, e2r, e2i, nr, ni, dr, di, m1, m2
    cdef double s0r = 0.0, s0i = 0.0
    cdef double[::1] accr = np.zeros(nmax + 1)
    cdef double[::1] acci = np.zeros(nmax + 1)
    if kind < 0 or kind > 2:
        raise ValueError(f"unknown integrand kind {kind}")

    with nogil:
        for p in range(n_panels):
            mid = -r_max + (p + 0.5) * width
            for j in range(order):
                r = mid + half * xs[j]
                wt = half * ws[j]
                er = exp(r)
                sh = 0.5 * (er - 1.0 / er)
                ch = 0.5 * (er + 1.0 / er)
                kr = scale * 2.0 * sh
                ki = scale * ch
                dkr = scale * 2.0 * ch
                dki = scale * sh
                k2r = kr * kr - ki * ki
                k2i = 2.0 * kr * ki
                # base = exp(-a k^2) dk / k * wt
                mag = exp(-a * k2r) * wt
                ph = -a * k2i
                _cdiv(dkr, dki, kr, ki, &tr, &ti)
                br = mag * (cos(ph) * tr - sin(ph) * ti)
                bi = mag * (cos(ph) * ti + sin(ph) * tr)
                # e1 = exp(i k)
                mag = exp(-ki)
                e1r = mag * cos(kr)
                e1i = mag * sin(kr)
                e2r = e1r * e1r - e1i * e1i
                e2i = 2.0 * e1r * e1i
                if kind == 0:
                    _cdiv(2.0 * e1r, 2.0 * e1i, 1.0 + e2r, e2i, &tr, &ti)
                    gr = br * tr - bi * ti
                    gi = br * ti + bi * tr
                    for n in range(nmax + 1):
                        accr[n] += gr
                        acci[n] += gi
                        tr = gr * k2r - gi * k2i
                        gi = gr * k2i + gi * k2r
                        gr = tr
                else:
                    m1 = exp(-ki * (1.0 + param))
                    m2 = exp(-ki * (1.0 - param))
                    if kind == 1:
                        nr = m1 * cos(kr * (1.0 + param)) + m2 * cos(kr * (1.0 - param))
                        ni = m1 * sin(kr * (1.0 + param)) + m2 * sin(kr * (1.0 - param))
                        dr = 1.0 + e2r
                    else:
                        nr = m1 * cos(kr * (1.0 + param)) - m2 * cos(kr * (1.0 - param))
                        ni = m1 * sin(kr * (1.0 + param)) - m2 * sin(kr * (1.0 - param))
                        dr = e2r - 1.0
                    _cdiv(nr, ni, dr, e2i, &tr, &ti)
                    s0r += br * tr - bi * ti
                    s0i += br * ti + bi * tr
    out = np.asarray(accr) + 1j * np.asarray(acci)
    if kind != 0:
        out[0] = s0r + 1j * s0i
    return out


def fourier_sum(double a, double term_tol, long max_terms):
    cdef double total = 0.0
    cdef double term, qa = 0.25 * M_PI * M_PI * a
    cdef long n, m
    for n in range(max_terms):
        m = 2 * n + 1
        term = exp(-(<double>m) * m * qa) / (m * 0.25 * M_PI)
        if term < term_tol:
            return 1.0 - total, n, True
        if n % 2 == 0:
            total += term
        else:
            total -= term
    return 1.0 - total, max_terms, False


def erfc_sum(double a, double term_tol, long max_terms):
    cdef double inv = 0.5 / sqrt(a)
    cdef double total = 0.0
    cdef double term
    cdef long m
    for m in range(max_terms):
        term = 2.0 * erfc((2 * m + 1) * inv)
        if term == 0.0 or (m > 0 and term < term_tol * abs(total)):
            return total, m, True
        if m % 2 == 0:
            total += term
        else:
            total -= term
    return total, max_terms, False
