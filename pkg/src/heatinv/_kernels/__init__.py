"""Hot kernels with a compiled core and a numpy fallback.

The Cython extension ``_ckernels`` is used when it was built; otherwise the
pure-Python ``_pykernels`` module is loaded. Both expose the same three
functions. :func:`use_backend` switches the active implementation (used by
the benchmark and by the cross-backend tests).
"""

import importlib

from heatinv._kernels import _pykernels

KIND_MOMENTS = _pykernels.KIND_MOMENTS
KIND_COS_RATIO = _pykernels.KIND_COS_RATIO
KIND_SIN_RATIO = _pykernels.KIND_SIN_RATIO

_MODULES = {"cython": "heatinv._kernels._ckernels", "python": "heatinv._kernels._pykernels"}


def available_backends():
    found = {}
    for name, path in _MODULES.items():
        try:
            found[name] = importlib.import_module(path)
        except ImportError:
            continue
    return found


_BACKENDS = available_backends()
BACKEND = "cython" if "cython" in _BACKENDS else "python"
_impl = _BACKENDS[BACKEND]


def current_backend():
    """Name of the active backend."""
    return BACKEND


def use_backend(name):
    """Select the active backend and return the previous name."""
    global BACKEND, _impl
    if name not in _BACKENDS:
        msg = f"kernel backend {name!r} is not available (have {sorted(_BACKENDS)})"
        raise ValueError(msg)
    previous = BACKEND
    BACKEND, _impl = name, _BACKENDS[name]
    return previous


def hyperbola_integrals(kind, a, scale, param, nmax, r_max, n_panels, gl_x, gl_w):
    return _impl.hyperbola_integrals(kind, a, scale, param, nmax, r_max, n_panels, gl_x, gl_w)


def fourier_sum(a, term_tol, max_terms):
    return _impl.fourier_sum(a, term_tol, max_terms)


def erfc_sum(a, term_tol, max_terms):
    return _impl.erfc_sum(a, term_tol, max_terms)
