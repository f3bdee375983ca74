import math

import numpy as np
import pytest

from heatinv import _kernels
from heatinv.contour import _gauss_legendre

GL_X, GL_W = _gauss_legendre(16)


def _run_all(fn):
    out = {}
    for name in _kernels.available_backends():
        prev = _kernels.use_backend(name)
        try:
            out[name] = fn()
        finally:
            _kernels.use_backend(prev)
    return out


def test_fallback_always_available():
    assert "python" in _kernels.available_backends()
    assert _kernels.current_backend() in _kernels.available_backends()


def test_unknown_backend():
    with pytest.raises(ValueError, match="not available"):
        _kernels.use_backend("fortran")


@pytest.mark.parametrize(
    "kind,a,scale,param,nmax",
    [
        (_kernels.KIND_MOMENTS, 0.3, 1.0, 0.0, 4),
        (_kernels.KIND_MOMENTS, 4.0, 0.5, 0.0, 0),
        (_kernels.KIND_COS_RATIO, 0.5, 1.0, -0.4, 0),
        (_kernels.KIND_SIN_RATIO, 0.2, 1.0, 0.5, 0),
    ],
)
def test_backends_agree_on_quadrature(kind, a, scale, param, nmax):
    res = _run_all(lambda: _kernels.hyperbola_integrals(kind, a, scale, param, nmax, 5.0, 32, GL_X, GL_W))
    ref = res["python"]
    for val in res.values():
        assert val.shape == (nmax + 1,)
        np.testing.assert_allclose(val, ref, rtol=1e-12, atol=1e-13)


@pytest.mark.parametrize("a", [0.01, 0.05, 0.3, 2.0])
def test_backends_agree_on_series(a):
    for fn in (_kernels.fourier_sum, _kernels.erfc_sum):
        res = _run_all(lambda: fn(a, 1e-16, 10000))
        for val, used, ok in res.values():
            assert ok
            assert val == pytest.approx(res["python"][0], abs=1e-15)


def test_fourier_sum_reports_truncation():
    _, used, ok = _kernels.fourier_sum(1e-7, 1e-16, 5)
    assert not ok and used == 5


def test_bad_kind_rejected(backend):
    with pytest.raises(ValueError):
        _kernels.hyperbola_integrals(7, 0.3, 1.0, 0.0, 0, 5.0, 4, GL_X, GL_W)


def test_first_moment_is_I(backend):
    raw = _kernels.hyperbola_integrals(_kernels.KIND_MOMENTS, 0.5, 1.0, 0.0, 0, 8.0, 64, GL_X, GL_W)
    assert (1j * raw[0] / math.pi).real == pytest.approx(0.6292225702, abs=1e-9)
