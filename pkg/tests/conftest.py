import mpmath
import pytest
from hypothesis import settings

from heatinv import _kernels

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(params=sorted(_kernels.available_backends()))
def backend(request):
    previous = _kernels.use_backend(request.param)
    yield request.param
    _kernels.use_backend(previous)


def mp_I(a, dps=40):
    """I(a) from the erfc sum at high precision."""
    with mpmath.workdps(dps):
        a = mpmath.mpf(a)
        return mpmath.nsum(
            lambda m: 2 * (-1) ** int(m) * mpmath.erfc((2 * m + 1) / (2 * mpmath.sqrt(a))), [0, mpmath.inf]
        )


ACCEPTANCE_RESULTS: list[tuple[int, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
