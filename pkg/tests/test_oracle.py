import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import mp_I
from heatinv.errors import BracketError, DomainError
from heatinv.oracle import RootFindSpec, default_grid, error_sweep, true_a
from heatinv.series import I_series


class TestTrueA:
    def test_examples(self):
        assert true_a(0.532) == pytest.approx(0.405, abs=1e-3)
        assert true_a(0.258) == pytest.approx(0.217, abs=1e-3)

    def test_against_mpmath_root(self):
        with mpmath.workdps(30):
            ref = mpmath.findroot(lambda a: mp_I(a, 30) - mpmath.mpf("0.5"), 0.38)
        assert true_a(0.5) == pytest.approx(float(ref), abs=1e-13)
        assert true_a(0.5) == pytest.approx(0.3787478383, abs=1e-10)

    @pytest.mark.parametrize("c", [1e-14, 1e-6, 0.01, 0.3, 0.9, 1 - 1e-9, 1 - 1e-14])
    def test_round_trip_extremes(self, c):
        assert abs(I_series(true_a(c)) - c) <= 1e-12

    def test_round_trip_grid(self):
        for c in default_grid():
            assert abs(I_series(true_a(c)) - c) <= 1e-12

    def test_inverse_consistency(self):
        for a in np.round(np.arange(0.05, 5.0 + 1e-9, 0.05), 10):
            assert true_a(I_series(a)) == pytest.approx(a, abs=1e-10)

    @given(st.floats(0.001, 0.999), st.floats(0.001, 0.999))
    def test_increasing(self, c1, c2):
        if c1 < c2:
            assert true_a(c1) < true_a(c2)

    def test_bracket_error(self):
        with pytest.raises(BracketError):
            true_a(0.9, RootFindSpec(a_lo=0.01, a_hi=0.5))

    @pytest.mark.parametrize("kw", [{"a_lo": 0.0}, {"a_lo": 2.0, "a_hi": 1.0}, {"tol_a": 0.0}, {"max_iter": 0}])
    def test_spec_invariants(self, kw):
        with pytest.raises(DomainError):
            RootFindSpec(**kw)

    @pytest.mark.parametrize("c", [0.0, 1.0, math.nan])
    def test_domain(self, c):
        with pytest.raises(DomainError):
            true_a(c)


class TestSweep:
    def test_default_grid(self):
        g = default_grid()
        assert len(g) == 999 and g[0] == 0.001 and g[-1] == 0.999 and g[499] == 0.5

    def test_first_order_narrative(self):
        res = error_sweep("first_order", [0.1, 0.2, 0.53])
        assert [r.re_percent for r in res] == pytest.approx([18.7, 3.2, 0.01], abs=0.1)

    def test_oracle_round_trip(self):
        (r,) = error_sweep("oracle", [0.37])
        assert r.re_percent <= 1e-9

    def test_errors_recorded_in_row(self):
        res = error_sweep("p_expansion", [0.1, 0.5, 0.6])
        assert res[0].ok and not res[1].ok and not res[2].ok
        assert "DomainError" in res[2].error
        assert math.isnan(res[2].re_percent)

    def test_parallel_ordered_and_identical(self):
        grid = default_grid(99)
        seq = error_sweep("perfect_match", grid)
        par = error_sweep("perfect_match", grid, workers=4)
        assert seq == par
        assert [r.c_target for r in par] == grid

    def test_hyphenated_names(self):
        assert error_sweep("explicit-2", [0.3]) == error_sweep("explicit_2", [0.3])

    @pytest.mark.parametrize("grid", [[0.2, 0.1], [0.0, 0.5], [0.5, 1.2]])
    def test_bad_grid(self, grid):
        with pytest.raises(DomainError):
            error_sweep("first_order", grid)

    def test_unknown_scheme(self):
        with pytest.raises(DomainError):
            error_sweep("nonsense", [0.5])
