import math

import numpy as np
import pytest
import scipy.special as sc
from hypothesis import given
from hypothesis import strategies as st

from heatinv.composite import relative_error
from heatinv.errors import DomainError
from heatinv.invert_small import (
    PExpansionTerms,
    w_asymptote,
    invert_erfc,
    invert_lambert,
    invert_p_expansion,
)
from heatinv.oracle import true_a
from heatinv.series import I_erfc_sum

SCHEMES = (invert_erfc, invert_lambert, invert_p_expansion)


class TestInverseErfc:
    def test_examples(self):
        assert invert_erfc(0.295) == pytest.approx(0.238, abs=5e-4)
        assert invert_erfc(1e-12) < 0.03
        a = invert_erfc(0.1)
        assert abs(I_erfc_sum(a) - 0.1) / 0.1 < 1e-4

    def test_against_scipy(self):
        for c in (1e-8, 0.01, 0.2, 0.9):
            assert invert_erfc(c) == pytest.approx(1 / (4 * sc.erfcinv(c / 2) ** 2), rel=1e-12)

    def test_inverts_leading_term(self):
        for c in (0.01, 0.1, 0.3):
            a = invert_erfc(c)
            assert 2 * math.erfc(1 / (2 * math.sqrt(a))) == pytest.approx(c, rel=1e-12)

    @given(st.floats(1e-6, 0.99), st.floats(1e-6, 0.99))
    def test_increasing(self, c1, c2):
        if c1 < c2:
            assert invert_erfc(c1) <= invert_erfc(c2)


class TestLambert:
    def test_loglog_paper_value(self):
        a = invert_lambert(0.258)
        assert a == pytest.approx(0.2127, abs=1e-4)
        assert true_a(0.258) == pytest.approx(0.217, abs=5e-4)
        assert relative_error(0.258, a).re_percent == pytest.approx(2.9, abs=0.1)

    def test_w_form_against_scipy(self):
        for c in (1e-4, 0.05, 0.3):
            X = 8 / (math.pi * c * c)
            assert invert_lambert(c, use_w=True) == pytest.approx(1 / (2 * sc.lambertw(X).real), rel=1e-12)

    def test_w_form_one_term_asymptotic(self):
        # a = 1/(2W(X)) solves (4/sqrt(pi)) sqrt(a) exp(-1/(4a)) = c exactly
        c = 0.05
        a = invert_lambert(c, use_w=True)
        assert 4 / math.sqrt(math.pi) * math.sqrt(a) * math.exp(-1 / (4 * a)) == pytest.approx(c, rel=1e-12)

    def test_loglog_domain(self):
        # X/ln X <= 1 never happens for X > 0 on (0,1) except through X <= e
        with pytest.raises(DomainError):
            invert_lambert(0.0)
        assert invert_lambert(0.999) > 0


class TestPExpansion:
    def test_table_value(self):
        # printed D0 = 25 a = 1.81874
        assert 25 * invert_p_expansion(0.017699) == pytest.approx(1.81874, abs=1e-5)

    def test_crossover_error(self):
        assert relative_error(0.11, invert_p_expansion(0.11)).re_percent < 1.2

    def test_P_threshold(self):
        assert PExpansionTerms.from_c(0.3).P == pytest.approx(1.33, abs=0.01)
        assert invert_p_expansion(0.3) > 0
        with pytest.raises(DomainError, match="P > 1"):
            PExpansionTerms.from_c(0.6)
        with pytest.raises(DomainError):
            invert_p_expansion(0.6)

    def test_orders(self):
        t = PExpansionTerms.from_c(0.01)
        assert len(t.terms()) == 3
        assert PExpansionTerms(t.P, 1).value() == pytest.approx(1 / (4 * t.P))
        with pytest.raises(DomainError):
            PExpansionTerms(t.P, 4)

    def test_p_expansion_matches_w_form(self):
        # a_P - 1/(4 w) = O(P^-4) relative to a ~ 1/(4P), so log-log slope in P is <= -3
        cs = (1e-3, 1e-4, 1e-5)
        P = [PExpansionTerms.from_c(c).P for c in cs]
        d = [abs(invert_p_expansion(c) - 1 / (4 * w_asymptote(c))) for c in cs]
        slope = np.polyfit(np.log(P), np.log(d), 1)[0]
        assert slope <= -3.0


@pytest.mark.parametrize("scheme", SCHEMES)
def test_vanishing_monotonically(scheme):
    grid = np.geomspace(1e-4, 0.2, 60)
    vals = [scheme(c) for c in grid]
    assert all(b > a > 0 for a, b in zip(vals, vals[1:]))
    assert vals[0] < 0.05


def test_inverse_erfc_dominates():
    for c in np.linspace(0.011, 0.249, 40):
        e = relative_error(c, invert_erfc(c)).re_percent
        assert e <= relative_error(c, invert_lambert(c)).re_percent
        assert e <= relative_error(c, invert_p_expansion(c)).re_percent


@pytest.mark.parametrize("scheme", SCHEMES)
@pytest.mark.parametrize("c", [0.0, 1.0, -0.1])
def test_domain(scheme, c):
    with pytest.raises(DomainError):
        scheme(c)
