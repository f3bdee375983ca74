import numpy as np
import pytest

from heatinv.composite import (
    SCHEMES,
    CompositeScheme,
    ErrorReport,
    composite_invert,
    get_scheme,
    relative_error,
)
from heatinv.errors import DomainError
from heatinv.invert_large import invert_epsilon_poly, invert_first_order, invert_fourier_N
from heatinv.invert_small import invert_erfc, invert_lambert, invert_p_expansion
from heatinv.oracle import true_a
from heatinv.series import I_fourier


class TestSchemes:
    def test_registry(self):
        assert {k: (s.breakpoint, s.advertised_re_bound) for k, s in SCHEMES.items()} == {
            "perfect_match": (0.18, 0.0005),
            "explicit_1": (0.1, 1.2),
            "explicit_2": (0.22, 3.1),
        }

    def test_hyphen_alias(self):
        assert get_scheme("perfect-match") is SCHEMES["perfect_match"]
        with pytest.raises(DomainError):
            get_scheme("nope")

    def test_invariants(self):
        with pytest.raises(DomainError):
            CompositeScheme("other", 0.2, 1.0)
        with pytest.raises(DomainError):
            CompositeScheme("explicit_1", 1.5, 1.0)


class TestBranches:
    @pytest.mark.parametrize(
        "scheme,lower,upper",
        [
            ("perfect_match", invert_erfc, lambda c: invert_epsilon_poly(c, 2)),
            ("explicit_1", invert_p_expansion, lambda c: invert_fourier_N(c, 3, n_terms=3)),
            ("explicit_2", invert_lambert, invert_first_order),
        ],
    )
    def test_breakpoint_inclusive_on_lower(self, scheme, lower, upper):
        bp = SCHEMES[scheme].breakpoint
        assert composite_invert(bp, scheme) == lower(bp)
        above = bp + 1e-9
        assert composite_invert(above, scheme) == upper(above)
        assert composite_invert(0.05, scheme) == lower(0.05)
        assert composite_invert(0.6, scheme) == upper(0.6)

    def test_table_examples(self):
        # printed D0 = 25 a to 5 decimals
        assert 25 * composite_invert(0.017699, "perfect_match") == pytest.approx(1.82403, abs=1e-5)
        assert 25 * composite_invert(0.017699, "explicit_2") == pytest.approx(1.83671, abs=1e-5)
        vals = [composite_invert(0.840652, s) for s in SCHEMES]
        # T = 1000 h row: D0 = a L^2 / (4T) = 2.5 a
        assert all(2.5 * v == pytest.approx(2.10569, abs=5e-6) for v in vals)

    def test_overrides(self):
        c = 0.15
        assert composite_invert(c, "perfect_match", breakpoint=0.1) == invert_epsilon_poly(c, 2)
        assert composite_invert(0.5, "explicit_1", n_terms=6) == invert_fourier_N(0.5, 3)
        with pytest.raises(DomainError):
            composite_invert(0.5, "explicit_1", breakpoint=0.0)

    @pytest.mark.parametrize("scheme", list(SCHEMES))
    def test_monotone(self, scheme):
        grid = np.round(np.arange(0.005, 0.996, 0.005), 6)
        vals = [composite_invert(c, scheme) for c in grid]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    @pytest.mark.parametrize("scheme", list(SCHEMES))
    def test_continuity_at_breakpoint(self, scheme):
        s = SCHEMES[scheme]
        lower, upper = s.branches()
        bp = s.breakpoint
        gap = abs(relative_error(bp, lower(bp)).re_percent - relative_error(bp, upper(bp)).re_percent)
        assert gap < s.advertised_re_bound

    @pytest.mark.parametrize("scheme", list(SCHEMES))
    def test_domain(self, scheme):
        with pytest.raises(DomainError):
            composite_invert(1.0, scheme)


class TestRelativeError:
    def test_first_order_at_0_1(self):
        assert relative_error(0.1, invert_first_order(0.1)).re_percent == pytest.approx(18.7, abs=0.1)

    def test_exact_round_trip(self):
        a = 0.7
        r = relative_error(I_fourier(a), a)
        assert r.re_percent == 0.0
        assert r.ok

    def test_fields(self):
        a = true_a(0.3) * 1.01
        r = relative_error(0.3, a)
        assert isinstance(r, ErrorReport)
        assert r.re_percent == pytest.approx(abs(r.c_reconstructed - 0.3) / 0.3 * 100)

    def test_direction(self):
        # divides by the target, not by the reconstruction
        r = relative_error(0.258, invert_lambert(0.258))
        assert r.re_percent == pytest.approx((0.258 - r.c_reconstructed) / 0.258 * 100)

    @pytest.mark.parametrize("c,a", [(0.0, 0.1), (0.5, 0.0), (0.5, float("inf"))])
    def test_domain(self, c, a):
        with pytest.raises(DomainError):
            relative_error(c, a)
