from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectrumcolor import (
    InvalidParameterError,
    Spectrum,
    UndefinedGcdError,
    csc_bound,
    csc_precondition,
    csc_report,
    generalized_gcd,
    inf_norm,
    make_exp_decay_spectrum,
    named_graph,
    tsc_bound,
    tsc_report,
)

W4 = make_exp_decay_spectrum(4, 2)
PAW = named_graph("paw")


class TestNormGcd:
    def test_norm_exp_decay_4(self):
        assert inf_norm(W4) == F(9, 4)

    def test_norm_exp_decay_3(self):
        assert inf_norm(make_exp_decay_spectrum(3, 2)) == 2

    def test_gcd_exp_decay_4(self):
        assert generalized_gcd(W4) == F(1, 8)

    def test_gcd_identity(self):
        assert generalized_gcd(Spectrum([[1, 0], [0, 1]])) == 1

    def test_gcd_mixed(self):
        assert generalized_gcd(Spectrum([[F(3, 4), F(1, 2)], [F(1, 2), F(3, 4)]])) == F(
            1, 4
        )

    def test_gcd_all_zero_undefined(self):
        with pytest.raises(UndefinedGcdError):
            generalized_gcd(Spectrum([[0, 0], [0, 0]]))


class TestTscBound:
    def test_paw_k3(self):
        assert tsc_bound(PAW, W4, 3) == F(9, 4)  # 3 * 9/4 / 3

    def test_decreasing_in_k(self):
        vals = [tsc_bound(PAW, W4, k) for k in (2, 3, 4)]
        assert vals == sorted(vals, reverse=True)

    def test_k_out_of_range(self):
        with pytest.raises(InvalidParameterError):
            tsc_bound(PAW, W4, 1)
        with pytest.raises(InvalidParameterError):
            tsc_bound(PAW, W4, 5)


class TestCscBound:
    def test_paw_t1(self):
        # t=1 is not a multiple of g=1/8? it is: 1/(1/8)=8. bound =
        # ceil((27/4 + 1/8)/(1 + 1/8)) = ceil(55/8 / (9/8)) = ceil(55/9) = 7
        assert csc_bound(PAW, W4, 1) == 7

    def test_paw_t1_precondition_fails(self):
        # (27/4 - 3/8)/4 = 51/32 > 1
        assert not csc_precondition(PAW, W4, 1)
        assert csc_precondition(PAW, W4, F(51, 32))

    def test_nonmultiple_threshold_rounds_down(self):
        # t=0.9 -> t'=7/8; same as computing at 7/8 directly
        assert csc_bound(PAW, W4, F(9, 10)) == csc_bound(PAW, W4, F(7, 8))

    def test_zero_threshold(self):
        # t'=0: bound = ceil((D*norm + g)/g) = ceil(55) = 55
        assert csc_bound(PAW, W4, 0) == 55

    def test_negative_threshold(self):
        with pytest.raises(InvalidParameterError):
            csc_bound(PAW, W4, -1)

    def test_reports(self):
        r = tsc_report(PAW, W4, 3)
        assert (r.value, r.norm, r.gcd, r.max_degree) == (F(9, 4), F(9, 4), F(1, 8), 3)
        c = csc_report(PAW, W4, 1)
        assert c.value == 7 and not c.precondition_holds


@st.composite
def small_spectrum(draw):
    s = draw(st.integers(min_value=2, max_value=4))
    base = draw(st.integers(min_value=2, max_value=3))
    return make_exp_decay_spectrum(s, base)


@settings(max_examples=50, deadline=None)
@given(small_spectrum(), st.fractions(min_value=0, max_value=4))
def test_csc_bound_monotone_in_threshold(spec, t):
    # a larger threshold never needs a larger bound
    assert csc_bound(PAW, spec, t + F(1, 2)) <= csc_bound(PAW, spec, t)


@settings(max_examples=50, deadline=None)
@given(small_spectrum())
def test_gcd_divides_norm(spec):
    g = generalized_gcd(spec)
    assert (inf_norm(spec) / g).denominator == 1
