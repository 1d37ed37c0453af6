import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supercong import (
    PadicCtx,
    ag_identity_check,
    chu_vandermonde_check,
    get_check,
    pochhammer,
    reduce_mod,
    staver_identity_check,
    sum_exact,
)
from supercong.src.oracle import NotPIntegral, PochSpec


def test_pochhammer():
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(1, 5) == 120
    assert pochhammer(Fraction(-3, 2), 0) == 1
    assert PochSpec(Fraction(1, 2), 2).value() == Fraction(3, 4)
    with pytest.raises(ValueError):
        pochhammer(1, -1)


def test_central_binomial_bridge():
    for n in range(61):
        ratio = pochhammer(Fraction(1, 2), n) / pochhammer(1, n)
        assert ratio * 4**n == math.comb(2 * n, n)


@given(
    st.fractions(max_denominator=50),
    st.integers(min_value=0, max_value=15),
    st.integers(min_value=0, max_value=15),
)
def test_pochhammer_splits(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


def test_half_sum_at_five():
    exact = sum_exact(get_check("J1"), 5)
    assert exact == Fraction(285, 32)
    assert reduce_mod(exact, PadicCtx(5, 3)).r == 5


def test_full_sum_at_three_is_the_same_rational():
    # the full sum at p=3 and the half sum at p=5 both stop at n=2
    assert sum_exact(get_check("J1a"), 3) == Fraction(285, 32)
    assert reduce_mod(Fraction(285, 32), PadicCtx(3, 3)).r == 3


def test_oracle_for_non_integral_parameters():
    exact = sum_exact(get_check("3F2-zu5"), 3)
    assert exact == Fraction(9135, 1024)
    assert reduce_mod(exact, PadicCtx(3, 3)).r == 9


def test_reduce_mod_rejects_p_in_denominator():
    with pytest.raises(NotPIntegral):
        reduce_mod(Fraction(1, 5), PadicCtx(5, 2))


def test_staver():
    for N in range(1, 51):
        assert staver_identity_check(N)


def test_almkvist_granville():
    for N in range(1, 13):
        report = ag_identity_check(N)
        assert report.holds, str(report)
    assert ag_identity_check(1).rhs == Fraction(2, 5)


def test_chu_vandermonde():
    for m in range(3, 100, 2):
        assert chu_vandermonde_check(m)


@pytest.mark.parametrize(
    "check,arg",
    [
        (staver_identity_check, 0),
        (ag_identity_check, 0),
        (chu_vandermonde_check, 4),
    ],
)
def test_identity_parameter_ranges(check, arg):
    with pytest.raises(ValueError):
        check(arg)


def test_report_string():
    report = staver_identity_check(3)
    assert "holds" in str(report)
    assert report.name == "staver"
