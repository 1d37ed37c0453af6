from fractions import Fraction

import pytest

from supercong import WZ_PAIRS, PadicCtx, ValUnit, check_pair, get_pair
from supercong.src.padic import residue_of
from supercong.src.wz import (
    UndefinedTerm,
    WzPair,
    check_expansion_J1,
    check_g_zero_convention,
    check_sum_over_n_J1,
    check_sum_over_n_J4,
    check_telescoped_22,
    check_telescoped_M5,
    poch,
    sample_x,
    telescoped_reports,
)


def test_j1_spot_value():
    pair = get_pair("J1")
    assert pair.f(0, 0) - pair.f(0, 1) == -2
    assert pair.g(1, 1) - pair.g(0, 1) == -2


@pytest.mark.parametrize("pair_id", ["J1", "J2", "J4"])
def test_pairs_on_grid(pair_id):
    report = check_pair(get_pair(pair_id))
    assert report.all_pass, str(report)
    assert "all-pass" in str(report)


@pytest.mark.parametrize("x", sample_x(10, seed=42) + [Fraction(1, 3)])
def test_lemma3_pair_at_rational_x(x):
    assert check_pair(get_pair("LEMMA3"), x=x).all_pass


def test_g_vanishes_at_zero():
    for pair in WZ_PAIRS.values():
        x = Fraction(1, 3) if pair.needs_x else None
        assert check_g_zero_convention(pair, 12, x)


def test_parameter_required():
    with pytest.raises(ValueError):
        get_pair("LEMMA3").f(1, 1)


def test_zero_parameter_is_refused():
    with pytest.raises(ValueError):
        check_pair(get_pair("LEMMA3"), 4, 4, Fraction(0))


def test_undefined_term_is_a_counterexample():
    report = check_pair(get_pair("LEMMA3"), 2, 2, Fraction(1))
    assert not report.all_pass
    assert "FAIL" in str(report)
    with pytest.raises(UndefinedTerm):
        get_pair("LEMMA3").f(0, 1, Fraction(1))


def test_broken_pair_is_caught(mocker):
    # G identically zero cannot balance F(n,k-1) - F(n,k)
    mocker.patch.object(WzPair, "g", side_effect=lambda n, k, x=None, one=None: 0)
    report = check_pair(get_pair("J1"), 3, 3)
    assert report.counterexample[:2] == (0, 1)


def test_unknown_pair():
    with pytest.raises(KeyError):
        get_pair("J3")


def test_bad_grid():
    with pytest.raises(ValueError):
        check_pair(get_pair("J1"), 0, 5)


@pytest.mark.parametrize("m", [5, 7, 9])
def test_telescoped_identities(m):
    assert check_telescoped_M5(m, Fraction(1, 3))
    assert check_telescoped_M5(m, Fraction(-2))
    assert check_telescoped_22(m)


def test_sums_over_n():
    for m in range(3, 16, 2):
        for k in range(1, (m - 1) // 2 + 1):
            assert check_sum_over_n_J1(m, k)
            assert check_sum_over_n_J4(m, k)
        assert check_expansion_J1(m)


def test_even_m_rejected():
    with pytest.raises(ValueError):
        check_telescoped_22(6)
    with pytest.raises(ValueError):
        check_sum_over_n_J1(4, 1)


def test_telescoped_reports_all_hold():
    reports = telescoped_reports(9)
    assert reports
    assert all(reports)


def test_same_formula_modulo_p_cubed():
    # the J4 corner term computed in valuation-unit form matches the exact value
    ctx = PadicCtx(7, 3)
    pair = get_pair("J4")
    for n in range(4):
        exact = residue_of(pair.f(n, 3), ctx)
        assert pair.f(n, 3, one=ValUnit.one(ctx)).to_residue() == exact


def test_poch_is_generic():
    assert poch(Fraction(1), Fraction(1, 2), 3) == Fraction(15, 8)
    ctx = PadicCtx(5, 2)
    assert poch(ValUnit.one(ctx), 1, 5).to_residue().r == 120 % 25


def test_sample_x_is_reproducible():
    first = sample_x(10, seed=1)
    assert first == sample_x(10, seed=1)
    assert len(set(first)) == 10
    assert Fraction(1) not in first


def test_sample_x_avoids_degenerate_values():
    for seed in range(200):
        values = sample_x(10, seed=seed)
        assert Fraction(0) not in values
        assert Fraction(1) not in values
