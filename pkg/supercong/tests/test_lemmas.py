from fractions import Fraction

import pytest

from supercong import PadicCtx, PadicInt, get_check
from supercong.src.data_loader import load_registry_data
from supercong.src.hypersum import Skip
from supercong.src.lemmas import (
    LEMMAS,
    NOT_A_UNIT_PARAM,
    Lemma,
    LemmaCheck,
    as_residues,
    central_binomials,
    get_lemma,
    lucas_v,
)


def sides(check_id, p, exact=False):
    lhs, rhs = get_check(check_id).evaluate(p, exact=exact)
    return [v.r for v in lhs], [v.r for v in rhs]


def test_central_binomials():
    values = [c for _, c in central_binomials(Fraction(1), 5)]
    assert values == [2, 6, 20, 70, 252]


def test_lucas_v():
    assert [lucas_v(1, k) for k in range(6)] == [2, 1, 3, 4, 7, 11]
    assert lucas_v(Fraction(1, 2), 2) == Fraction(5, 4)


@pytest.mark.parametrize(
    "check_id,p,expected",
    [
        ("st1", 7, 0),
        ("st3", 5, 2),
        ("st3-3", 5, 16),
        ("st3-3", 3, 5),
        ("st4", 5, 3),
        ("st4", 3, 2),
        ("st4-1[1]", 5, 1),
        ("M0[-8,3]", 7, 14),
        ("st5", 3, 6),
        ("st5", 7, 42),
        ("st5-st4-relation", 3, 3),
        ("J1-reduced", 5, 0),
        ("residue-system", 3, 3),
        ("J1-boundary", 3, 0),
        ("J4-G-sum", 5, 75),
        ("J4-G-sum", 3, 18),
        ("J4-corner", 5, 80),
        ("J4-corner", 3, 15),
        ("J4-F-sum", 3, 18),
    ],
)
def test_anchor_values(check_id, p, expected):
    lhs, rhs = sides(check_id, p)
    assert lhs[-1] == expected
    assert lhs == rhs


@pytest.mark.parametrize("check_id", ["st1", "st4", "st5", "M0[5/9,2/3]", "J4-F-sum"])
def test_modular_and_exact_agree(check_id):
    check = get_check(check_id)
    for p in (7, 11, 13):
        assert sides(check_id, p) == sides(check_id, p, exact=True)
        assert check.is_admissible(p)


def test_every_k_lemmas_return_one_value_per_k():
    lhs, rhs = sides("J2-boundary", 11)
    assert len(lhs) == len(rhs) == 5
    assert all(v == 0 for v in lhs)


def test_non_unit_parameter_is_skipped():
    with pytest.raises(Skip) as err:
        get_check("st4-1[3]").evaluate(3)
    assert err.value.reason == NOT_A_UNIT_PARAM
    with pytest.raises(Skip):
        get_check("M1[1/3]").evaluate(3)
    with pytest.raises(Skip):
        get_check("M0[8/9,1/3]").evaluate(3)


def test_sampling_bound():
    check = get_check("M1[2]")
    assert check.is_admissible(199)
    assert not check.is_admissible(211)
    assert check.kind() == "lemma"


def test_registry_uses_every_evaluator():
    lemma_ids = [entry["id"] for entry in load_registry_data()["lemmas"]]
    used = {get_check(check_id).lemma.name for check_id in lemma_ids}
    assert used == set(LEMMAS)


def test_unknown_evaluator():
    with pytest.raises(KeyError):
        get_lemma("st9")


def test_as_residues():
    ctx = PadicCtx(5, 2)
    assert as_residues(Fraction(1, 2), ctx) == [PadicInt(ctx, 13)]
    mixed = as_residues([1, PadicInt(ctx, 3)], ctx)
    assert mixed == [PadicInt(ctx, 1), PadicInt(ctx, 3)]


def test_mismatched_sides():
    lemma = Lemma("broken", lambda ctx, params, one: [one, one], lambda ctx, params: 0)
    check = LemmaCheck("broken", lemma, mod_exp=1, p_min=3)
    with pytest.raises(ValueError):
        check.evaluate(5)
