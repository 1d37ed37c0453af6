import os
from fractions import Fraction

import pytest

from supercong import CongruenceSpec, LemmaCheck, get_check, get_check_ids
from supercong.src.data_loader import (
    UnknownCheckId,
    get_half_full_pairs,
    get_registry_path,
    load_registry_data,
    parse_rational,
    resolve_check_ids,
)


def test_parse_rational():
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("-16/9") == Fraction(-16, 9)
    assert parse_rational(4) == 4
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("half")


def test_registry_file_exists():
    assert os.path.exists(get_registry_path())


def test_registry_contents():
    ids = get_check_ids()
    data = load_registry_data()
    assert len(ids) == len(data["hypergeometric"]) + len(data["lemmas"])
    assert len(data["hypergeometric"]) == 15
    assert len(set(ids)) == len(ids)
    assert ids[0] == "J1a"
    assert isinstance(get_check("J4"), CongruenceSpec)
    assert isinstance(get_check("st5"), LemmaCheck)


def test_registry_parameters():
    spec = get_check("3F2-zu5")
    assert spec.z == Fraction(27, 16)
    assert spec.p_min == 3
    assert get_check("M0[8/9,1/3]").params == (Fraction(8, 9), Fraction(1, 3))


def test_unknown_check_id():
    with pytest.raises(UnknownCheckId):
        get_check("J3")
    # still a KeyError for callers that only know the mapping protocol
    with pytest.raises(KeyError):
        get_check("nope")


def test_resolve_check_ids():
    assert resolve_check_ids([]) == get_check_ids()
    assert resolve_check_ids(["ALL"]) == get_check_ids()
    assert resolve_check_ids(["J4", "J1", "J4"]) == ["J4", "J1"]
    with pytest.raises(UnknownCheckId):
        resolve_check_ids(["J1", "J9"])


def test_half_ranges_point_at_full_sums():
    for full, half in get_half_full_pairs():
        assert half.full_counterpart == full.id
        assert full.num_params == half.num_params
        assert full.z == half.z
