import json
import os
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Union

from .hypersum import CongruenceSpec, Limit, RhsSpec, Status
from .lemmas import LemmaCheck, get_lemma

Check = Union[CongruenceSpec, LemmaCheck]


class UnknownCheckId(KeyError):
    pass


def parse_rational(text: Union[str, int]) -> Fraction:
    """
    "1/2", "-16/9", "4" or 4 -> Fraction. Rationals are stored as strings in the
    registry so they survive JSON untouched.
    """
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise ValueError(f"Cannot read {text!r} as a rational number") from err


def get_registry_path() -> str:
    current_dir = os.path.dirname(__file__)
    return os.path.join(current_dir, "..", "data", "congruences.json")


@lru_cache(maxsize=None)
def load_registry_data() -> Dict:
    with open(get_registry_path()) as json_file:
        return json.load(json_file)


def build_congruence_spec(entry: Dict) -> CongruenceSpec:
    rhs = entry["rhs"]
    discriminant = rhs.get("discriminant")
    return CongruenceSpec(
        id=entry["id"],
        num_params=tuple(parse_rational(a) for a in entry["num_params"]),
        den_params=tuple(parse_rational(b) for b in entry["den_params"]),
        weight=tuple(int(w) for w in entry["weight"]),
        z=parse_rational(entry["z"]),
        limit=Limit(entry["limit"]),
        mod_exp=int(entry["mod_exp"]),
        rhs=RhsSpec(
            coefficient=parse_rational(rhs["coefficient"]),
            discriminant=None if discriminant is None else parse_rational(discriminant),
            p_power=int(rhs["p_power"]),
        ),
        p_min=int(entry["p_min"]),
        status=Status(entry["status"]),
        full_counterpart=entry.get("full_counterpart"),
        label=entry.get("label", ""),
    )


def build_lemma_check(entry: Dict) -> LemmaCheck:
    p_max = entry.get("p_max")
    return LemmaCheck(
        id=entry["id"],
        lemma=get_lemma(entry["evaluator"]),
        mod_exp=int(entry["mod_exp"]),
        p_min=int(entry["p_min"]),
        p_max=None if p_max is None else int(p_max),
        params=tuple(parse_rational(x) for x in entry.get("params", [])),
        label=entry.get("label", ""),
    )


@lru_cache(maxsize=None)
def get_registry() -> Dict[str, Check]:
    """
    Every registered check keyed by id, hypergeometric ones first, in file order.
    """
    data = load_registry_data()
    registry: Dict[str, Check] = {}
    for entry in data["hypergeometric"]:
        registry[entry["id"]] = build_congruence_spec(entry)
    for entry in data["lemmas"]:
        if entry["id"] in registry:
            raise RuntimeError(f"Duplicate check id {entry['id']} in registry")
        registry[entry["id"]] = build_lemma_check(entry)
    for check in registry.values():
        counterpart = getattr(check, "full_counterpart", None)
        if counterpart is not None and counterpart not in registry:
            raise RuntimeError(f"{check.id} names unknown full sum {counterpart}")
    return registry


def get_check_ids() -> List[str]:
    return list(get_registry())


def get_check(check_id: str) -> Check:
    registry = get_registry()
    if check_id not in registry:
        raise UnknownCheckId(f"Unknown check id {check_id}")
    return registry[check_id]


def get_half_full_pairs() -> List[tuple]:
    """(full spec, half spec) for every half-range entry in the registry."""
    registry = get_registry()
    return [
        (registry[check.full_counterpart], check)
        for check in registry.values()
        if isinstance(check, CongruenceSpec) and check.full_counterpart is not None
    ]


def resolve_check_ids(names: Iterable[str]) -> List[str]:
    """
    Expand "ALL" to every registered id and reject unknown ones, keeping order.
    """
    names = list(names)
    if not names or "ALL" in names:
        return get_check_ids()
    for name in names:
        get_check(name)
    return list(dict.fromkeys(names))
