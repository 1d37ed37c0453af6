"""
Closed-form auxiliary congruences used in the proofs of the main supercongruences.

Each lemma has a left-hand side written once, generic in its number type (`one`
is Fraction(1) for exact evaluation, or a PadicInt / ValUnit one for the fast
modular path), and a right-hand side computed directly as a residue.
"Every k" lemmas return one value per k instead of a single value.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .hypersum import Skip, Status
from .oracle import reduce_mod
from .padic import (
    PadicCtx,
    PadicInt,
    ValUnit,
    fermat_quotient,
    from_rational,
    residue_of,
)
from .wz import HALF, WZ_PAIRS, poch

NOT_A_UNIT_PARAM = "NotAUnitParam"


@dataclass(frozen=True)
class Lemma:
    """
    lhs(ctx, params, one) -> value or list of values in the type of `one`
    rhs(ctx, params)      -> PadicInt or list of PadicInt
    number: which `one` the modular path uses, "residue" or "valunit".
    """

    name: str
    lhs: Callable
    rhs: Callable
    number: str = "residue"

    def modular_one(self, ctx: PadicCtx):
        if self.number == "valunit":
            return ValUnit.one(ctx)
        return PadicInt(ctx, 1)


def _require_units(p: int, *values: Fraction) -> None:
    for value in values:
        value = Fraction(value)
        if value.numerator % p == 0 or value.denominator % p == 0:
            raise Skip(NOT_A_UNIT_PARAM, f"{value} is not a {p}-adic unit")


def _require_integral(p: int, *values: Fraction) -> None:
    for value in values:
        if Fraction(value).denominator % p == 0:
            raise Skip(NOT_A_UNIT_PARAM, f"{value} is not {p}-integral")


def _total(terms, one, ctx: PadicCtx):
    """Sum in the number type of `one`; ValUnit terms are added as residues."""
    if isinstance(one, ValUnit):
        return sum((t.to_residue() for t in terms), PadicInt(ctx, 0))
    return sum(terms, one * 0)


def _exact_quotient_by_p(value: PadicInt, ctx: PadicCtx) -> PadicInt:
    """
    value is known mod p^(k+1) and divisible by p; return value/p mod p^k.
    """
    if value.r % ctx.p != 0:
        raise ArithmeticError(f"{value} is not divisible by {ctx.p}")
    return PadicInt(ctx, value.r // ctx.p)


def central_binomials(one, last: int) -> Iterator[Tuple[int, object]]:
    """
    Yield (n, C(2n,n)) for n = 1..last via C(2n,n) = C(2n-2,n-1) * 2(2n-1)/n.
    """
    c = one
    for n in range(1, last + 1):
        c = c * Fraction(2 * (2 * n - 1), n)
        yield n, c


def _powers(one, base: Fraction, last: int) -> List:
    """[base^1, ..., base^last] in the type of `one`."""
    out = []
    value = one
    for _ in range(last):
        value = value * base
        out.append(value)
    return out


def _half(p: int) -> int:
    return (p - 1) // 2


# ---------------------------------------------------------------------------
# Sums of central binomials over the half range
# ---------------------------------------------------------------------------


def _st1_lhs(ctx, params, one):
    return _total((c / n for n, c in central_binomials(one, _half(ctx.p))), one, ctx)


def _st2_lhs(ctx, params, one):
    terms = (c * (-1) ** n / (n * n) for n, c in central_binomials(one, _half(ctx.p)))
    return _total(terms, one, ctx)


def _zero_rhs(ctx, params):
    return PadicInt(ctx, 0)


# ---------------------------------------------------------------------------
# Powers of 4 against central binomials, and Morley's congruence
# ---------------------------------------------------------------------------


def _st3_lhs(ctx, params, one):
    last = (ctx.p - 3) // 2
    quarters = _powers(one, Fraction(1, 4), last)
    terms = [one] + [
        c * quarters[n - 1] / (2 * n + 1) for n, c in central_binomials(one, last)
    ]
    return _total(terms, one, ctx)


def _st3_rhs(ctx, params):
    p = ctx.p
    q2 = fermat_quotient(2, p).value
    return PadicInt(ctx, -((-1) ** _half(p)) * q2)


def _st3_3_lhs(ctx, params, one):
    N = _half(ctx.p)
    return poch(one, HALF, N) / poch(one, 1, N)


def _st3_3_rhs(ctx, params):
    p = ctx.p
    return PadicInt(ctx, (-1) ** _half(p) * pow(2, p - 1, ctx.pk))


# ---------------------------------------------------------------------------
# Sums of (-2)^n C(2n,n) over the full range
# ---------------------------------------------------------------------------


def _minus_two_terms(one, p: int):
    last = p - 1
    powers = _powers(one, Fraction(-2), last)
    return [(n, c * powers[n - 1]) for n, c in central_binomials(one, last)]


def _st4_lhs(ctx, params, one):
    return _total((t / n for n, t in _minus_two_terms(one, ctx.p)), one, ctx)


def _st4_rhs(ctx, params):
    return PadicInt(ctx, -4 * fermat_quotient(2, ctx.p).value)


def _st5_lhs(ctx, params, one):
    return _total((t for _, t in _minus_two_terms(one, ctx.p)), one, ctx) * 3


def _st5_rhs(ctx, params):
    # -4 p q_p(2) = -4 (2^(p-1) - 1)
    return PadicInt(ctx, -4 * (pow(2, ctx.p - 1, ctx.pk) - 1))


def _st5_st4_relation_lhs(ctx, params, one):
    terms = _minus_two_terms(one, ctx.p)
    plain = _total((t for _, t in terms), one, ctx)
    over_n = _total((t / n for n, t in terms), one, ctx)
    return plain * Fraction(3, 4) + over_n * Fraction(ctx.p, 4)


def _st5_st4_relation_rhs(ctx, params):
    return PadicInt(ctx, 2 * (1 - pow(2, ctx.p - 1, ctx.pk)))


def lucas_v(m: Fraction, k: int) -> Fraction:
    """
    V_0 = 2, V_1 = m, V_j = m (V_(j-1) + V_(j-2)), in exact rationals.
    """
    m = Fraction(m)
    previous, current = Fraction(2), m
    if k == 0:
        return previous
    for _ in range(k - 1):
        previous, current = current, m * (current + previous)
    return current


def _st4_1_lhs(ctx, params, one):
    (m,) = params
    _require_units(ctx.p, m)
    last = ctx.p - 1
    powers = _powers(one, -1 / Fraction(m), last)
    terms = (c * powers[n - 1] / n for n, c in central_binomials(one, last))
    return _total(terms, one, ctx)


def _st4_1_rhs(ctx, params):
    (m,) = params
    _require_units(ctx.p, m)
    p = ctx.p
    m = Fraction(m)
    return reduce_mod(2 / m * (m**p - lucas_v(m, p)) / p, ctx)


# ---------------------------------------------------------------------------
# Binomial sums at a free parameter, and the two logarithm-type congruences
# ---------------------------------------------------------------------------


def _m0_lhs(ctx, params, one):
    x, y = params
    _check_m0_params(ctx.p, x, y)
    last = ctx.p - 1
    powers = _powers(one, Fraction(x) / 4, last)
    terms = (c * powers[n - 1] for n, c in central_binomials(one, last))
    return _total(terms, one, ctx)


def _check_m0_params(p: int, x: Fraction, y: Fraction) -> None:
    x, y = Fraction(x), Fraction(y)
    _require_units(p, x, 1 - x, y + 1, y - 1)
    gap = y * y - (1 - x)
    if gap != 0 and gap.numerator % p != 0:
        raise Skip(NOT_A_UNIT_PARAM, f"y^2 = {y * y} is not 1 - x = {1 - x} mod {p}")


def _m0_rhs(ctx, params):
    x, y = (Fraction(v) for v in params)
    _check_m0_params(ctx.p, x, y)
    p = ctx.p
    mod_p = PadicCtx(p, 1)

    def q(value: Fraction) -> PadicInt:
        return PadicInt(mod_p, fermat_quotient(value, p).value)

    bracket = -q(x) + q(y + 1) * (y + 1) - q(y - 1) * (y - 1)
    inner = bracket * (x / (2 * (1 - x)))
    return PadicInt(ctx, p * inner.r)


def _m1_lhs(ctx, params, one):
    (x,) = params
    _require_integral(ctx.p, x)
    last = ctx.p - 1
    powers = _powers(one, Fraction(x), last)
    return _total((powers[n - 1] / n for n in range(1, last + 1)), one, ctx)


def _m1_rhs(ctx, params):
    (x,) = params
    _require_integral(ctx.p, x)
    p = ctx.p
    lifted = PadicCtx(p, ctx.k + 1)
    X = from_rational(Fraction(x).numerator, Fraction(x).denominator, lifted)
    return _exact_quotient_by_p(1 - X**p - (1 - X) ** p, ctx)


def _m2_lhs(ctx, params, one):
    (x,) = params
    _require_integral(ctx.p, x)
    last = ctx.p - 2
    powers = _powers(one, Fraction(x), last)
    return _total((powers[j - 1] / j for j in range(1, last + 1, 2)), one, ctx)


def _m2_rhs(ctx, params):
    (x,) = params
    _require_integral(ctx.p, x)
    p = ctx.p
    lifted = PadicCtx(p, ctx.k + 1)
    X = from_rational(Fraction(x).numerator, Fraction(x).denominator, lifted)
    return _exact_quotient_by_p((1 + X) ** p - (1 - X) ** p - 2 * X**p, ctx) / 2


def _harmonic_lhs(ctx, params, one):
    return _total((one / n for n in range(1, ctx.p)), one, ctx)


def _residue_system_lhs(ctx, params, one):
    p = ctx.p
    return [poch(one, HALF - k, p) for k in range(1, _half(p) + 1)]


def _residue_system_rhs(ctx, params):
    p = ctx.p
    value = from_rational(math.factorial(p), 2, ctx)
    return [value] * _half(p)


# ---------------------------------------------------------------------------
# Reductions inside the proofs of the half-range theorems
# ---------------------------------------------------------------------------


def _shifted_terms(one, p: int, power: int, z: int):
    """
    Yield (n, (1/2)_n (1+p/2)_(n-1)^power / (1)_n^(power+1) z^n) for n = 1..(p-1)/2.
    """
    term = one * Fraction(z, 2)
    for n in range(1, _half(p) + 1):
        yield n, term
        ratio = Fraction(2 * n + 1, 2) * Fraction(2 * n + p, 2) ** power * z
        term = term * (ratio / (n + 1) ** (power + 1))


def _j1_reduced_lhs(ctx, params, one):
    return _total((n * t for n, t in _shifted_terms(one, ctx.p, 2, 4)), one, ctx)


def _j2_reduced_lhs(ctx, params, one):
    return _total((n * n * t for n, t in _shifted_terms(one, ctx.p, 4, -4)), one, ctx)


def _boundary_lhs(pair_id: str):
    def lhs(ctx, params, one):
        p = ctx.p
        pair = WZ_PAIRS[pair_id]
        return [pair.g((p + 1) // 2, k, one=one) for k in range(1, _half(p) + 1)]

    return lhs


def _boundary_rhs(ctx, params):
    return [PadicInt(ctx, 0)] * _half(ctx.p)


def _sign(p: int) -> int:
    return (-1) ** _half(p)


def _j4_g_sum_lhs(ctx, params, one):
    p = ctx.p
    pair = WZ_PAIRS["J4"]
    return _total((pair.g(p, k, one=one) for k in range(1, _half(p) + 1)), one, ctx)


def _j4_g_sum_rhs(ctx, params):
    p = ctx.p
    return PadicInt(ctx, _sign(p) * p * (pow(2, p - 1, ctx.pk) - 1))


def _j4_corner_lhs(ctx, params, one):
    return WZ_PAIRS["J4"].f(0, _half(ctx.p), one=one)


def _j4_corner_rhs(ctx, params):
    p = ctx.p
    return PadicInt(ctx, _sign(p) * p * pow(2, p - 1, ctx.pk))


def _j4_f_sum_lhs(ctx, params, one):
    p = ctx.p
    pair = WZ_PAIRS["J4"]
    return _total((pair.f(n, _half(p), one=one) for n in range(1, p)), one, ctx)


def _j4_f_sum_rhs(ctx, params):
    p = ctx.p
    return PadicInt(ctx, _sign(p) * p * 2 * (1 - pow(2, p - 1, ctx.pk)))


LEMMAS: Dict[str, Lemma] = {
    lemma.name: lemma
    for lemma in [
        Lemma("st1", _st1_lhs, _zero_rhs),
        Lemma("st2", _st2_lhs, _zero_rhs),
        Lemma("st3", _st3_lhs, _st3_rhs),
        Lemma("st3-3", _st3_3_lhs, _st3_3_rhs),
        Lemma("st4", _st4_lhs, _st4_rhs),
        Lemma("st5", _st5_lhs, _st5_rhs),
        Lemma("st5-st4-relation", _st5_st4_relation_lhs, _st5_st4_relation_rhs),
        Lemma("st4-1", _st4_1_lhs, _st4_1_rhs),
        Lemma("M0", _m0_lhs, _m0_rhs),
        Lemma("M1", _m1_lhs, _m1_rhs),
        Lemma("M2", _m2_lhs, _m2_rhs),
        Lemma("harmonic", _harmonic_lhs, _zero_rhs),
        Lemma("residue-system", _residue_system_lhs, _residue_system_rhs),
        Lemma("J1-reduced", _j1_reduced_lhs, _zero_rhs),
        Lemma("J2-reduced", _j2_reduced_lhs, _zero_rhs),
        Lemma("J1-boundary", _boundary_lhs("J1"), _boundary_rhs, "valunit"),
        Lemma("J2-boundary", _boundary_lhs("J2"), _boundary_rhs, "valunit"),
        Lemma("J4-G-sum", _j4_g_sum_lhs, _j4_g_sum_rhs, "valunit"),
        Lemma("J4-corner", _j4_corner_lhs, _j4_corner_rhs, "valunit"),
        Lemma("J4-F-sum", _j4_f_sum_lhs, _j4_f_sum_rhs, "valunit"),
    ]
}


def get_lemma(name: str) -> Lemma:
    if name not in LEMMAS:
        raise KeyError(f"Unknown lemma evaluator {name}")
    return LEMMAS[name]


def as_residues(value, ctx: PadicCtx) -> List[PadicInt]:
    """
    Normalise a lemma side (single value or per-k list, any number type) to residues.
    """
    values: Sequence = value if isinstance(value, list) else [value]
    return [residue_of(v, ctx) for v in values]


@dataclass(frozen=True)
class LemmaCheck:
    id: str
    lemma: Lemma
    mod_exp: int
    p_min: int
    p_max: Optional[int] = None
    params: Tuple[Fraction, ...] = ()
    label: str = ""
    status: Status = Status.PROVEN

    def is_admissible(self, p: int) -> bool:
        return p >= self.p_min and (self.p_max is None or p <= self.p_max)

    def kind(self) -> str:
        return "lemma"

    def evaluate(
        self, p: int, exact: bool = False
    ) -> Tuple[List[PadicInt], List[PadicInt]]:
        """
        Both sides as residue lists mod p^mod_exp. Raises Skip for parameters
        that are not p-adic units at this prime.
        """
        ctx = PadicCtx(p, self.mod_exp)
        one = Fraction(1) if exact else self.lemma.modular_one(ctx)
        lhs = as_residues(self.lemma.lhs(ctx, self.params, one), ctx)
        rhs = as_residues(self.lemma.rhs(ctx, self.params), ctx)
        if len(lhs) != len(rhs):
            raise ValueError(
                f"{self.id}: {len(lhs)} left values against {len(rhs)} right"
            )
        return lhs, rhs
