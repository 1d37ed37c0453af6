"""
Fast evaluation of truncated hypergeometric sums modulo p^K.

The n-th term is built from the previous one by the term ratio
prod(a_i + n) / prod(b_j + n) * z, carried in valuation-unit form so that
factors divisible by p never need an inverse. The weight W(n) is applied to a
residue snapshot of each term, never to the running product.
"""
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple

from .padic import (
    PadicCtx,
    PadicInt,
    ValUnit,
    from_rational,
    legendre,
    vu_add_into_residue,
)


class Limit(Enum):
    FULL = "FULL"  # n <= p - 1
    HALF = "HALF"  # n <= (p - 1)/2


class Status(Enum):
    PROVEN = "PROVEN"
    CONJECTURAL = "CONJECTURAL"


class Skip(Exception):
    """
    Raised when the fast path cannot reduce the parameters modulo p.
    """

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


NOT_P_INTEGRAL_PARAMS = "NotPIntegralParams"


@dataclass(frozen=True)
class RhsSpec:
    """A * (D/p) * p^e; no Legendre factor when D is None."""

    coefficient: Fraction
    discriminant: Optional[Fraction]
    p_power: int


@dataclass(frozen=True)
class CongruenceSpec:
    id: str
    num_params: Tuple[Fraction, ...]
    den_params: Tuple[Fraction, ...]
    weight: Tuple[int, int, int]  # (w0, w1, w2): W(n) = w2 n^2 + w1 n + w0
    z: Fraction
    limit: Limit
    mod_exp: int
    rhs: RhsSpec
    p_min: int
    status: Status
    full_counterpart: Optional[str] = None
    label: str = ""

    def __post_init__(self):
        if len(self.num_params) != len(self.den_params):
            raise ValueError(
                f"{self.id}: {len(self.num_params)} numerator parameters but "
                f"{len(self.den_params)} denominator parameters"
            )

    def upper_limit(self, p: int) -> int:
        return p - 1 if self.limit == Limit.FULL else (p - 1) // 2

    def weight_at(self, n: int) -> int:
        w0, w1, w2 = self.weight
        return w2 * n * n + w1 * n + w0

    def is_admissible(self, p: int) -> bool:
        return p >= self.p_min

    def kind(self) -> str:
        return "hypergeometric"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    p: int
    mod_exp: int
    lhs: Optional[int]
    rhs: Optional[int]
    passed: Optional[bool]
    skipped: Optional[str] = None
    route: str = "modular"

    @property
    def modulus(self) -> str:
        return f"{self.p}^{self.mod_exp}"

    def to_dict(self) -> Dict:
        return {
            "check": self.check_id,
            "p": self.p,
            "modulus": self.modulus,
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "pass": self.passed,
            "skipped": self.skipped,
            "route": self.route,
        }

    @classmethod
    def compare(
        cls, check_id: str, p: int, lhs: PadicInt, rhs: PadicInt, route="modular"
    ) -> "CheckResult":
        return cls(check_id, p, lhs.ctx.k, lhs.r, rhs.r, lhs == rhs, route=route)

    @classmethod
    def skip(cls, check_id: str, p: int, mod_exp: int, reason: str) -> "CheckResult":
        return cls(check_id, p, mod_exp, None, None, None, skipped=reason)


def require_p_integral(spec: CongruenceSpec, p: int) -> None:
    for a in spec.num_params + spec.den_params:
        if a.denominator % p == 0:
            raise Skip(NOT_P_INTEGRAL_PARAMS, f"{p} divides the denominator of {a}")
    if spec.z.numerator % p == 0 or spec.z.denominator % p == 0:
        raise Skip(NOT_P_INTEGRAL_PARAMS, f"z = {spec.z} is not a {p}-adic unit")


def iter_terms(spec: CongruenceSpec, ctx: PadicCtx) -> Iterator[Tuple[int, ValUnit]]:
    """
    Yield (n, term_n) for n = 0 .. upper limit, term_0 = 1, unweighted.
    """
    require_p_integral(spec, ctx.p)
    # (r + n s)/s for every a = r/s, with the constant denominators folded once
    num_den = math.prod(a.denominator for a in spec.num_params)
    den_den = math.prod(b.denominator for b in spec.den_params)
    z_num, z_den = spec.z.numerator, spec.z.denominator

    term = ValUnit.one(ctx)
    last = spec.upper_limit(ctx.p)
    for n in range(last + 1):
        yield n, term
        if n == last:
            break
        top = z_num * den_den
        for a in spec.num_params:
            top *= a.numerator + n * a.denominator
        bottom = z_den * num_den
        for b in spec.den_params:
            bottom *= b.numerator + n * b.denominator
        # bottom is a unit for the shipped specs; from_fraction raises otherwise
        term = term * ValUnit.from_fraction(top, bottom, ctx)


def eval_sum_mod(spec: CongruenceSpec, p: int) -> PadicInt:
    ctx = PadicCtx(p, spec.mod_exp)
    total = PadicInt(ctx, 0)
    for n, term in iter_terms(spec, ctx):
        total = vu_add_into_residue(total, term * spec.weight_at(n))
    return total


def term_valuations(spec: CongruenceSpec, p: int) -> Iterator[float]:
    ctx = PadicCtx(p, spec.mod_exp)
    for _, term in iter_terms(spec, ctx):
        yield term.v


def rhs_residue(spec: CongruenceSpec, p: int) -> PadicInt:
    ctx = PadicCtx(p, spec.mod_exp)
    A = spec.rhs.coefficient
    value = from_rational(A.numerator, A.denominator, ctx)
    if spec.rhs.discriminant is not None:
        value = value * legendre(spec.rhs.discriminant, p)
    return value * p**spec.rhs.p_power


def _same_sum(a: CongruenceSpec, b: CongruenceSpec) -> bool:
    return (
        a.num_params == b.num_params
        and a.den_params == b.den_params
        and a.weight == b.weight
        and a.z == b.z
        and a.mod_exp == b.mod_exp
    )


def half_full_residues(
    spec_full: CongruenceSpec, spec_half: CongruenceSpec, p: int
) -> Tuple[PadicInt, PadicInt]:
    """
    The full-range and the half-range sum of the same series, both mod p^K.
    """
    if not _same_sum(spec_full, spec_half):
        raise ValueError(f"{spec_full.id} and {spec_half.id} differ beyond their limit")
    if spec_full.limit != Limit.FULL or spec_half.limit != Limit.HALF:
        raise ValueError("expected one FULL-range sum and one HALF-range sum")
    return eval_sum_mod(spec_full, p), eval_sum_mod(spec_half, p)


def half_full_agree(
    spec_full: CongruenceSpec, spec_half: CongruenceSpec, p: int
) -> bool:
    full, half = half_full_residues(spec_full, spec_half, p)
    return full == half
