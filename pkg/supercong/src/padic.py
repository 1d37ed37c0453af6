"""
Exact arithmetic modulo p^k with valuation tracking.

PadicInt is a plain residue in [0, p^k). ValUnit keeps a p-adic number as p^v * u
with u a unit, so that products and quotients involving multiples of p stay exact
until the value is added into a residue accumulator.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from sympy import isprime

MAX_EXPONENT = 5

Rational = Union[int, Fraction]


class NotAUnit(ArithmeticError):
    pass


class BadDenominator(NotAUnit):
    pass


class DivByZero(ZeroDivisionError):
    pass


class NegativeValuation(ArithmeticError):
    pass


@dataclass(frozen=True)
class PadicCtx:
    p: int
    k: int
    pk: int = field(init=False, repr=False)

    def __post_init__(self):
        if self.p < 3 or not isprime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if not 1 <= self.k <= MAX_EXPONENT:
            raise ValueError(
                f"modulus exponent must be in 1..{MAX_EXPONENT}, got {self.k}"
            )
        object.__setattr__(self, "pk", self.p**self.k)

    def __str__(self):
        return f"{self.p}^{self.k}"


def valuation(n: int, p: int) -> float:
    """
    p-adic valuation of an integer, math.inf for zero.
    """
    if n == 0:
        return math.inf
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _as_fraction(x: Rational) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class PadicInt:
    ctx: PadicCtx
    r: int

    def __post_init__(self):
        # canonical residue, so equality is a plain integer compare
        object.__setattr__(self, "r", self.r % self.ctx.pk)

    def _coerce(self, other) -> "PadicInt":
        if isinstance(other, PadicInt):
            if other.ctx != self.ctx:
                raise ValueError(f"mixing residues mod {self.ctx} and mod {other.ctx}")
            return other
        if isinstance(other, int):
            return PadicInt(self.ctx, other)
        if isinstance(other, Fraction):
            return from_rational(other.numerator, other.denominator, self.ctx)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PadicInt(self.ctx, self.r + other.r)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PadicInt(self.ctx, self.r - other.r)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PadicInt(self.ctx, other.r - self.r)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PadicInt(self.ctx, self.r * other.r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * inv(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * inv(self)

    def __neg__(self):
        return PadicInt(self.ctx, -self.r)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return inv(self) ** (-exponent)
        return PadicInt(self.ctx, pow(self.r, exponent, self.ctx.pk))

    def is_unit(self) -> bool:
        return self.r % self.ctx.p != 0

    def __int__(self):
        return self.r

    def __str__(self):
        return f"{self.r} (mod {self.ctx})"


def inv(a: PadicInt) -> PadicInt:
    if not a.is_unit():
        raise NotAUnit(f"{a.r} is not invertible modulo {a.ctx}")
    return PadicInt(a.ctx, pow(a.r, -1, a.ctx.pk))


def from_rational(num: int, den: int, ctx: PadicCtx) -> PadicInt:
    if den % ctx.p == 0:
        raise NotAUnit(f"denominator {den} is divisible by p={ctx.p}")
    return PadicInt(ctx, num * pow(den, -1, ctx.pk))


def legendre(a: Rational, p: int) -> int:
    """
    Legendre symbol (a/p) of a p-integral rational via Euler's criterion.
    """
    a = _as_fraction(a)
    if a.denominator % p == 0:
        raise BadDenominator(f"denominator of {a} is divisible by p={p}")
    if a.numerator % p == 0:
        return 0
    x = a.numerator * pow(a.denominator, -1, p) % p
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class Fq:
    """Fermat quotient q_p(x) = (x^(p-1) - 1)/p, as a residue mod p."""

    p: int
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def __add__(self, other: "Fq") -> "Fq":
        if other.p != self.p:
            raise ValueError("Fermat quotients for different primes")
        return Fq(self.p, self.value + other.value)

    def __mul__(self, c: int) -> "Fq":
        return Fq(self.p, self.value * c)

    __rmul__ = __mul__


def fermat_quotient(x: Rational, p: int) -> Fq:
    x = _as_fraction(x)
    if x.numerator % p == 0 or x.denominator % p == 0:
        raise NotAUnit(f"{x} is not a {p}-adic unit")
    p2 = p * p
    residue = x.numerator * pow(x.denominator, -1, p2) % p2
    t = (pow(residue, p - 1, p2) - 1) % p2
    # x^(p-1) = 1 (mod p) for units, so the division is exact
    return Fq(p, t // p)


@dataclass(frozen=True)
class ValUnit:
    """
    p^v * u with u a unit known modulo p^k; v = math.inf encodes exact zero.
    """

    ctx: PadicCtx
    v: float
    u: int

    def __post_init__(self):
        if self.v == math.inf:
            object.__setattr__(self, "u", 0)
            return
        if self.v < 0:
            raise NegativeValuation(f"valuation {self.v} < 0")
        u = self.u % self.ctx.pk
        if u % self.ctx.p == 0:
            raise ValueError(f"unit part {self.u} is divisible by p={self.ctx.p}")
        object.__setattr__(self, "u", u)

    @classmethod
    def zero(cls, ctx: PadicCtx) -> "ValUnit":
        return cls(ctx, math.inf, 0)

    @classmethod
    def one(cls, ctx: PadicCtx) -> "ValUnit":
        return cls(ctx, 0, 1)

    @classmethod
    def from_fraction(cls, num: int, den: int, ctx: PadicCtx) -> "ValUnit":
        if den == 0:
            raise DivByZero("zero denominator")
        if num == 0:
            return cls.zero(ctx)
        p = ctx.p
        v_num = valuation(num, p)
        v_den = valuation(den, p)
        if v_num < v_den:
            raise NegativeValuation(f"{num}/{den} has negative {p}-adic valuation")
        num //= p**v_num
        den //= p**v_den
        return cls(ctx, v_num - v_den, num * pow(den, -1, ctx.pk))

    def _coerce(self, other) -> "ValUnit":
        if isinstance(other, ValUnit):
            if other.ctx != self.ctx:
                raise ValueError(f"mixing values in {self.ctx} and {other.ctx}")
            return other
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            return ValUnit.from_fraction(other.numerator, other.denominator, self.ctx)
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return self.v == math.inf

    def to_residue(self) -> PadicInt:
        if self.v >= self.ctx.k:
            return PadicInt(self.ctx, 0)
        return PadicInt(self.ctx, self.ctx.p**self.v * self.u)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return vu_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return vu_div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return vu_div(other, self)

    def __neg__(self):
        if self.is_zero:
            return self
        return ValUnit(self.ctx, self.v, -self.u)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return ValUnit.one(self.ctx) / self ** (-exponent)
        if self.is_zero:
            return ValUnit.one(self.ctx) if exponent == 0 else self
        return ValUnit(self.ctx, self.v * exponent, pow(self.u, exponent, self.ctx.pk))


def vu_mul(a: ValUnit, b: ValUnit) -> ValUnit:
    if a.is_zero or b.is_zero:
        return ValUnit.zero(a.ctx)
    return ValUnit(a.ctx, a.v + b.v, a.u * b.u)


def vu_div(a: ValUnit, b: ValUnit) -> ValUnit:
    if b.is_zero:
        raise DivByZero("division by an exact zero")
    if a.is_zero:
        return a
    if a.v < b.v:
        raise NegativeValuation(f"quotient valuation {a.v} - {b.v} < 0")
    return ValUnit(a.ctx, a.v - b.v, a.u * pow(b.u, -1, a.ctx.pk))


def to_residue(t: ValUnit) -> PadicInt:
    return t.to_residue()


def vu_add_into_residue(acc: PadicInt, t: ValUnit) -> PadicInt:
    return acc + t.to_residue()


def residue_of(x, ctx: PadicCtx) -> PadicInt:
    """
    Reduce any of Fraction / int / PadicInt / ValUnit to a residue mod p^k.
    """
    if isinstance(x, PadicInt):
        return x
    if isinstance(x, ValUnit):
        return x.to_residue()
    x = _as_fraction(x)
    return from_rational(x.numerator, x.denominator, ctx)
