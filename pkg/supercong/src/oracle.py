"""
Arbitrary-precision rational ground truth: truncated sums and the finite
identities the proofs lean on, evaluated exactly with fractions.Fraction.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Union

from .padic import NotAUnit, PadicCtx, PadicInt, from_rational

if TYPE_CHECKING:
    from .hypersum import CongruenceSpec

BigRational = Fraction


class NotPIntegral(NotAUnit):
    pass


@dataclass(frozen=True)
class PochSpec:
    base: Fraction
    count: int

    def value(self) -> Fraction:
        return pochhammer(self.base, self.count)


@dataclass(frozen=True)
class IdentityReport:
    """
    Both exact sides of a finite identity; truthy iff they agree.
    """

    name: str
    parameter: Union[int, Fraction, str]
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self):
        return self.holds

    def __str__(self):
        status = "holds" if self.holds else "FAILS"
        return f"{self.name}({self.parameter}): {self.lhs} vs {self.rhs} -> {status}"


def pochhammer(a: Union[int, Fraction], n: int) -> Fraction:
    """
    Rising factorial (a)_n = a (a+1) ... (a+n-1); the empty product is 1.
    """
    if n < 0:
        raise ValueError(f"pochhammer needs a non-negative count, got {n}")
    a = Fraction(a)
    return math.prod((a + j for j in range(n)), start=Fraction(1))


def sum_exact(spec: "CongruenceSpec", p: int) -> Fraction:
    """
    Exact value of the truncated sum of `spec` at the prime p.
    """
    total = Fraction(0)
    term = Fraction(1)
    last = spec.upper_limit(p)
    for n in range(last + 1):
        total += spec.weight_at(n) * term
        if n == last:
            break
        ratio = math.prod((a + n for a in spec.num_params), start=Fraction(1))
        ratio /= math.prod((b + n for b in spec.den_params), start=Fraction(1))
        term *= ratio * spec.z
    return total


def reduce_mod(x: Fraction, ctx: PadicCtx) -> PadicInt:
    x = Fraction(x)
    if x.denominator % ctx.p == 0:
        raise NotPIntegral(f"{x} is not {ctx.p}-integral")
    return from_rational(x.numerator, x.denominator, ctx)


def staver_identity_check(N: int) -> IdentityReport:
    if N < 1:
        raise ValueError("Staver's identity needs N >= 1")
    lhs = sum(Fraction(math.comb(2 * n, n), n) for n in range(1, N + 1))
    inner = sum(Fraction(1, n * n * math.comb(N, n) ** 2) for n in range(1, N + 1))
    rhs = Fraction(N + 1, 3) * math.comb(2 * N + 1, N) * inner
    return IdentityReport("staver", N, lhs, rhs)


def ag_identity_check(N: int) -> IdentityReport:
    if N < 1:
        raise ValueError("the Almkvist-Granville identity needs N >= 1")
    N4 = N**4
    lhs = Fraction(0)
    running = Fraction(1)  # prod_{k=1}^{n-1} (N^4 - k^4)/(4N^4 + k^4)
    for n in range(1, N + 1):
        lhs += Fraction(math.comb(2 * n, n) * n * n, 4 * N4 + n**4) * running
        running *= Fraction(N4 - n**4, 4 * N4 + n**4)
    return IdentityReport("almkvist-granville", N, lhs, Fraction(2, 5 * N * N))


def chu_vandermonde_check(m: int) -> IdentityReport:
    """
    Terminating 2F1 with one term missing, at the formal odd parameter m:

        sum_{n=0}^{(m-3)/2} (1/2-m/2)_n / (n! (2n+1))
            = -(-1)^((m-1)/2)/m + (1)_{(m-1)/2} / (m (1/2)_{(m-1)/2})
    """
    if m < 3 or m % 2 == 0:
        raise ValueError(f"m must be odd and at least 3, got {m}")
    half = (m - 1) // 2
    base = Fraction(1 - m, 2)
    lhs = sum(
        pochhammer(base, n) / (math.factorial(n) * (2 * n + 1)) for n in range(half)
    )
    rhs = Fraction(-((-1) ** half), m) + pochhammer(1, half) / (
        m * pochhammer(Fraction(1, 2), half)
    )
    return IdentityReport("chu-vandermonde", m, lhs, rhs)
