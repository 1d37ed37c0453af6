"""
The four WZ pairs (F, G) with F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k), and
exact certification of that relation and of its telescoped sums.

Every evaluator takes a `one` that fixes the number type: Fraction(1) for
exact certification, or a ValUnit one when the lemma checks need the same
formulas modulo p^K.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

import numpy as np

from .oracle import IdentityReport

HALF = Fraction(1, 2)


class UndefinedTerm(ZeroDivisionError):
    pass


def poch(one, a: Union[int, Fraction], n: int):
    result = one
    for j in range(n):
        result = result * (a + j)
    return result


def _lemma3_f(one, n: int, k: int, x: Fraction):
    return poch(one, HALF - k, n) / poch(one, 1, n) * x**n / (1 - x) ** k


def _lemma3_g(one, n: int, k: int, x: Fraction):
    if n == 0:
        return one * 0
    return -(poch(one, HALF * 3 - k, n - 1) / poch(one, 1, n - 1)) * x**n / (1 - x) ** k


def _j1_f(one, n: int, k: int, x=None):
    top = poch(one, HALF, n) * poch(one, HALF + k, n) ** 2
    return top / poch(one, 1, n) ** 3 * ((3 * n + 2 * k + 1) * 4**n)


def _j1_g(one, n: int, k: int, x=None):
    if n == 0:
        return one * 0
    top = poch(one, HALF, n) * poch(one, HALF + k, n - 1) ** 2
    return -(top / poch(one, 1, n - 1) ** 3 * 4**n)


def _j2_f(one, n: int, k: int, x=None):
    w = 10 * n * n + 12 * n * k + 4 * k * k + 6 * n + 4 * k + 1
    top = poch(one, HALF, n) * poch(one, HALF + k, n) ** 4
    return top / poch(one, 1, n) ** 5 * (w * (-4) ** n)


def _j2_g(one, n: int, k: int, x=None):
    if n == 0:
        return one * 0
    top = poch(one, HALF, n) * poch(one, HALF + k, n - 1) ** 4
    factor = (n + 2 * k - 1) * (-1) ** n * 2 ** (2 * n + 1)
    return top / poch(one, 1, n - 1) ** 5 * factor


def _j4_f(one, n: int, k: int, x=None):
    top = poch(one, HALF, n) * poch(one, HALF + k, n) ** 2 * poch(one, HALF, k)
    bottom = poch(one, 1, n) ** 2 * poch(one, 1 + 2 * k, n) * poch(one, 1, k)
    return top / bottom * ((3 * n + 2 * k + 1) * (-8) ** n)


def _j4_g(one, n: int, k: int, x=None):
    if n == 0:
        return one * 0
    top = poch(one, HALF, n) * poch(one, HALF + k, n - 1) ** 2 * poch(one, HALF, k)
    bottom = poch(one, 1, n - 1) ** 2 * poch(one, 1 + 2 * k, n - 1) * poch(one, 1, k)
    # 2^(3n-2) stays integral since n >= 1 here
    return top / bottom * ((-1) ** n * 2 ** (3 * n - 2))


@dataclass(frozen=True)
class WzPair:
    id: str
    F: Callable
    G: Callable
    needs_x: bool = False

    def f(self, n: int, k: int, x: Optional[Fraction] = None, one=Fraction(1)):
        return self._call(self.F, one, n, k, x)

    def g(self, n: int, k: int, x: Optional[Fraction] = None, one=Fraction(1)):
        return self._call(self.G, one, n, k, x)

    def _call(self, func, one, n, k, x):
        if self.needs_x and x is None:
            raise ValueError(f"pair {self.id} needs a parameter x")
        try:
            return func(one, n, k, x)
        except ZeroDivisionError as err:
            where = f"(n,k)=({n},{k}), x={x}"
            raise UndefinedTerm(f"{self.id} undefined at {where}") from err


WZ_PAIRS: Dict[str, WzPair] = {
    "LEMMA3": WzPair("LEMMA3", _lemma3_f, _lemma3_g, needs_x=True),
    "J1": WzPair("J1", _j1_f, _j1_g),
    "J2": WzPair("J2", _j2_f, _j2_g),
    "J4": WzPair("J4", _j4_f, _j4_g),
}


def get_pair(pair_id: str) -> WzPair:
    if pair_id not in WZ_PAIRS:
        raise KeyError(f"Unknown WZ pair {pair_id}, choose from {sorted(WZ_PAIRS)}")
    return WZ_PAIRS[pair_id]


@dataclass(frozen=True)
class GridReport:
    pair_id: str
    n_max: int
    k_max: int
    x: Optional[Fraction]
    counterexample: Optional[Tuple[int, int, str]] = None

    @property
    def all_pass(self) -> bool:
        return self.counterexample is None

    def __str__(self):
        where = f" x={self.x}" if self.x is not None else ""
        grid = f"0..{self.n_max} x 1..{self.k_max}"
        if self.all_pass:
            return f"{self.pair_id}{where} on {grid}: all-pass"
        n, k, detail = self.counterexample
        return f"{self.pair_id}{where} on {grid}: FAIL at (n,k)=({n},{k}) {detail}"


def check_pair(
    pair: WzPair, n_max: int = 12, k_max: int = 12, x: Optional[Fraction] = None
) -> GridReport:
    """
    Exact check of F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k) for 0 <= n <= n_max,
    1 <= k <= k_max. An undefined term counts as a counterexample; x = 0 is
    refused for the parametrised pair since every term with n >= 1 vanishes.
    """
    if n_max < 1 or k_max < 1:
        raise ValueError("grid bounds must be at least 1")
    if pair.needs_x and x == 0:
        raise ValueError(f"pair {pair.id} is degenerate at x=0")
    for n in range(n_max + 1):
        for k in range(1, k_max + 1):
            try:
                lhs = pair.f(n, k - 1, x) - pair.f(n, k, x)
                rhs = pair.g(n + 1, k, x) - pair.g(n, k, x)
            except UndefinedTerm as err:
                return GridReport(pair.id, n_max, k_max, x, (n, k, str(err)))
            if lhs != rhs:
                return GridReport(pair.id, n_max, k_max, x, (n, k, f"{lhs} != {rhs}"))
    return GridReport(pair.id, n_max, k_max, x)


def check_g_zero_convention(
    pair: WzPair, k_max: int = 12, x: Optional[Fraction] = None
) -> bool:
    return all(pair.g(0, k, x) == 0 for k in range(1, k_max + 1))


def _require_odd(m: int, least: int) -> None:
    if m < least or m % 2 == 0:
        raise ValueError(f"m must be odd and at least {least}, got {m}")


def check_telescoped_M5(m: int, x: Fraction) -> IdentityReport:
    """
    sum_{n=1}^{m-1} F(n,0) = -F(0,0) + sum_{n=0}^{m-1} F(n,(m+1)/2)
                             + sum_{k=1}^{(m+1)/2} G(m,k)        (LEMMA3 pair)
    """
    _require_odd(m, 5)
    pair = WZ_PAIRS["LEMMA3"]
    x = Fraction(x)
    top = (m + 1) // 2
    lhs = sum((pair.f(n, 0, x) for n in range(1, m)), Fraction(0))
    rhs = -pair.f(0, 0, x)
    rhs += sum((pair.f(n, top, x) for n in range(m)), Fraction(0))
    rhs += sum((pair.g(m, k, x) for k in range(1, top + 1)), Fraction(0))
    return IdentityReport("M5", f"m={m}, x={x}", lhs, rhs)


def check_telescoped_22(m: int) -> IdentityReport:
    """
    sum_{n=0}^{m-1} F(n,0) = sum_{n=0}^{m-1} F(n,(m-1)/2) + sum_{k=1}^{(m-1)/2} G(m,k)
    for the J4 pair.
    """
    _require_odd(m, 5)
    pair = WZ_PAIRS["J4"]
    top = (m - 1) // 2
    lhs = sum((pair.f(n, 0) for n in range(m)), Fraction(0))
    rhs = sum((pair.f(n, top) for n in range(m)), Fraction(0))
    rhs += sum((pair.g(m, k) for k in range(1, top + 1)), Fraction(0))
    return IdentityReport("22", m, lhs, rhs)


def check_sum_over_n_J1(m: int, k: int) -> IdentityReport:
    """
    J1 pair summed over n = 0..(m-1)/2:
    sum F(n,k-1) - sum F(n,k) = G((m+1)/2, k).
    """
    _require_odd(m, 3)
    pair = WZ_PAIRS["J1"]
    half = (m - 1) // 2
    lhs = sum((pair.f(n, k - 1) - pair.f(n, k) for n in range(half + 1)), Fraction(0))
    return IdentityReport("sum-over-n-J1", f"m={m}, k={k}", lhs, pair.g(half + 1, k))


def check_sum_over_n_J4(m: int, k: int) -> IdentityReport:
    """
    J4 pair summed over n = 0..m-1: sum F(n,k-1) - sum F(n,k) = G(m,k).
    """
    _require_odd(m, 3)
    pair = WZ_PAIRS["J4"]
    lhs = sum((pair.f(n, k - 1) - pair.f(n, k) for n in range(m)), Fraction(0))
    return IdentityReport("sum-over-n-J4", f"m={m}, k={k}", lhs, pair.g(m, k))


def check_expansion_J1(m: int) -> IdentityReport:
    """
    The J1 sum at k = (m-1)/2 split by powers of m:

        sum_{n=0}^{N} F(n,N) = m + (m^3/4) S_0 + (3 m^2/4) S_1,
        S_j = sum_{n=1}^{N} n^j (1/2)_n (1+m/2)_{n-1}^2 / (1)_n^3 4^n.
    """
    _require_odd(m, 3)
    pair = WZ_PAIRS["J1"]
    top = (m - 1) // 2
    one = Fraction(1)
    lhs = sum((pair.f(n, top) for n in range(top + 1)), Fraction(0))
    s0 = s1 = Fraction(0)
    for n in range(1, top + 1):
        t = poch(one, HALF, n) * poch(one, 1 + Fraction(m, 2), n - 1) ** 2
        t = t / poch(one, 1, n) ** 3 * 4**n
        s0 += t
        s1 += n * t
    rhs = m + Fraction(m**3, 4) * s0 + Fraction(3 * m * m, 4) * s1
    return IdentityReport("expansion-J1", m, lhs, rhs)


def sample_x(count: int = 10, seed: Optional[int] = None) -> List[Fraction]:
    """
    Distinct random rationals num/den, |num| <= 20, 1 <= den <= 20, x not 0 or 1.
    """
    rng = np.random.default_rng(seed)
    values: List[Fraction] = []
    while len(values) < count:
        x = Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, 21)))
        if x not in (0, 1) and x not in values:
            values.append(x)
    return values


def telescoped_reports(m_max: int = 15) -> List[IdentityReport]:
    """
    Every telescoped identity on the standard parameter ranges: M5 and 22 for
    m in {5, 7, 9}, the sums over n for odd m <= m_max and every admissible k,
    and the J1 expansion for odd m <= m_max.
    """
    reports = []
    for m in (5, 7, 9):
        reports.append(check_telescoped_M5(m, Fraction(1, 3)))
        reports.append(check_telescoped_M5(m, Fraction(-2)))
        reports.append(check_telescoped_22(m))
    for m in range(3, m_max + 1, 2):
        for k in range(1, (m - 1) // 2 + 1):
            reports.append(check_sum_over_n_J1(m, k))
            reports.append(check_sum_over_n_J4(m, k))
        reports.append(check_expansion_J1(m))
    return reports
