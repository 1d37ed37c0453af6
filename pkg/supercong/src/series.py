"""
High-precision numerics for the convergent Ramanujan-type series, the quadratic
transformation of 3F2(1/2,1/2,1/2;1,1;z) and the tau-duality between series at
z and 1/z.

Series terms are generated exactly (rationals, or elements u + v sqrt(-7) of
Q(sqrt(-7))) and only converted to mpmath numbers when they are accumulated.
"""
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import mpmath

DEFAULT_DIGITS = 30
DEFAULT_WYNN_TERMS = 300
WYNN_TOLERANCE = 1e-6
MAX_DIRECT_TERMS = 100_000
DUALITY_TOLERANCE = 1e-12


class NoConvergence(RuntimeError):
    pass


class SingularDuality(ValueError):
    pass


@dataclass(frozen=True)
class Quad:
    """u + v*sqrt(-7) with rational u, v."""

    u: Fraction
    v: Fraction = Fraction(0)

    @classmethod
    def of(cls, x: Union["Quad", int, Fraction]) -> "Quad":
        return x if isinstance(x, Quad) else cls(Fraction(x))

    def __add__(self, other):
        other = Quad.of(other)
        return Quad(self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __mul__(self, other):
        other = Quad.of(other)
        return Quad(
            self.u * other.u - 7 * self.v * other.v,
            self.u * other.v + self.v * other.u,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Quad(-self.u, -self.v)

    def norm(self) -> Fraction:
        return self.u * self.u + 7 * self.v * self.v

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def to_mp(self):
        """mpf when real, mpc otherwise, at the current working precision."""
        u = mpmath.mpf(self.u.numerator) / self.u.denominator
        if self.v == 0:
            return u
        v = mpmath.mpf(self.v.numerator) / self.v.denominator
        return mpmath.mpc(u, v * mpmath.sqrt(7))


class SeriesTarget(Enum):
    EIGHT_OVER_PI2 = "8/pi^2"
    SQRT7_OVER_PI = "sqrt(7)/pi"

    def limit(self):
        if self == SeriesTarget.EIGHT_OVER_PI2:
            return 8 / mpmath.pi**2
        return mpmath.sqrt(7) / mpmath.pi


@dataclass(frozen=True)
class SeriesSpec:
    """
    sum_n prod (a_i)_n / prod (b_j)_n * (a + b n + c n^2) * (+-z)^n
    """

    id: str
    num_params: Tuple[Fraction, ...]
    den_params: Tuple[Fraction, ...]
    weight: Tuple[Quad, Quad, Quad]  # (a, b, c)
    z: Quad
    target: SeriesTarget
    alternating: bool = False

    @property
    def argument(self) -> Quad:
        return -self.z if self.alternating else self.z

    def weight_at(self, n: int) -> Quad:
        a, b, c = self.weight
        return a + b * n + c * (n * n)

    def abs_z_squared(self) -> Fraction:
        return self.z.norm()


@dataclass(frozen=True)
class SeriesResult:
    series_id: str
    value: object
    target: object
    difference: object
    error: object
    terms: int
    method: str

    def __str__(self):
        return (
            f"{self.series_id}: {mpmath.nstr(self.value, 20)} "
            f"(target {mpmath.nstr(self.target, 20)}, "
            f"|difference| {mpmath.nstr(self.difference, 3)}, "
            f"error estimate {mpmath.nstr(self.error, 3)}, "
            f"{self.terms} terms, {self.method})"
        )


def _q(u, v=0) -> Quad:
    return Quad(Fraction(u), Fraction(v))


HALF = Fraction(1, 2)

SERIES: Dict[str, SeriesSpec] = {
    "eight-over-pi2": SeriesSpec(
        id="eight-over-pi2",
        num_params=(HALF,) * 5,
        den_params=(Fraction(1),) * 5,
        weight=(_q(1), _q(8), _q(20)),
        z=_q(Fraction(1, 4)),
        target=SeriesTarget.EIGHT_OVER_PI2,
        alternating=True,
    ),
    "sqrt7-over-pi": SeriesSpec(
        id="sqrt7-over-pi",
        num_params=(HALF,) * 3,
        den_params=(Fraction(1),) * 3,
        weight=(
            _q(Fraction(49, 64), Fraction(-13, 64)),
            _q(Fraction(105, 32), Fraction(-21, 32)),
            _q(0),
        ),
        z=_q(Fraction(47, 128), Fraction(45, 128)),
        target=SeriesTarget.SQRT7_OVER_PI,
    ),
}


def get_series(series_id: str) -> SeriesSpec:
    if series_id not in SERIES:
        raise KeyError(f"Unknown series {series_id}, choose from {sorted(SERIES)}")
    return SERIES[series_id]


def iter_exact_terms(spec: SeriesSpec):
    """
    Yield (n, weighted term) exactly, as Quad values, without end.
    """
    z = spec.argument
    term = _q(1)
    n = 0
    while True:
        yield n, term * spec.weight_at(n)
        ratio = math.prod((a + n for a in spec.num_params), start=Fraction(1))
        ratio /= math.prod((b + n for b in spec.den_params), start=Fraction(1))
        term = term * ratio * z
        n += 1


def series_partial_sums(spec: SeriesSpec, n_terms: int, dps: Optional[int] = None):
    """
    S_0, ..., S_(n_terms-1) as mpmath numbers at `dps` digits (or the current
    precision).
    """
    if n_terms < 1:
        raise ValueError("need at least one term")
    with mpmath.workdps(dps or mpmath.mp.dps):
        partials = []
        total = mpmath.mpf(0)
        for n, term in iter_exact_terms(spec):
            if n == n_terms:
                break
            total = total + term.to_mp()
            partials.append(total)
    return partials


def epsilon_table(partials: List) -> List[List]:
    """
    Wynn epsilon table of the partial sums (mpmath.shanks). Each row holds the
    reciprocal differences at even positions and limit estimates at odd ones.
    """
    if len(partials) < 3:
        raise NoConvergence("Wynn epsilon needs at least three partial sums")
    return mpmath.shanks(partials)


def epsilon_estimates(partials: List) -> List:
    """Highest-order estimate of every row of the epsilon table."""
    return [row[1::2][-1] for row in epsilon_table(partials) if len(row) > 1]


def _eval_direct(spec: SeriesSpec, digits: int) -> SeriesResult:
    with mpmath.workdps(digits + 10):
        bound = mpmath.mpf(10) ** (-(digits + 2))
        abs_z_squared = spec.abs_z_squared()
        abs_z = mpmath.sqrt(
            mpmath.mpf(abs_z_squared.numerator) / abs_z_squared.denominator
        )
        total = mpmath.mpf(0)
        last = mpmath.mpf(0)
        for n, term in iter_exact_terms(spec):
            if n > MAX_DIRECT_TERMS:
                raise NoConvergence(
                    f"{spec.id}: terms still above 1e-{digits + 2} after {n} terms"
                )
            last = term.to_mp()
            total = total + last
            if n > 0 and abs(last) < bound:
                break
        error = 2 * abs(last) / (1 - abs_z) + mpmath.mpf(10) ** (-mpmath.mp.dps)
        target = spec.target.limit()
        return SeriesResult(
            spec.id, +total, target, abs(total - target), error, n + 1, "direct"
        )


def _eval_wynn(
    spec: SeriesSpec, digits: int, n_terms: int, tolerance: float
) -> SeriesResult:
    dps = digits + 30 + n_terms // 8
    with mpmath.workdps(dps):
        partials = series_partial_sums(spec, n_terms)
        table = epsilon_table(partials)
        rows = [row[1::2] for row in table if len(row) > 3]
        if len(rows) < 2:
            raise NoConvergence(
                f"{spec.id}: epsilon table stopped after {len(table)} rows"
            )
        last, previous = rows[-1], rows[-2]
        value = last[-1]
        error = max(abs(last[-1] - last[-2]), abs(last[-1] - previous[-1]))
        target = spec.target.limit()
        result = SeriesResult(
            spec.id, value, target, abs(value - target), error, n_terms, "wynn-epsilon"
        )
    if error > tolerance:
        raise NoConvergence(
            f"{spec.id}: epsilon estimates differ by {mpmath.nstr(error, 3)} "
            f"> {tolerance} after {n_terms} terms"
        )
    return result


def eval_series(
    spec: SeriesSpec,
    digits: int = DEFAULT_DIGITS,
    n_terms: Optional[int] = None,
    tolerance: float = WYNN_TOLERANCE,
) -> SeriesResult:
    """
    |z| < 1: sum directly until a term drops below 10^-(digits+2).
    |z| = 1, z != 1: Wynn epsilon on n_terms partial sums (default 300).
    Anything else is a divergent series and is refused.
    """
    abs_z_squared = spec.abs_z_squared()
    if abs_z_squared < 1:
        return _eval_direct(spec, digits)
    if abs_z_squared == 1 and spec.argument != _q(1):
        return _eval_wynn(spec, digits, n_terms or DEFAULT_WYNN_TERMS, tolerance)
    raise ValueError(f"{spec.id}: |z| = {math.sqrt(abs_z_squared)} is outside the disc")


@dataclass(frozen=True)
class QuadraticTransformReport:
    z: float
    lhs: object
    rhs: object
    tolerance: float

    @property
    def difference(self):
        return abs(self.lhs - self.rhs)

    @property
    def holds(self) -> bool:
        return self.difference < self.tolerance

    def __bool__(self):
        return self.holds


def quadratic_transform_check(
    z: float, tolerance: float = 1e-12, dps: int = 30
) -> QuadraticTransformReport:
    """
    3F2(1/2,1/2,1/2;1,1;z) against (1-z)^(-1/2) 3F2(1/4,1/2,3/4;1,1;-4z/(1-z)^2).
    """
    if not -1 < z < 0:
        raise ValueError(f"z must lie in (-1, 0), got {z}")
    with mpmath.workdps(dps):
        x = mpmath.mpf(z)
        lhs = mpmath.hyp3f2(0.5, 0.5, 0.5, 1, 1, x, maxterms=10**6)
        w = -4 * x / (1 - x) ** 2
        quarter, three_quarters = mpmath.mpf(1) / 4, mpmath.mpf(3) / 4
        rhs = mpmath.hyp3f2(quarter, 0.5, three_quarters, 1, 1, w, maxterms=10**6)
        rhs = rhs / mpmath.sqrt(1 - x)
    return QuadraticTransformReport(z, lhs, rhs, tolerance)


@dataclass(frozen=True)
class DualityPoint:
    """
    Parameters of a 1/pi^2 series normalised so that tau^2 = c^2 / (1 + z).
    """

    tau: object
    k: object
    z: object
    a: object
    b: object
    c: object

    def __post_init__(self):
        for name in ("tau", "k", "z", "a", "b", "c"):
            object.__setattr__(self, name, mpmath.mpf(getattr(self, name)))
        if self.tau <= 0:
            raise ValueError(f"tau must be positive, got {self.tau}")
        if self.z <= -1:
            raise ValueError(f"z must exceed -1, got {self.z}")
        if self.normalization_gap() > DUALITY_TOLERANCE * max(1, self.tau**2):
            raise ValueError(
                f"tau^2 = {self.tau ** 2} but c^2/(1+z) = {self.c ** 2 / (1 + self.z)}"
            )

    def normalization_gap(self):
        return abs(self.tau**2 - self.c**2 / (1 + self.z))

    def close_to(self, other: "DualityPoint", tolerance: float = DUALITY_TOLERANCE):
        return all(
            abs(getattr(self, name) - getattr(other, name))
            <= tolerance * max(1, abs(getattr(other, name)))
            for name in ("tau", "k", "z", "a", "b", "c")
        )


def duality_map(src: DualityPoint) -> DualityPoint:
    """
    The point paired with `src` by z1 z2 = 1:
    (k1+1) tau2 = (k2+1) tau1 and (k1+1)(k2+1) + 8 = 4 tau1 tau2.
    """
    s = src.k + 1
    gap = 4 * src.tau**2 - s**2
    if abs(gap) <= DUALITY_TOLERANCE * max(1, s**2):
        raise SingularDuality(f"4 tau^2 = (k+1)^2 at tau={src.tau}, k={src.k}")
    if src.z <= 0:
        raise SingularDuality(f"z must be positive to pair with 1/z, got {src.z}")
    s2 = 8 * s / gap
    tau2 = s2 * src.tau / s
    if tau2 <= 0:
        raise SingularDuality(f"paired tau {tau2} is not positive")
    r = tau2 / src.tau
    root = mpmath.sqrt(src.z)
    image = DualityPoint(
        tau=tau2,
        k=s2 - 1,
        z=1 / src.z,
        a=r * (src.c - 2 * src.b + 4 * src.a) / (4 * root),
        b=r * (src.c - src.b) / root,
        c=r * src.c / root,
    )
    scale = max(1, abs(s * s2))
    if abs(s * tau2 - s2 * src.tau) > DUALITY_TOLERANCE * scale or abs(
        s * s2 + 8 - 4 * src.tau * tau2
    ) > DUALITY_TOLERANCE * max(scale, 8):
        raise ArithmeticError("paired point violates the tau-k relations")
    return image


def dual_weight_exact(
    a: Fraction, b: Fraction, c: Fraction, k: Fraction, z: Fraction, sqrt_z: Fraction
) -> Tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
    """
    The duality map in exact rationals when sqrt(z) is rational, using
    tau^2 = c^2/(1+z). Returns (a2, b2, c2, k2, z2).
    """
    a, b, c, k, z, sqrt_z = (Fraction(v) for v in (a, b, c, k, z, sqrt_z))
    if sqrt_z <= 0 or sqrt_z * sqrt_z != z:
        raise ValueError(f"{sqrt_z} is not the positive square root of {z}")
    tau_squared = c * c / (1 + z)
    s = k + 1
    gap = 4 * tau_squared - s * s
    if gap == 0:
        raise SingularDuality(f"4 tau^2 = (k+1)^2 for k={k}")
    s2 = 8 * s / gap
    r = s2 / s
    return (
        r * (c - 2 * b + 4 * a) / (4 * sqrt_z),
        r * (c - b) / sqrt_z,
        r * c / sqrt_z,
        s2 - 1,
        1 / z,
    )


def printed_weight(
    a: Fraction, b: Fraction, c: Fraction, scale: Fraction
) -> Tuple[Fraction, Fraction, Fraction]:
    """scale * (a, b, c): the weight as it appears in the printed series."""
    scale = Fraction(scale)
    return scale * Fraction(a), scale * Fraction(b), scale * Fraction(c)
