from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercong import (
    SERIES,
    DualityPoint,
    duality_map,
    eval_series,
    get_series,
    quadratic_transform_check,
)
from supercong.src.series import (
    NoConvergence,
    Quad,
    SeriesSpec,
    SeriesTarget,
    SingularDuality,
    dual_weight_exact,
    epsilon_estimates,
    printed_weight,
    series_partial_sums,
)


@pytest.fixture
def sqrt5_point():
    return DualityPoint(
        tau=mpmath.sqrt(5),
        k=1,
        z=mpmath.mpf(1) / 4,
        a=mpmath.mpf(1) / 8,
        b=1,
        c=mpmath.mpf(5) / 2,
    )


def test_quad_arithmetic():
    w = Quad(Fraction(1), Fraction(1))
    assert w * w == Quad(Fraction(-6), Fraction(2))
    assert (w + 1).u == 2
    assert w.norm() == 8
    assert Quad(Fraction(47, 128), Fraction(45, 128)).norm() == 1
    assert -w + w == Quad(Fraction(0))


def test_eight_over_pi_squared():
    result = eval_series(get_series("eight-over-pi2"), digits=30)
    assert result.method == "direct"
    assert result.difference < mpmath.mpf(10) ** -25
    assert result.error < mpmath.mpf(10) ** -25


def test_more_digits_stay_within_error():
    spec = get_series("eight-over-pi2")
    low = eval_series(spec, digits=20)
    high = eval_series(spec, digits=40)
    assert abs(low.value - high.value) <= low.error


def test_sqrt7_over_pi_on_the_unit_circle():
    result = eval_series(get_series("sqrt7-over-pi"), digits=30, n_terms=300)
    assert result.method == "wynn-epsilon"
    assert result.difference < 1e-6
    assert result.error < 1e-6


def test_wynn_error_estimate_covers_more_terms():
    spec = get_series("sqrt7-over-pi")
    coarse = eval_series(spec, digits=30, n_terms=150, tolerance=1.0)
    fine = eval_series(spec, digits=30, n_terms=300)
    assert abs(coarse.value - fine.value) <= coarse.error


def test_wynn_error_estimate_covers_more_digits():
    spec = get_series("sqrt7-over-pi")
    low = eval_series(spec, digits=30, n_terms=300)
    high = eval_series(spec, digits=60, n_terms=300)
    assert abs(low.value - high.value) <= low.error


def test_raw_partial_sums_converge_slowly():
    spec = get_series("sqrt7-over-pi")
    with mpmath.workdps(80):
        partials = series_partial_sums(spec, 120)
        target = SeriesTarget.SQRT7_OVER_PI.limit()
        estimates = epsilon_estimates(partials)
        assert abs(estimates[-1] - target) < abs(partials[-1] - target)
    assert len(partials) == 120


def test_divergent_series_refused():
    spec = SeriesSpec(
        id="outside",
        num_params=(Fraction(1, 2),),
        den_params=(Fraction(1),),
        weight=(Quad(Fraction(1)), Quad(Fraction(0)), Quad(Fraction(0))),
        z=Quad(Fraction(4)),
        target=SeriesTarget.EIGHT_OVER_PI2,
    )
    with pytest.raises(ValueError):
        eval_series(spec)


def test_too_few_terms():
    with pytest.raises(NoConvergence):
        eval_series(get_series("sqrt7-over-pi"), n_terms=10, tolerance=1e-30)


def test_series_ids():
    assert set(SERIES) == {"eight-over-pi2", "sqrt7-over-pi"}
    with pytest.raises(KeyError):
        get_series("nope")


@pytest.mark.parametrize("z", [-0.1, -0.3, -0.5, -0.7, -0.9])
def test_quadratic_transformation(z):
    report = quadratic_transform_check(z)
    assert report
    assert report.difference < 1e-12


def test_quadratic_transformation_domain():
    with pytest.raises(ValueError):
        quadratic_transform_check(0.5)


def test_duality_of_the_sqrt5_point(sqrt5_point):
    image = duality_map(sqrt5_point)
    expected = DualityPoint(
        tau=mpmath.sqrt(5) / 2, k=0, z=4, a=mpmath.mpf(1) / 4, b=1.5, c=2.5
    )
    assert image.close_to(expected)
    assert duality_map(image).close_to(sqrt5_point)


def test_normalisation_is_enforced():
    with pytest.raises(ValueError):
        DualityPoint(tau=2, k=1, z=mpmath.mpf(1) / 4, a=0, b=0, c=mpmath.mpf(5) / 2)


def test_singular_duality():
    # 4 tau^2 = (k + 1)^2
    point = DualityPoint(tau=1, k=1, z=3, a=0, b=0, c=2)
    with pytest.raises(SingularDuality):
        duality_map(point)


@settings(deadline=None, max_examples=50)
@given(
    st.floats(min_value=0.1, max_value=3.0),
    st.floats(min_value=0.05, max_value=3.0),
    st.floats(min_value=0.05, max_value=20.0),
    st.floats(min_value=-5.0, max_value=5.0),
    st.floats(min_value=-5.0, max_value=5.0),
)
def test_duality_is_an_involution(s, margin, z, a, b):
    # k + 1 = s > 0 and tau > s/2 keep both points regular
    tau = s / 2 + margin
    c = tau * mpmath.sqrt(1 + z)
    point = DualityPoint(tau=tau, k=s - 1, z=z, a=a, b=b, c=c)
    assert duality_map(duality_map(point)).close_to(point, tolerance=1e-9)


def test_exact_dual_weight():
    dual = dual_weight_exact(
        Fraction(1, 8), 1, Fraction(5, 2), 1, Fraction(1, 4), Fraction(1, 2)
    )
    assert dual == (Fraction(1, 4), Fraction(3, 2), Fraction(5, 2), 0, 4)
    back = dual_weight_exact(*dual, Fraction(2))
    assert back == (Fraction(1, 8), 1, Fraction(5, 2), 1, Fraction(1, 4))
    with pytest.raises(ValueError):
        dual_weight_exact(1, 1, 1, 1, Fraction(1, 4), Fraction(1, 3))


def test_printed_weights():
    assert printed_weight(Fraction(1, 8), 1, Fraction(5, 2), 8) == (1, 8, 20)
    dual_weight = printed_weight(Fraction(1, 4), Fraction(3, 2), Fraction(5, 2), 4)
    assert dual_weight == (1, 6, 10)
    assert get_series("eight-over-pi2").weight == (
        Quad(Fraction(1)),
        Quad(Fraction(8)),
        Quad(Fraction(20)),
    )
