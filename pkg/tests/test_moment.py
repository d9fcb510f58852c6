import math

import numpy as np
import pytest

from szeta.moment import (
    ASYMPTOTIC_BELOW,
    MomentValue,
    QuadratureSpec,
    s_of_t,
    second_moment,
)
from szeta.quadrature import adaptive_gauss
from szeta.special import riemann_siegel_theta
from szeta.zeros import CoverageError

# Reference integrals of S(t)^2, computed with 40-digit interval-exact
# arithmetic over the same catalog (theta from mpmath, panels split at
# every zero, adaptive refinement near t = 0).
EMP_ORACLE_21_EXACT = 1.5302136827352161396
EMP_ORACLE_21_ASYM = 1.5299093000901654496
EMP_ORACLE_100_EXACT = 10.685413083685568356


def test_moment_matches_oracle_small_height(catalog):
    got = second_moment(catalog, 21.0)
    assert isinstance(got, MomentValue)
    assert got.T == 21.0
    assert got.value == pytest.approx(EMP_ORACLE_21_EXACT, abs=1e-9)


def test_moment_matches_oracle_asymptotic_model(catalog):
    spec = QuadratureSpec(smooth_model="paper_asymptotic")
    got = second_moment(catalog, 21.0, spec)
    assert got.value == pytest.approx(EMP_ORACLE_21_ASYM, abs=1e-9)


def test_moment_matches_oracle_medium_height(catalog):
    got = second_moment(catalog, 100.0)
    assert got.value == pytest.approx(EMP_ORACLE_100_EXACT, abs=1e-9)


def test_moment_just_past_the_first_zero(catalog):
    """An adaptive two-segment oracle pins the shortest admissible range.

    Below 20 both smooth models reduce to the same asymptotic count, so
    the result must not depend on the model either.
    """
    g1 = float(catalog.gammas[0])
    for model in ("exact_theta", "paper_asymptotic"):
        spec = QuadratureSpec(smooth_model=model)
        f = lambda t: s_of_t(catalog, t, spec) ** 2
        oracle = adaptive_gauss(f, 0.0, g1, abs_tol=1e-11)
        oracle += adaptive_gauss(f, g1, 14.2, abs_tol=1e-11)
        assert second_moment(catalog, 14.2, spec).value == pytest.approx(oracle, abs=1e-9)


def test_moment_is_nondecreasing_in_T(catalog):
    values = [second_moment(catalog, T).value for T in (50.0, 100.0, 200.0, 500.0, 1000.0)]
    assert all(v >= 0.0 for v in values)
    assert all(b >= a for a, b in zip(values, values[1:]))


def test_moment_order_doubling_is_converged(catalog):
    """S(t) is locally smooth between zeros, so order 8 already saturates."""
    for T in (100.0, 10_000.0):
        v8 = second_moment(catalog, T, QuadratureSpec(gauss_order=8)).value
        v16 = second_moment(catalog, T, QuadratureSpec(gauss_order=16)).value
        assert abs(v8 - v16) / v16 < 1e-9


def test_moment_parallel_is_bit_identical(catalog):
    # large enough that the worker pool actually chunks the panel list
    T = catalog.coverage - 1.0
    serial = second_moment(catalog, T, QuadratureSpec(parallel=False))
    threaded = second_moment(catalog, T, QuadratureSpec(parallel=True))
    assert serial.value == threaded.value
    assert serial.intervals == threaded.intervals


def test_moment_model_difference_is_confined_to_low_t(catalog):
    # the two smooth models disagree only below t = 20, so the absolute
    # gap is fixed while the integral keeps growing
    exact = second_moment(catalog, 10000.0).value
    asym = second_moment(catalog, 10000.0, QuadratureSpec(smooth_model="paper_asymptotic")).value
    assert exact != asym
    assert abs(exact - asym) / exact < 1e-6


def test_s_of_t_at_origin(catalog):
    assert s_of_t(catalog, 0.0) == -0.875


def test_s_of_t_jumps_by_one_at_a_zero(catalog):
    g1 = float(catalog.gammas[0])
    jump = s_of_t(catalog, g1 + 1e-6) - s_of_t(catalog, g1 - 1e-6)
    assert 0.9 < jump < 1.1


def test_s_of_t_closed_forms_between_zeros(catalog):
    # one zero lies below 20.5, so the exact model gives 1 - (theta/pi + 1)
    t = 20.5
    exact = s_of_t(catalog, t, QuadratureSpec(smooth_model="exact_theta"))
    assert exact == -riemann_siegel_theta(t) / math.pi
    asym_count = t / (2.0 * math.pi) * (math.log(t / (2.0 * math.pi)) - 1.0) + 0.875
    asym = s_of_t(catalog, t, QuadratureSpec(smooth_model="paper_asymptotic"))
    assert asym == 1.0 - asym_count


def test_s_of_t_below_model_switch_ignores_the_model(catalog):
    # no zeros below t = 12 and both models clamp to the asymptotic count
    t = 12.0
    expected = -(t / (2.0 * math.pi) * (math.log(t / (2.0 * math.pi)) - 1.0) + 0.875)
    for model in ("exact_theta", "paper_asymptotic"):
        assert s_of_t(catalog, t, QuadratureSpec(smooth_model=model)) == expected


def test_s_of_t_has_small_sampled_mean(catalog):
    ts = np.linspace(0.5, 9999.5, 4001)
    mean = math.fsum(s_of_t(catalog, float(t)) for t in ts) / len(ts)
    assert abs(mean) < 0.05


def test_s_of_t_domain(catalog):
    with pytest.raises(CoverageError):
        s_of_t(catalog, catalog.coverage + 1.0)
    with pytest.raises(CoverageError):
        s_of_t(catalog, -0.5)


def test_moment_domain(catalog):
    with pytest.raises(CoverageError):
        second_moment(catalog, catalog.coverage + 1.0)
    with pytest.raises(ValueError, match="first zero"):
        second_moment(catalog, 10.0)


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(gauss_order=2)
    with pytest.raises(ValueError):
        QuadratureSpec(gauss_order=128)
    with pytest.raises(ValueError):
        QuadratureSpec(smooth_model="nope")
    assert ASYMPTOTIC_BELOW == 20.0
