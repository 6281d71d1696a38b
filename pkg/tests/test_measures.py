"""Measure zoo: moments, tails, fits, and the infinite-exponent sentinel."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad
from scipy.special import gammaln

from cesarolab.errors import DomainError
from cesarolab.measures import (INFINITE_EXPONENT, AtomicMeasure,
                                DensityMeasure, carleson_exponent,
                                is_s_carleson, parse_measure, poisson_integral,
                                zoo)

ZOO_SAMPLES = ("lebesgue", "beta_weight:0.5", "beta_weight:2", "power_carleson:1.3",
               "dirac:0.5", "dyadic_atomic:1", "log_perturbed:1,1")


def beta_moment_oracle(b: float, n: np.ndarray) -> np.ndarray:
    # n! Gamma(b+1) / Gamma(n+b+1) via log-gamma
    return np.exp(gammaln(n + 1.0) + gammaln(b + 1.0) - gammaln(n + b + 1.0))


def test_parse_measure_round_trips_labels():
    for spec in ZOO_SAMPLES:
        assert parse_measure(spec).label == spec


def test_zoo_rejects_unknown_and_bad_params():
    with pytest.raises(DomainError):
        zoo("cauchy")
    with pytest.raises(DomainError):
        zoo("lebesgue", 1.0)
    with pytest.raises(DomainError):
        zoo("dirac", 1.0)
    with pytest.raises(DomainError):
        zoo("power_carleson", -0.5)


def test_lebesgue_closed_forms():
    mu = zoo("lebesgue")
    n = np.arange(100)
    assert np.allclose(mu.moments(99).values, 1.0 / (n + 1.0), rtol=1e-15)
    assert mu.tail(0.25) == 0.75
    assert mu.total_mass() == 1.0


@pytest.mark.parametrize("b", [0.5, 1.0, 2.0, 3.7])
def test_beta_weight_moment_closed_form(b):
    mu = zoo("beta_weight", b)
    n = np.arange(0, 4097)
    got = mu.moments(4096).values
    assert np.allclose(got, beta_moment_oracle(b, n), rtol=1e-10)


def test_power_carleson_tail_is_exact_power_law():
    mu = zoo("power_carleson", 0.7)
    for r in (0.0, 0.3, 0.9, 1.0 - 2.0**-20):
        assert mu.tail(r) == pytest.approx((1.0 - r) ** 0.7, rel=1e-13)


def test_density_quadrature_moments_match_closed_form():
    # same density without the closed-form rule: quadrature must agree 1e-10
    b = 1.4
    mu = DensityMeasure("plain", smooth_factor=lambda x: b * np.ones_like(x),
                        endpoint_exponent=b - 1.0)
    n = np.arange(0, 4097, 64)
    assert np.allclose(mu.moments_at(n), beta_moment_oracle(b, n), rtol=1e-10)


def test_dirac_moments_are_geometric():
    mu = zoo("dirac", 0.5)
    assert np.allclose(mu.moments(20).values, 0.5 ** np.arange(21), rtol=1e-15)
    assert mu.tail(0.4) == 1.0
    assert mu.tail(0.6) == 0.0


def test_dyadic_tail_against_direct_summation():
    # oracle: independent sum over the atom ladder
    s = 1.0
    mu = zoo("dyadic_atomic", s)
    ks = np.arange(53, dtype=float)
    weights = 2.0 ** (-ks * s)
    for m in (0, 1, 5, 12):
        r = 1.0 - 2.0**-m
        want = float(np.sum(weights[ks >= m]))
        assert mu.tail(r) == pytest.approx(want, rel=1e-15)


def test_log_perturbed_against_scipy_quad():
    s, a = 1.0, 1.0
    mu = zoo("log_perturbed", s, a)
    want_mass, _ = quad(lambda x: s * x ** (s - 1.0) * (1.0 - math.log(x)) ** a,
                        0.0, 1.0, points=[0.0])
    assert mu.total_mass() == pytest.approx(want_mass, rel=1e-9)
    want_m5, _ = quad(
        lambda x: s * x ** (s - 1.0) * (1.0 - math.log(x)) ** a * (1.0 - x) ** 5,
        0.0, 1.0, points=[0.0])
    assert mu.moments_at(np.array([5]))[0] == pytest.approx(want_m5, rel=1e-9)


@pytest.mark.parametrize("spec", ZOO_SAMPLES)
def test_moment_sequence_invariants(spec):
    mu = parse_measure(spec)
    seq = mu.moments(512).values
    assert np.all(seq >= 0.0)
    assert np.all(np.diff(seq) <= 1e-15 * seq[:-1] + 1e-300)  # nonincreasing
    assert seq[0] == pytest.approx(mu.total_mass(), rel=1e-9)


@pytest.mark.parametrize("spec", ZOO_SAMPLES)
def test_tail_invariants(spec):
    mu = parse_measure(spec)
    radii = np.linspace(0.0, 0.999, 25)
    tails = [mu.tail(r) for r in radii]
    assert tails[0] == pytest.approx(mu.total_mass(), rel=1e-9)
    assert all(a >= b - 1e-12 for a, b in zip(tails, tails[1:]))


def test_atomic_integrate_is_a_weighted_sum():
    mu = AtomicMeasure("pair", [0.25, 0.5], [1.0, 2.0])
    assert mu.integrate(lambda t: t**2) == pytest.approx(
        1.0 * 0.25**2 + 2.0 * 0.5**2, rel=1e-15)


def test_density_integrate_against_scipy():
    mu = zoo("beta_weight", 1.5)
    got = mu.integrate(lambda t: np.cos(t))
    want, _ = quad(lambda t: 1.5 * (1.0 - t) ** 0.5 * math.cos(t), 0.0, 1.0)
    assert got == pytest.approx(want, rel=1e-9)


def test_poisson_integral_against_scipy():
    mu = zoo("power_carleson", 1.2)
    r, sigma = 0.9, 2.5
    got = poisson_integral(mu, r, sigma)
    want, _ = quad(lambda t: 1.2 * (1.0 - t) ** 0.2 / (1.0 - t * r) ** sigma,
                   0.0, 1.0, points=[1.0], limit=200)
    assert got == pytest.approx(want, rel=1e-8)


# --- exponent fits ---------------------------------------------------------


def test_tail_fit_power_law_is_sharp():
    fit = carleson_exponent(zoo("power_carleson", 0.7), method="tail")
    assert fit.slope == pytest.approx(0.7, abs=1e-6)
    assert not fit.infinite


def test_moment_fit_lebesgue():
    fit = carleson_exponent(zoo("lebesgue"), method="moments")
    assert fit.slope == pytest.approx(1.0, abs=0.02)


def test_tail_fit_dyadic_atomic():
    fit = carleson_exponent(zoo("dyadic_atomic", 1.5), method="tail")
    assert fit.slope == pytest.approx(1.5, abs=0.05)


@pytest.mark.parametrize("s", [0.3, 0.8, 1.7, 3.0])
def test_tail_and_moment_fits_agree(s):
    mu = zoo("power_carleson", s)
    t = carleson_exponent(mu, method="tail").slope
    m = carleson_exponent(mu, method="moments").slope
    assert abs(t - m) <= 0.05


@pytest.mark.parametrize("s", [0.3, 0.8, 1.7, 3.0])
def test_poisson_fit_with_probe_s_plus_one(s):
    fit = carleson_exponent(zoo("power_carleson", s), method="poisson",
                            probe_exponent=s + 1.0)
    assert fit.slope == pytest.approx(s, abs=0.05)


def test_infinite_exponent_sentinel_for_compact_support():
    mu = zoo("dirac", 0.5)
    for method in ("tail", "poisson"):
        fit = carleson_exponent(mu, method=method)
        assert fit.infinite
        assert math.isnan(fit.slope)
    # the sentinel is a singleton flag, never an inf float fed to arithmetic
    assert mu.known_carleson_exponent is INFINITE_EXPONENT
    assert not isinstance(INFINITE_EXPONENT, float)


def test_fit_grid_needs_six_points():
    with pytest.raises(DomainError):
        carleson_exponent(zoo("lebesgue"), grid=[4, 5, 6, 7, 8])


def test_is_s_carleson_examples():
    chk = is_s_carleson(zoo("power_carleson", 1.0), 1.0)
    assert chk.bounded and chk.constant == pytest.approx(1.0, rel=1e-6)
    chk = is_s_carleson(zoo("power_carleson", 0.5), 1.0)
    assert not chk.bounded
    assert chk.ratios[-1] > chk.ratios[0]    # diverging ratio sequence
    chk = is_s_carleson(zoo("dirac", 0.9), 3.0)
    assert chk.bounded and math.isfinite(chk.constant)


@given(st.floats(0.3, 3.0))
@settings(max_examples=20, deadline=None)
def test_is_s_carleson_accepts_own_exponent(s):
    chk = is_s_carleson(zoo("power_carleson", s), s)
    assert chk.bounded and chk.constant == pytest.approx(1.0, rel=1e-6)


def test_moments_cache_is_reused_and_immutable():
    mu = zoo("power_carleson", 1.1)
    a = mu.moments(256)
    b = mu.moments(128)
    assert b.truncation == 128
    assert np.array_equal(b.values, a.values[:129])
    with pytest.raises(ValueError):
        a.values[0] = 2.0


def test_tail_order_sharp_attribute():
    assert zoo("power_carleson", 1.0).tail_order_sharp
    assert zoo("log_perturbed", 1.0, 1.0).tail_order_sharp is False
    assert zoo("log_perturbed", 1.0, 0.0).tail_order_sharp
