"""Power series arithmetic, kernels, fractional calculus, serialization."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import gammaln

from cesarolab.errors import DomainError
from cesarolab.series import (PowerSeries, cauchy_product, derivative_D, dilate,
                              evaluate, frac_derivative, frac_integral,
                              gamma_ratio, hadamard, make_kernel_G,
                              make_kernel_K, monomial, shift_S, unit_series)

coeff_arrays = st.lists(
    st.floats(-10, 10, allow_nan=False, allow_infinity=False),
    min_size=1, max_size=24).map(np.asarray)


def test_construction_rejects_bad_input():
    with pytest.raises(DomainError):
        PowerSeries([])
    with pytest.raises(DomainError):
        PowerSeries([1.0, math.nan])
    with pytest.raises(DomainError):
        PowerSeries([[1.0, 2.0]])


def test_coefficients_are_frozen():
    f = PowerSeries([1.0, 2.0])
    with pytest.raises(ValueError):
        f.coeffs[0] = 5.0


def test_degree_and_basic_builders():
    assert PowerSeries([1.0, 0.0, 3.0]).degree == 2
    assert unit_series(4).coeffs.tolist() == [1.0, 0.0, 0.0, 0.0, 0.0]
    assert monomial(2, 3).coeffs.tolist() == [0.0, 0.0, 1.0, 0.0]


@given(coeff_arrays, st.floats(-0.95, 0.95))
@settings(max_examples=60, deadline=None)
def test_evaluate_matches_horner(coeffs, z):
    f = PowerSeries(coeffs)
    # oracle: Horner evaluation, written independently of the library path
    acc = 0.0
    for c in coeffs[::-1]:
        acc = acc * z + c
    assert evaluate(f, z) == pytest.approx(acc, rel=1e-12, abs=1e-12)


@given(coeff_arrays, coeff_arrays)
@settings(max_examples=60, deadline=None)
def test_cauchy_product_matches_convolution_sum(f_c, g_c):
    f, g = PowerSeries(f_c), PowerSeries(g_c)
    fg = cauchy_product(f, g)
    # product lives at the shorter operand's truncation
    n = min(f.degree, g.degree)
    assert fg.degree == n
    # oracle: direct double loop over the convolution sum
    for m in range(n + 1):
        want = sum(f_c[k] * g_c[m - k]
                   for k in range(m + 1) if k <= f.degree and m - k <= g.degree)
        assert fg.coeffs[m] == pytest.approx(want, rel=1e-12, abs=1e-12)


@given(coeff_arrays, coeff_arrays)
@settings(max_examples=40, deadline=None)
def test_hadamard_is_coefficientwise(f_c, g_c):
    f, g = PowerSeries(f_c), PowerSeries(g_c)
    n = min(f.degree, g.degree) + 1
    got = hadamard(f, g).coeffs
    assert np.allclose(got, f.coeffs[:n] * g.coeffs[:n], rtol=0, atol=0)


def test_dilate_scales_coefficients_geometrically():
    f = PowerSeries([1.0, -0.5, 0.25])
    assert dilate(f, 0.5).coeffs.tolist() == [1.0, -0.25, 0.0625]


def test_shift_and_derivative_coefficient_rules():
    f = PowerSeries([1.0, -0.5, 0.25])
    # S multiplies by z at fixed truncation, D is the (n+1) a_n multiplier
    assert shift_S(f).coeffs.tolist() == [0.0, 1.0, -0.5]
    assert derivative_D(f).coeffs.tolist() == [1.0, -1.0, 0.75]


def test_gamma_ratio_closed_form():
    # oracle: Gamma(n+1+a) / (n! Gamma(1+a)) via log-gamma
    n = np.arange(0, 512)
    for a in (-0.5, 0.3, 1.0, 2.5, 7.0):
        want = np.exp(gammaln(n + 1 + a) - gammaln(n + 1) - gammaln(1 + a))
        got = gamma_ratio(a, n)
        assert np.allclose(got, want, rtol=1e-13)


@given(st.floats(-0.9, 6.0), st.integers(0, 2000))
@settings(max_examples=80, deadline=None)
def test_gamma_ratio_recurrence(a, n):
    # A_{n+1} / A_n = (n+1+a) / (n+1)
    vals = gamma_ratio(a, np.array([n, n + 1]))
    # log-gamma evaluation carries a few ulp of cancellation noise
    assert vals[1] == pytest.approx(vals[0] * (n + 1 + a) / (n + 1), rel=1e-11)


def test_kernel_K_binomial_series():
    # K_alpha = (1-z)^{-(alpha+1)}; alpha = 0 gives the geometric series
    assert make_kernel_K(0.0, 5).coeffs.tolist() == [1.0] * 6
    # alpha = 1: coefficients n+1 (up to log-gamma rounding)
    assert np.allclose(make_kernel_K(1.0, 4).coeffs, [1.0, 2.0, 3.0, 4.0, 5.0],
                       rtol=1e-13)
    # numeric check at a point, against the closed form
    f = make_kernel_K(0.5, 2048)
    z = 0.3
    assert evaluate(f, z) == pytest.approx((1 - z) ** -1.5, rel=1e-12)


def test_kernel_G_inverts_kernel_K_coefficientwise():
    K = make_kernel_K(0.7, 64)
    G = make_kernel_G(0.7, 64)
    assert np.allclose(hadamard(K, G).coeffs, 1.0, rtol=1e-13)


@given(st.floats(0.05, 3.0), coeff_arrays)
@settings(max_examples=60, deadline=None)
def test_fractional_derivative_integral_inverse(alpha, coeffs):
    f = PowerSeries(coeffs)
    back = frac_integral(frac_derivative(f, alpha), alpha)
    assert np.allclose(back.coeffs, f.coeffs, rtol=1e-11, atol=1e-13)


def test_frac_derivative_is_kernel_multiplier():
    f = PowerSeries([2.0, 0.0, -1.0, 0.5])
    alpha = 1.3
    want = f.coeffs * gamma_ratio(alpha, np.arange(4))
    assert np.allclose(frac_derivative(f, alpha).coeffs, want, rtol=1e-14)


def test_d1_equals_coefficient_derivative():
    f = PowerSeries([1.0, 2.0, 3.0])
    assert np.allclose(frac_derivative(f, 1.0).coeffs, derivative_D(f).coeffs)


def test_csv_round_trip_and_header():
    f = PowerSeries([1.0, -0.5, 1e-17, 3.1415926535897931])
    text = f.to_csv()
    assert text.splitlines()[0] == "n,coeff"
    g = PowerSeries.from_csv(text)
    assert np.array_equal(g.coeffs, f.coeffs)


def test_csv_rejects_wrong_header():
    with pytest.raises(DomainError):
        PowerSeries.from_csv("n,value\n0,1\n")


@given(coeff_arrays)
@settings(max_examples=40, deadline=None)
def test_json_round_trip(coeffs):
    f = PowerSeries(coeffs)
    g = PowerSeries.from_json_array(f.to_json_array())
    assert np.array_equal(g.coeffs, f.coeffs)


def test_serialization_keeps_17_significant_digits():
    x = 0.1234567890123456789
    f = PowerSeries([x])
    assert PowerSeries.from_csv(f.to_csv()).coeffs[0] == x
    assert PowerSeries.from_json_array(f.to_json_array()).coeffs[0] == x
