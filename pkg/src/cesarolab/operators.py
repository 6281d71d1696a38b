"""Cesaro-type averaging operators driven by a radial measure.

For a measure mu on [0,1) and beta > 0, the operator acts on f = sum a_k z^k by

    C_{mu,beta} f(z) = integral f(tz) / (1-tz)^beta dmu(t)
                     = sum_n mu_n ( sum_{k<=n} w_{n-k} a_k ) z^n,

with binomial weights w_m = Gamma(m+beta)/(m! Gamma(beta)), i.e. the
coefficients of K_{beta-1}.  The classical normalized average

    A^{beta-1} f(z) = beta integral_0^1 f(tz) (1-t)^(beta-1)/(1-tz)^beta dt

has coefficients (1/c_n) sum_{k<=n} w_{n-k} a_k with c_n the coefficients of
K_beta; it coincides with C_{mu,beta} for the normalized beta weight, and the
generating function F_mu = sum mu_n z^n ties the two together.
verify_identity checks the algebra relating all of these along independent
code paths.
"""
from __future__ import annotations

import dataclasses

import numpy as np

from .errors import DomainError
from .measures import RadialMeasure
from .series import (PowerSeries, cauchy_product, derivative_D, dilate,
                     evaluate, frac_derivative, frac_integral, gamma_ratio,
                     hadamard, make_kernel_K, shift_S)

# Degree above which apply_cesaro trades the exact O(N^2) inner sums for FFT
# convolution (probe-scale inputs where slope thresholds dominate rounding).
_DIRECT_LIMIT = 2048

IDENTITY_NAMES = ("factor0", "factor1", "commutator", "leibniz-mix", "ibeta",
                  "gamma-recurrence", "beta-shift")

IDENTITY_Z_GRID = (0.1, 0.3, 0.5, 0.7, 0.9)


@dataclasses.dataclass(frozen=True)
class CesaroParams:
    """The pair (mu, beta) defining one operator."""

    mu: RadialMeasure
    beta: float

    def __post_init__(self):
        if not self.beta > 0.0:
            raise DomainError(f"beta must be positive, got {self.beta}")


def f_mu(mu: RadialMeasure, truncation: int) -> PowerSeries:
    """The moment generating series F_mu = sum mu_n z^n."""
    return PowerSeries(mu.moments(truncation).values)


def d_alpha_f_mu(mu: RadialMeasure, alpha: float, truncation: int) -> PowerSeries:
    """Fractional derivative of F_mu: coefficients Gamma-ratio(n,alpha) * mu_n."""
    if alpha <= -1.0:
        raise DomainError(f"derivative order must exceed -1, got {alpha}")
    n = np.arange(truncation + 1)
    return PowerSeries(gamma_ratio(alpha, n) * mu.moments(truncation).values)


def apply_cesaro(params: CesaroParams, f: PowerSeries) -> PowerSeries:
    """Coefficient path: mu_n times the K_{beta-1}-weighted partial averages."""
    n_max = f.degree
    a = f.coeffs
    weights = gamma_ratio(params.beta - 1.0, np.arange(n_max + 1))
    if n_max <= _DIRECT_LIMIT:
        inner = np.empty(n_max + 1)
        for n in range(n_max + 1):
            inner[n] = weights[n::-1] @ a[: n + 1]
    else:
        from scipy.signal import fftconvolve
        inner = fftconvolve(a, weights)[: n_max + 1]
    return PowerSeries(params.mu.moments(n_max).values * inner)


def apply_cesaro_integral_at(params: CesaroParams, f: PowerSeries, z,
                             rel_tol: float = 1e-9):
    """Quadrature path: integral f(tz)/(1-tz)^beta dmu(t) at one point.

    Independent of the coefficient path: no moments, no convolutions.
    """
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"evaluation point must satisfy |z| < 1, got {abs(z)}")
    rev = f.coeffs[::-1]
    one_minus_z = 1.0 - z

    def integrand(x):
        t = 1.0 - x
        return np.polyval(rev, t * z) * (one_minus_z + x * z) ** -params.beta

    value = params.mu.integrate(integrand, rel_tol=rel_tol, use_complement=True)
    if isinstance(value, complex) and value.imag == 0.0 and z.imag == 0.0:
        return value.real
    return value


def andersen_cbeta(f: PowerSeries, beta: float) -> PowerSeries:
    """The normalized average: coefficients (sum w_{n-k} a_k) / K_beta[n]."""
    if not beta > 0.0:
        raise DomainError(f"beta must be positive, got {beta}")
    n = np.arange(f.degree + 1)
    weights = gamma_ratio(beta - 1.0, n)
    inner = np.convolve(f.coeffs, weights)[: f.degree + 1]
    return PowerSeries(inner / gamma_ratio(beta, n))


@dataclasses.dataclass(frozen=True)
class IdentityReport:
    identity: str
    measure: str
    beta: float
    deviation: float
    tolerance: float
    passed: bool
    detail: str = ""


def _rel_deviation(lhs: np.ndarray, rhs: np.ndarray) -> float:
    """Max absolute difference relative to the larger side's sup norm."""
    lhs = np.asarray(lhs)
    rhs = np.asarray(rhs)
    scale = max(float(np.max(np.abs(lhs))), float(np.max(np.abs(rhs))), 1e-300)
    return float(np.max(np.abs(lhs - rhs))) / scale


def verify_identity(name: str, mu: RadialMeasure, beta: float, f: PowerSeries,
                    tol: float = 1e-11, gamma: float | None = None,
                    beta2: float = 0.7) -> IdentityReport:
    """Check one operator identity along two independently coded routes.

    factor0          C_{mu,beta} f          = F_mu . (f K_{beta-1})   (. = Hadamard)
    factor1          C_{mu,beta} f          = (D_beta F_mu) . A^{beta-1} f
    commutator       D(Cf) - C(Df)          = beta (C_{mu,beta+1} - C_{mu,beta}) f
    leibniz-mix      D(C_{mu,beta} f)       = C_{mu,beta}(Df) + beta C_{mu,beta+1}(Sf)
    ibeta            I_beta(C_{mu,beta} f)  = integral A^{beta-1}f(tz) dmu(t)
    gamma-recurrence (g+1) D_{g+1} f        = D_g(Df) + g D_g f
    beta-shift       C_{mu,beta2+beta} f    = C_{mu,beta2}(f K_{beta-1})

    ibeta is compared both coefficientwise and pointwise on the z-grid
    {0.1,...,0.9}, the pointwise route using quadrature against the measure.
    """
    n_max = f.degree
    params = CesaroParams(mu, beta)
    if name == "factor0":
        lhs = apply_cesaro(params, f).coeffs
        rhs = hadamard(f_mu(mu, n_max),
                       cauchy_product(f, make_kernel_K(beta - 1.0, n_max))).coeffs
        dev = _rel_deviation(lhs, rhs)
    elif name == "factor1":
        lhs = apply_cesaro(params, f).coeffs
        rhs = hadamard(d_alpha_f_mu(mu, beta, n_max),
                       andersen_cbeta(f, beta)).coeffs
        dev = _rel_deviation(lhs, rhs)
    elif name == "commutator":
        lhs = (derivative_D(apply_cesaro(params, f))
               - apply_cesaro(params, derivative_D(f))).coeffs
        rhs = beta * (apply_cesaro(CesaroParams(mu, beta + 1.0), f)
                      - apply_cesaro(params, f)).coeffs
        dev = _rel_deviation(lhs, rhs)
    elif name == "leibniz-mix":
        lhs = derivative_D(apply_cesaro(params, f)).coeffs
        rhs = (apply_cesaro(params, derivative_D(f))
               + beta * apply_cesaro(CesaroParams(mu, beta + 1.0), shift_S(f))).coeffs
        dev = _rel_deviation(lhs, rhs)
    elif name == "ibeta":
        smoothed = frac_integral(apply_cesaro(params, f), beta)
        averaged = andersen_cbeta(f, beta)
        rhs_series = PowerSeries(mu.moments(n_max).values * averaged.coeffs)
        dev = _rel_deviation(smoothed.coeffs, rhs_series.coeffs)
        rev = averaged.coeffs[::-1]
        for z in IDENTITY_Z_GRID:
            quad = mu.integrate(lambda x: np.polyval(rev, (1.0 - x) * z),
                                rel_tol=1e-12, use_complement=True)
            point = evaluate(smoothed, z)
            scale = max(abs(quad), abs(point), 1e-300)
            dev = max(dev, abs(quad - point) / scale)
    elif name == "gamma-recurrence":
        g = beta if gamma is None else gamma
        lhs = ((g + 1.0) * frac_derivative(f, g + 1.0)).coeffs
        rhs = (frac_derivative(derivative_D(f), g) + g * frac_derivative(f, g)).coeffs
        dev = _rel_deviation(lhs, rhs)
    elif name == "beta-shift":
        lhs = apply_cesaro(CesaroParams(mu, beta2 + beta), f).coeffs
        rhs = apply_cesaro(CesaroParams(mu, beta2),
                           cauchy_product(f, make_kernel_K(beta - 1.0, n_max))).coeffs
        dev = _rel_deviation(lhs, rhs)
    else:
        raise DomainError(f"unknown identity {name!r}")
    return IdentityReport(name, mu.label, beta, dev, tol, bool(dev <= tol))
