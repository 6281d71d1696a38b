"""Truncated power series and the coefficient calculus built on them.

A series is stored as its coefficient vector (a_0, ..., a_N) and stands for
f(z) = sum a_n z^n on the unit disc.  Two kernel families drive everything
else here:

    K_alpha(z) = (1-z)^(-(alpha+1)) = sum Gamma(n+alpha+1)/(n! Gamma(alpha+1)) z^n
    G_gamma(z) = sum n! Gamma(gamma+1)/Gamma(n+gamma+1) z^n

K_0 = G_0 = 1/(1-z).  Hadamard (coefficientwise) multiplication by K_gamma is
a fractional derivative of order gamma, by G_gamma a fractional integral, and
the two invert each other.  All Gamma-ratio weights are evaluated in
log-gamma space so large orders neither overflow nor lose precision.

Binary operations truncate to the shorter operand; nothing is zero-extended
implicitly.
"""
from __future__ import annotations

import csv
import dataclasses
import io
import json

import numpy as np
from scipy.signal import fftconvolve
from scipy.special import gammaln

from .errors import DomainError

DEFAULT_TRUNCATION = 1024

# Above this degree exact O(N^2) convolution hands over to FFT convolution.
_DIRECT_CONV_LIMIT = 4096


@dataclasses.dataclass(frozen=True, eq=False)
class PowerSeries:
    """Immutable truncated power series; ``coeffs[n]`` multiplies z^n."""

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise DomainError("coefficients must be a non-empty 1-d array")
        if not np.all(np.isfinite(arr)):
            raise DomainError("coefficients must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, z):
        return evaluate(self, z)

    def _binary(self, other, op):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.coeffs.size, other.coeffs.size)
        return PowerSeries(op(self.coeffs[:n], other.coeffs[:n]))

    def __add__(self, other):
        return self._binary(other, np.add)

    def __sub__(self, other):
        return self._binary(other, np.subtract)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, float, np.floating, np.integer)):
            return PowerSeries(self.coeffs * float(scalar))
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return PowerSeries(-self.coeffs)

    # -- serialization ----------------------------------------------------

    def to_json_array(self) -> str:
        return json.dumps([format(c, ".17g") for c in self.coeffs]).replace('"', "")

    @staticmethod
    def from_json_array(text: str) -> "PowerSeries":
        return PowerSeries(np.asarray(json.loads(text), dtype=float))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "coeff"])
        for n, c in enumerate(self.coeffs):
            writer.writerow([n, format(c, ".17g")])
        return buf.getvalue()

    @staticmethod
    def from_csv(text: str) -> "PowerSeries":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or rows[0][:2] != ["n", "coeff"]:
            raise DomainError("expected a CSV with header 'n,coeff'")
        body = [r for r in rows[1:] if r]
        coeffs = np.empty(len(body))
        for i, row in enumerate(body):
            if int(row[0]) != i:
                raise DomainError("CSV rows must be consecutive from n=0")
            coeffs[i] = float(row[1])
        return PowerSeries(coeffs)


def unit_series(truncation: int = DEFAULT_TRUNCATION) -> PowerSeries:
    """The constant series 1."""
    coeffs = np.zeros(truncation + 1)
    coeffs[0] = 1.0
    return PowerSeries(coeffs)


def monomial(m: int, truncation: int = DEFAULT_TRUNCATION) -> PowerSeries:
    """The series z^m."""
    if not 0 <= m <= truncation:
        raise DomainError(f"monomial order {m} outside truncation {truncation}")
    coeffs = np.zeros(truncation + 1)
    coeffs[m] = 1.0
    return PowerSeries(coeffs)


def gamma_ratio(alpha: float, n) -> np.ndarray:
    """Gamma(n+alpha+1) / (n! Gamma(alpha+1)), vectorized over n, via log-gamma."""
    n = np.asarray(n, dtype=float)
    return np.exp(gammaln(n + alpha + 1.0) - gammaln(n + 1.0) - gammaln(alpha + 1.0))


def make_kernel_K(alpha: float, truncation: int = DEFAULT_TRUNCATION) -> PowerSeries:
    """Coefficients of (1-z)^(-(alpha+1)); requires alpha > -1."""
    if alpha <= -1.0:
        raise DomainError(f"kernel order must exceed -1, got {alpha}")
    return PowerSeries(gamma_ratio(alpha, np.arange(truncation + 1)))


def make_kernel_G(gamma: float, truncation: int = DEFAULT_TRUNCATION) -> PowerSeries:
    """Coefficients n! Gamma(gamma+1)/Gamma(n+gamma+1); gamma=0 gives 1/(1-z)."""
    if gamma < 0.0:
        raise DomainError(f"smoothing order must be >= 0, got {gamma}")
    n = np.arange(truncation + 1, dtype=float)
    return PowerSeries(np.exp(-(gammaln(n + gamma + 1.0) - gammaln(n + 1.0) - gammaln(gamma + 1.0))))


def hadamard(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Coefficientwise product, truncated to the shorter operand."""
    n = min(f.coeffs.size, g.coeffs.size)
    return PowerSeries(f.coeffs[:n] * g.coeffs[:n])


def cauchy_product(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Convolution product f*g truncated to the shorter operand's degree."""
    n = min(f.coeffs.size, g.coeffs.size)
    if n <= _DIRECT_CONV_LIMIT:
        full = np.convolve(f.coeffs[:n], g.coeffs[:n])
    else:
        full = fftconvolve(f.coeffs[:n], g.coeffs[:n])
    return PowerSeries(full[:n])


def frac_derivative(f: PowerSeries, alpha: float) -> PowerSeries:
    """Hadamard multiplication by K_alpha; order alpha > -1, alpha=0 is identity."""
    if alpha <= -1.0:
        raise DomainError(f"derivative order must exceed -1, got {alpha}")
    return hadamard(f, make_kernel_K(alpha, f.degree))


def frac_integral(f: PowerSeries, gamma: float) -> PowerSeries:
    """Hadamard multiplication by G_gamma; gamma >= 0, gamma=0 is identity."""
    if gamma < 0.0:
        raise DomainError(f"integral order must be >= 0, got {gamma}")
    return hadamard(f, make_kernel_G(gamma, f.degree))


def derivative_D(f: PowerSeries) -> PowerSeries:
    """(z f)' in coefficients: n-th coefficient becomes (n+1) a_n."""
    n = np.arange(f.coeffs.size, dtype=float)
    return PowerSeries((n + 1.0) * f.coeffs)


def shift_S(f: PowerSeries) -> PowerSeries:
    """Multiplication by z at fixed truncation: the top coefficient drops off."""
    coeffs = np.empty_like(f.coeffs)
    coeffs[0] = 0.0
    coeffs[1:] = f.coeffs[:-1]
    return PowerSeries(coeffs)


def dilate(f: PowerSeries, r: float) -> PowerSeries:
    """f(rz) for 0 <= r <= 1."""
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"dilation radius must lie in [0, 1], got {r}")
    return PowerSeries(f.coeffs * np.power(r, np.arange(f.coeffs.size, dtype=float)))


def evaluate(f: PowerSeries, z):
    """Horner evaluation at a point (or array of points) with |z| <= 1."""
    z_arr = np.asarray(z)
    if np.any(np.abs(z_arr) > 1.0 + 1e-12):
        raise DomainError("evaluation point must satisfy |z| <= 1")
    return np.polyval(f.coeffs[::-1], z)
