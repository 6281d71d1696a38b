"""Radial measures on [0,1): moments, tails, and Carleson-type size.

A measure mu here is either a finite collection of atoms in [0,1) or a
density (1-t)^e g(t) dt with e > -1 and g smooth up to the endpoint.  The
quantities the rest of the package consumes:

    moments      mu_n = integral t^n dmu(t), nonincreasing in n
    tail         mu([r,1))
    carleson_exponent   the decay exponent s in three equivalent guises:
                 tail ~ (1-r)^s, moments ~ (n+1)^(-s), and Poisson-type
                 integrals integral dmu/(1-tr)^sigma ~ (1-r)^(s-sigma).

``s = +inf`` (compactly supported measures) is reported through an explicit
flag, never as a float infinity fed to arithmetic.
"""
from __future__ import annotations

import dataclasses
import math
from abc import ABC, abstractmethod

import numpy as np

from .errors import DomainError, QuadratureError
from .quadrature import (CERTIFY_ORDERS, endpoint_rule, moment_sums,
                         scaled_endpoint_rule)


class _InfiniteExponent:
    """Sentinel for 's = +inf' (measure supported away from the boundary)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "s=+inf"


INFINITE_EXPONENT = _InfiniteExponent()

DEFAULT_FIT_KS = tuple(range(4, 21))
FIT_WINDOW = 10


@dataclasses.dataclass(frozen=True)
class ExponentFit:
    """Least-squares power-law fit; slope is the recovered exponent."""

    slope: float
    intercept: float
    residual: float
    grid: str
    infinite: bool = False


@dataclasses.dataclass(frozen=True)
class MomentSequence:
    """Moments mu_0..mu_N with provenance ('closed-form' or 'quadrature')."""

    values: np.ndarray
    source: str
    method: str

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def truncation(self) -> int:
        return self.values.size - 1


def _fit_line(x: np.ndarray, y: np.ndarray):
    """Least-squares line fit; returns (slope, intercept, rms residual)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size < 4:
        raise DomainError(f"exponent fits need at least 4 grid points, got {x.size}")
    coeffs = np.polyfit(x, y, 1)
    resid = y - np.polyval(coeffs, x)
    return float(coeffs[0]), float(coeffs[1]), float(np.sqrt(np.mean(resid**2)))


class RadialMeasure(ABC):
    """A finite positive measure on [0,1)."""

    def __init__(self, label: str, known_carleson_exponent=None):
        self.label = label
        self.known_carleson_exponent = known_carleson_exponent
        self._moment_cache: MomentSequence | None = None

    def __repr__(self):
        return f"{type(self).__name__}({self.label})"

    @abstractmethod
    def total_mass(self) -> float: ...

    @abstractmethod
    def tail(self, r: float) -> float:
        """mu([r,1)) for 0 <= r < 1."""

    @abstractmethod
    def moments_at(self, n_values) -> np.ndarray:
        """Moments at arbitrary orders (used by log-spaced fits)."""

    @abstractmethod
    def _moment_array(self, truncation: int):
        """(values 0..truncation, method label)."""

    @abstractmethod
    def integrate(self, fn, *, rel_tol: float = 1e-9, use_complement: bool = False):
        """Certified integral of fn against the measure.

        ``fn`` is vectorized; it receives t, or x = 1-t when use_complement
        is set (the stable variable for integrands peaked at the boundary).
        """

    def moments(self, truncation: int) -> MomentSequence:
        """Moments mu_0..mu_truncation, cached, with a monotonicity check."""
        if truncation < 0:
            raise DomainError("truncation must be >= 0")
        cached = self._moment_cache
        if cached is None or cached.truncation < truncation:
            values, method = self._moment_array(truncation)
            drops = values[1:] - values[:-1] * (1.0 + 1e-9)
            if values.size > 1 and float(np.max(drops)) > 1e-13 * max(values[0], 1e-300):
                bad = int(np.argmax(drops)) + 1
                raise QuadratureError(
                    f"moments of {self.label} are not nonincreasing at n={bad}: "
                    f"{values[bad - 1]!r} -> {values[bad]!r}")
            cached = MomentSequence(values, self.label, method)
            self._moment_cache = cached
        if cached.truncation == truncation:
            return cached
        return MomentSequence(cached.values[: truncation + 1], cached.source, cached.method)


class AtomicMeasure(RadialMeasure):
    """Finitely many atoms t_j with weights w_j > 0.

    ``complements`` optionally carries exact values of 1 - t_j for atoms
    crowding the boundary, where forming 1-t in floats would lose digits.
    """

    def __init__(self, label, points, weights, complements=None,
                 known_carleson_exponent=None):
        super().__init__(label, known_carleson_exponent)
        points = np.asarray(points, dtype=float)
        weights = np.asarray(weights, dtype=float)
        if points.ndim != 1 or points.shape != weights.shape or points.size == 0:
            raise DomainError("atoms need matching non-empty point/weight arrays")
        if np.any(points < 0.0) or np.any(points >= 1.0):
            raise DomainError("atoms must lie in [0, 1)")
        if np.any(weights <= 0.0):
            raise DomainError("atom weights must be positive")
        if complements is None:
            complements = 1.0 - points
        self.points = points
        self.weights = weights
        self.complements = np.asarray(complements, dtype=float)

    def total_mass(self) -> float:
        return float(np.sum(self.weights))

    def tail(self, r: float) -> float:
        if not 0.0 <= r < 1.0:
            raise DomainError(f"tail radius must lie in [0, 1), got {r}")
        return float(np.sum(self.weights[self.points >= r]))

    def moments_at(self, n_values) -> np.ndarray:
        return moment_sums(self.complements, self.weights, np.asarray(n_values))

    def _moment_array(self, truncation: int):
        return self.moments_at(np.arange(truncation + 1)), "closed-form"

    def integrate(self, fn, *, rel_tol: float = 1e-9, use_complement: bool = False):
        arg = self.complements if use_complement else self.points
        value = np.sum(self.weights * fn(arg))
        return complex(value) if np.iscomplexobj(value) else float(value)


class DensityMeasure(RadialMeasure):
    """Density (1-t)^e g(t) dt with e > -1 and g smooth up to t=1.

    ``smooth_factor`` evaluates g as a function of x = 1-t (the stable
    variable near the endpoint; logarithmic factors of x are fine).  Closed
    forms for moments, tails and mass are used when supplied, with quadrature
    as the fallback, and the two are cross-checked in the test suite.
    """

    def __init__(self, label, smooth_factor, endpoint_exponent,
                 moment_rule=None, tail_rule=None, mass=None,
                 known_carleson_exponent=None):
        super().__init__(label, known_carleson_exponent)
        if endpoint_exponent <= -1.0:
            raise DomainError(
                f"endpoint exponent must exceed -1, got {endpoint_exponent}")
        self.smooth_factor = smooth_factor
        self.endpoint_exponent = float(endpoint_exponent)
        self.moment_rule = moment_rule
        self.tail_rule = tail_rule
        self._mass = mass

    def weight(self, t):
        """The density value at t."""
        x = 1.0 - np.asarray(t, dtype=float)
        return x**self.endpoint_exponent * self.smooth_factor(x)

    def total_mass(self) -> float:
        if self._mass is not None:
            return float(self._mass)
        value = self.integrate(lambda t: np.ones_like(t))
        self._mass = value
        return value

    def tail(self, r: float) -> float:
        if not 0.0 <= r < 1.0:
            raise DomainError(f"tail radius must lie in [0, 1), got {r}")
        if self.tail_rule is not None:
            return float(self.tail_rule(r))
        vals = []
        for nodes in CERTIFY_ORDERS:
            x, w = scaled_endpoint_rule(self.endpoint_exponent, 1.0 - r,
                                        panel_nodes=nodes)
            vals.append(float(np.sum(w * self.smooth_factor(x))))
        err = abs(vals[-1] - vals[0])
        if err > 1e-9 * max(abs(vals[-1]), 1e-300):
            raise QuadratureError(f"tail of {self.label} at r={r} failed "
                                  f"certification: delta={err!r}")
        return vals[-1]

    def moments_at(self, n_values) -> np.ndarray:
        if self.moment_rule is not None:
            return np.asarray(self.moment_rule(np.asarray(n_values, dtype=float)))
        outs = []
        for nodes in CERTIFY_ORDERS:
            x, w = endpoint_rule(self.endpoint_exponent, panel_nodes=nodes)
            outs.append(moment_sums(x, w * self.smooth_factor(x), n_values))
        err = np.abs(outs[-1] - outs[0])
        scale = np.maximum(np.abs(outs[-1]), 1e-300)
        if np.any(err > 1e-10 * scale):
            worst = int(np.argmax(err / scale))
            raise QuadratureError(
                f"moment quadrature for {self.label} failed certification at "
                f"n={np.asarray(n_values).flat[worst]}: delta={err.flat[worst]!r}")
        return outs[-1]

    def _moment_array(self, truncation: int):
        ns = np.arange(truncation + 1)
        if self.moment_rule is not None:
            return np.asarray(self.moment_rule(ns.astype(float))), "closed-form"
        return self.moments_at(ns), "quadrature"

    def integrate(self, fn, *, rel_tol: float = 1e-9, use_complement: bool = False):
        vals = []
        for nodes in CERTIFY_ORDERS:
            x, w = endpoint_rule(self.endpoint_exponent, panel_nodes=nodes)
            arg = x if use_complement else 1.0 - x
            vals.append(np.sum(w * self.smooth_factor(x) * fn(arg)))
        err = abs(vals[-1] - vals[0])
        if err > rel_tol * max(abs(vals[-1]), 1e-300):
            raise QuadratureError(f"integral against {self.label} failed "
                                  f"certification: delta={err!r}")
        value = vals[-1]
        return complex(value) if np.iscomplexobj(value) else float(value)


# ---------------------------------------------------------------------------
# measure zoo
# ---------------------------------------------------------------------------

def _beta_like(label: str, s: float) -> DensityMeasure:
    """Density s (1-t)^(s-1) dt: mass 1, tail exactly (1-r)^s."""
    if s <= 0.0:
        raise DomainError(f"exponent must be positive, got {s}")
    from scipy.special import gammaln

    def moment_rule(n):
        return np.exp(gammaln(n + 1.0) + gammaln(s + 1.0) - gammaln(n + s + 1.0))

    return DensityMeasure(
        label,
        smooth_factor=lambda x: np.full_like(x, s),
        endpoint_exponent=s - 1.0,
        moment_rule=moment_rule,
        tail_rule=lambda r: (1.0 - r) ** s,
        mass=1.0,
        known_carleson_exponent=s,
    )


def zoo(name: str, *params: float) -> RadialMeasure:
    """Build a named measure.

    lebesgue | beta_weight:b | power_carleson:s | dirac:t0 |
    dyadic_atomic:s | log_perturbed:s,a
    """
    label = name if not params else name + ":" + ",".join(format(p, "g") for p in params)
    mu = _zoo_build(name, label, *params)
    # Does the tail actually obey C (1-r)^s at the nominal exponent?  A
    # positive log perturbation defeats the O-bound at its own exponent.
    mu.tail_order_sharp = not (name == "log_perturbed" and params[1] > 0.0)
    return mu


def _zoo_build(name: str, label: str, *params: float) -> RadialMeasure:
    if name == "lebesgue":
        if params:
            raise DomainError("lebesgue takes no parameters")
        return DensityMeasure(
            "lebesgue",
            smooth_factor=lambda x: np.ones_like(x),
            endpoint_exponent=0.0,
            moment_rule=lambda n: 1.0 / (n + 1.0),
            tail_rule=lambda r: 1.0 - r,
            mass=1.0,
            known_carleson_exponent=1.0,
        )
    if name in ("beta_weight", "power_carleson"):
        (s,) = params
        return _beta_like(label, s)
    if name == "dirac":
        (t0,) = params
        if not 0.0 <= t0 < 1.0:
            raise DomainError(f"dirac point must lie in [0, 1), got {t0}")
        return AtomicMeasure(label, [t0], [1.0],
                             known_carleson_exponent=INFINITE_EXPONENT)
    if name == "dyadic_atomic":
        (s,) = params
        if s <= 0.0:
            raise DomainError(f"exponent must be positive, got {s}")
        # 1 - 2^-k stops being representable below 1.0 at k = 53.
        k = np.arange(53, dtype=float)
        x = 2.0**-k
        return AtomicMeasure(label, 1.0 - x, 2.0 ** (-k * s), complements=x,
                             known_carleson_exponent=s)
    if name == "log_perturbed":
        s, a = params
        if s <= 0.0:
            raise DomainError(f"exponent must be positive, got {s}")
        return DensityMeasure(
            label,
            smooth_factor=lambda x: s * (1.0 - np.log(x)) ** a,
            endpoint_exponent=s - 1.0,
            known_carleson_exponent=s,
        )
    raise DomainError(f"unknown measure name {name!r}")


def parse_measure(spec: str) -> RadialMeasure:
    """Parse 'name' or 'name:p1,p2' into a zoo measure."""
    name, _, rest = spec.partition(":")
    params = tuple(float(p) for p in rest.split(",")) if rest else ()
    return zoo(name.strip(), *params)


# ---------------------------------------------------------------------------
# Carleson-type exponent fits
# ---------------------------------------------------------------------------

def poisson_integral(mu: RadialMeasure, r: float, sigma: float,
                     rel_tol: float = 1e-8) -> float:
    """integral dmu(t) / (1-tr)^sigma, computed stably in x = 1-t."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")
    base = 1.0 - r
    return mu.integrate(lambda x: (base + r * x) ** -sigma,
                        rel_tol=rel_tol, use_complement=True)


def carleson_exponent(mu: RadialMeasure, method: str = "tail", grid=None,
                      probe_exponent: float | None = None,
                      fit_window: int = FIT_WINDOW) -> ExponentFit:
    """Fit the decay exponent s from tails, moments, or Poisson growth.

    All three methods report the same thing: the recovered Carleson exponent
    in ``slope``.  The Poisson route probes integral dmu/(1-tr)^sigma, whose
    growth exponent is sigma - s; pass sigma as ``probe_exponent``.
    Compactly supported measures get the infinite-exponent flag.
    """
    ks = np.asarray(DEFAULT_FIT_KS if grid is None else grid, dtype=float)
    if ks.size < 6:
        raise DomainError("fit grids need at least 6 boundary-approaching points")
    if method == "tail":
        radii = 1.0 - 2.0**-ks
        tails = np.array([mu.tail(r) for r in radii])
        keep = tails > 0.0
        if np.count_nonzero(keep) < 4:
            return ExponentFit(math.nan, math.nan, 0.0,
                               f"tail, r=1-2^-k, k in {ks[0]:g}..{ks[-1]:g}",
                               infinite=True)
        x = (ks * math.log(2.0))[keep][-fit_window:]
        y = np.log(tails[keep])[-fit_window:]
        slope, intercept, resid = _fit_line(x, y)
        return ExponentFit(-slope, intercept, resid,
                           f"tail, r=1-2^-k, k in {ks[0]:g}..{ks[-1]:g}")
    if method == "moments":
        ns = 2.0**ks
        mus = mu.moments_at(ns)
        keep = mus > 0.0
        if np.count_nonzero(keep) < 4:
            return ExponentFit(math.nan, math.nan, 0.0,
                               f"moments, n=2^k, k in {ks[0]:g}..{ks[-1]:g}",
                               infinite=True)
        x = np.log(ns + 1.0)[keep][-fit_window:]
        y = np.log(mus[keep])[-fit_window:]
        slope, intercept, resid = _fit_line(x, y)
        return ExponentFit(-slope, intercept, resid,
                           f"moments, n=2^k, k in {ks[0]:g}..{ks[-1]:g}")
    if method == "poisson":
        if probe_exponent is None:
            probe_exponent = 4.0    # above every zoo exponent in routine use
        radii = 1.0 - 2.0**-ks
        if mu.tail(radii[-1]) == 0.0:
            # bounded Poisson integral would masquerade as s = sigma
            return ExponentFit(math.nan, math.nan, 0.0,
                               f"poisson sigma={probe_exponent:g}, compact support",
                               infinite=True)
        vals = np.array([poisson_integral(mu, r, probe_exponent) for r in radii])
        x = (ks * math.log(2.0))[-fit_window:]
        y = np.log(vals)[-fit_window:]
        slope, intercept, resid = _fit_line(x, y)
        return ExponentFit(probe_exponent - slope, intercept, resid,
                           f"poisson sigma={probe_exponent:g}, r=1-2^-k, "
                           f"k in {ks[0]:g}..{ks[-1]:g}")
    raise DomainError(f"unknown fit method {method!r}")


@dataclasses.dataclass(frozen=True)
class CarlesonCheck:
    bounded: bool
    constant: float
    trend: float
    ratios: tuple


def is_s_carleson(mu: RadialMeasure, s: float, grid=None, window: int = 5) -> CarlesonCheck:
    """Is tail(r) <= C (1-r)^s with C stable over the last grid points?

    Stability means the ratio tail/(1-r)^s shows no growth trend (fitted
    log-log slope <= 0.02) over the final window.
    """
    ks = np.asarray(DEFAULT_FIT_KS if grid is None else grid, dtype=float)
    radii = 1.0 - 2.0**-ks
    ratios = np.array([mu.tail(r) / (1.0 - r) ** s for r in radii])
    tail_ratios = ratios[-window:]
    if np.all(tail_ratios == 0.0):
        return CarlesonCheck(True, 0.0, 0.0, tuple(ratios))
    keep = tail_ratios > 0.0
    x = (ks[-window:] * math.log(2.0))[keep]
    y = np.log(tail_ratios[keep])
    if x.size < 4:
        return CarlesonCheck(True, float(np.max(tail_ratios)), 0.0, tuple(ratios))
    slope, _, _ = _fit_line(x, y)
    return CarlesonCheck(bool(slope <= 0.02), float(np.max(tail_ratios)),
                         float(slope), tuple(ratios))
