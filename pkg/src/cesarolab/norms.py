"""Mixed norms on the unit disc and their dyadic-block machinery.

For 0 < p <= inf, 0 < q < inf, gamma > 0, the (p,q,gamma) norm of an analytic
function f is

    ( integral_0^1 (1-r)^(q gamma - 1) M_p(f,r)^q dr )^(1/q),

and for q = inf it is sup_r (1-r)^gamma M_p(f,r), where M_p(f,r) is the p-th
integral mean of f over the circle of radius r.  The radial integral is
accumulated over dyadic blocks 1-r in [2^-(k+1), 2^-k]; the per-block
contributions Phi(k) both drive convergence detection and feed the
membership classifier, which re-truncates the coefficient stream to
N(k) = 8*2^k before judging block k, so that a decision about an infinite
series only ever uses radii its truncation can resolve.

Integral means: Parseval for p = 2, the exact positive-coefficient sup f(r)
for p = inf, otherwise |f|^p averaged over M = 8(N+1) uniform angles via FFT
with one doubling to certify.
"""
from __future__ import annotations

import dataclasses
import math

import numpy as np

from .errors import DomainError
from .measures import ExponentFit, MomentSequence, _fit_line
from .quadrature import _legendre_unit
from .series import PowerSeries

# Last-coefficient contribution above this fraction of the mean flags the
# radius as beyond what the truncation resolves.
ADEQUACY_TOL = 1e-6

# Block-ratio thresholds: geometric decay / bounded-below-or-growing for the
# integral (q < inf) blocks, plateau-or-decay / geometric growth for sup
# (q = inf) blocks.
MEMBER_RATIO = 0.8
NON_MEMBER_RATIO = 0.9
SUP_MEMBER_RATIO = 1.02
SUP_NON_MEMBER_RATIO = 1.1

_BLOCK_STOP_REL = 1e-16
_MAX_BLOCKS = 400


def conjugate_exponent(p: float) -> float:
    """p' with 1/p + 1/p' = 1; conventionally 1' = inf and inf' = 1."""
    if p == 1.0:
        return math.inf
    if math.isinf(p):
        return 1.0
    if p < 1.0:
        raise DomainError(f"conjugate exponent needs p >= 1, got {p}")
    return p / (p - 1.0)


@dataclasses.dataclass(frozen=True)
class MixedNormParams:
    """The triple (p, q, gamma); p or q may be math.inf."""

    p: float
    q: float
    gamma: float

    def __post_init__(self):
        if not self.p > 0.0:
            raise DomainError(f"p must be positive (or inf), got {self.p}")
        if not self.q > 0.0:
            raise DomainError(f"q must be positive (or inf), got {self.q}")
        if not self.gamma > 0.0:
            raise DomainError(f"gamma must be positive, got {self.gamma}")

    @property
    def p_conjugate(self) -> float:
        return conjugate_exponent(self.p)

    def label(self) -> str:
        def fmt(v):
            return "inf" if math.isinf(v) else format(v, "g")
        return f"({fmt(self.p)},{fmt(self.q)},{format(self.gamma, 'g')})"


@dataclasses.dataclass(frozen=True)
class NormResult:
    """A computed norm with convergence diagnostics.

    When ``converged`` is False the value is only a lower bound for the norm
    of whatever infinite series the input truncates.
    """

    value: float
    converged: bool
    error_estimate: float
    block_k: tuple
    block_phi: tuple


def _mean_detailed(f: PowerSeries, p: float, r: float, certify: bool = True):
    """(value, certification error, truncation adequate) for M_p(f, r)."""
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"mean radius must lie in [0, 1], got {r}")
    if not p > 0.0:
        raise DomainError(f"mean exponent must be positive (or inf), got {p}")
    coeffs = f.coeffs
    if r == 0.0:
        return abs(float(coeffs[0])), 0.0, True
    scaled = coeffs if r == 1.0 else coeffs * np.power(r, np.arange(coeffs.size))
    err = 0.0
    if p == 2.0:
        value = float(np.sqrt(np.dot(scaled, scaled)))
    elif math.isinf(p) and np.all(coeffs >= 0.0):
        value = float(np.sum(scaled))
    else:
        m1 = 1 << max(8, int(np.ceil(np.log2(8 * coeffs.size))))
        vals = []
        for m in (m1, 2 * m1) if certify else (m1,):
            samples = np.abs(np.fft.fft(scaled, n=m))
            if math.isinf(p):
                vals.append(float(np.max(samples)))
            else:
                with np.errstate(over="ignore"):
                    vals.append(float(np.mean(samples**p) ** (1.0 / p)))
        value = vals[-1]
        if certify:
            err = abs(vals[1] - vals[0])
    adequate = abs(float(scaled[-1])) <= ADEQUACY_TOL * max(value, 1e-300)
    return value, err, adequate


def integral_mean(f: PowerSeries, p: float, r: float) -> float:
    """The p-th integral mean of f over the circle of radius r."""
    return _mean_detailed(f, p, r)[0]


def hardy_norm(f: PowerSeries, p: float) -> float:
    """The boundary mean M_p(f, 1)."""
    return _mean_detailed(f, p, 1.0)[0]


def _block_integral(f: PowerSeries, params: MixedNormParams, k: int,
                    nodes: int = 16, mean_radius_power: int = 1,
                    certify: bool = True):
    """Phi(k): the block's share of the radial integral, plus diagnostics."""
    u, w = _legendre_unit(nodes)
    width = 2.0 ** -(k + 1)
    one_minus_r = 2.0**-k - width * u
    total = 0.0
    adequate = True
    mean_err = 0.0
    for omr, wi in zip(one_minus_r, w):
        r = 1.0 - omr
        mean, err, ok = _mean_detailed(f, params.p, r**mean_radius_power, certify)
        with np.errstate(over="ignore"):
            total += wi * width * omr ** (params.q * params.gamma - 1.0) * mean**params.q
        adequate = adequate and ok
        mean_err = max(mean_err, err / max(mean, 1e-300))
    return float(total), adequate, mean_err


def _sup_on_block(f: PowerSeries, params: MixedNormParams, k: int,
                  points: int = 17, mean_radius_power: int = 1,
                  certify: bool = True):
    """Max of (1-r)^gamma M_p over block k's radii."""
    one_minus_r = 2.0**-k * (1.0 - 0.5 * np.linspace(0.0, 1.0, points))
    best = -math.inf
    adequate = True
    for omr in one_minus_r:
        r = 1.0 - omr
        mean, _, ok = _mean_detailed(f, params.p, r**mean_radius_power, certify)
        val = omr**params.gamma * mean
        if val > best:
            best = val
            adequate = ok
    return float(best), adequate


def mixed_norm(f: PowerSeries, params: MixedNormParams, *, block_nodes: int = 16,
               mean_radius_power: int = 1, certify: bool = True) -> NormResult:
    """The (p,q,gamma) norm of the truncated series f.

    For q < inf the radial integral is summed over dyadic blocks until the
    remainder is negligible; for q = inf the sup is taken over the dyadic
    radius grid and refined around the maximizing block.  ``converged``
    records whether every significant radius stayed within the truncation's
    resolving power.
    """
    if math.isinf(params.q):
        best_k = 0
        best = -math.inf
        values = []
        adequate_at_max = True
        k = 0
        while k < _MAX_BLOCKS:
            omr = 2.0**-k
            mean, _, ok = _mean_detailed(f, params.p, (1.0 - omr)**mean_radius_power,
                                         certify)
            val = omr**params.gamma * mean
            values.append(val)
            if val > best:
                best, best_k, adequate_at_max = val, k, ok
            if k > 8 and val < 1e-12 * max(best, 1e-300):
                break
            k += 1
        refined = best
        for kk in (best_k - 1, best_k):
            if kk < 0:
                continue
            block_best, ok = _sup_on_block(f, params, kk, points=33,
                                           mean_radius_power=mean_radius_power,
                                           certify=certify)
            if block_best > refined:
                refined = block_best
                adequate_at_max = ok
        return NormResult(refined, adequate_at_max, abs(refined - best),
                          tuple(range(len(values))), tuple(values))

    total = 0.0
    phis = []
    adequacy = []
    worst_mean_err = 0.0
    k = 0
    while k < _MAX_BLOCKS:
        phi, ok, mean_err = _block_integral(f, params, k, block_nodes,
                                            mean_radius_power, certify)
        phis.append(phi)
        adequacy.append(ok)
        worst_mean_err = max(worst_mean_err, mean_err)
        total += phi
        if not math.isfinite(total):
            return NormResult(math.inf, False, math.inf,
                              tuple(range(len(phis))), tuple(phis))
        if k > 8 and phi < _BLOCK_STOP_REL * max(total, 1e-300):
            break
        k += 1
    tail_rel = 0.0
    if len(phis) >= 2 and phis[-2] > 0.0:
        ratio = min(phis[-1] / phis[-2], 0.99)
        tail_rel = phis[-1] * ratio / (1.0 - ratio) / max(total, 1e-300)
    value = total ** (1.0 / params.q)
    significant = [ok for phi, ok in zip(phis, adequacy)
                   if phi > 1e-12 * max(total, 1e-300)]
    converged = all(significant) if significant else True
    err = value * (tail_rel + worst_mean_err) / max(params.q, 1.0)
    return NormResult(float(value), bool(converged), float(err),
                      tuple(range(len(phis))), tuple(phis))


def dyadic_blocks(truncation: int) -> list:
    """Index blocks {0}, [1,2), [2,4), ... covering 0..truncation."""
    blocks = [np.array([0])]
    n = 1
    while 2 ** (n - 1) <= truncation:
        lo = 2 ** (n - 1)
        hi = min(2**n, truncation + 1)
        blocks.append(np.arange(lo, hi))
        n += 1
    return blocks


def kellogg_norm(seq, p: float, q: float) -> float:
    """Blockwise l^p, then l^q across dyadic coefficient blocks."""
    coeffs = seq.coeffs if isinstance(seq, PowerSeries) else np.asarray(seq, dtype=float)
    if not p > 0.0 or not q > 0.0:
        raise DomainError("block norm exponents must be positive (or inf)")
    inner = []
    for block in dyadic_blocks(coeffs.size - 1):
        vals = np.abs(coeffs[block])
        if math.isinf(p):
            inner.append(float(np.max(vals)))
        else:
            inner.append(float(np.sum(vals**p) ** (1.0 / p)))
    inner = np.asarray(inner)
    if math.isinf(q):
        return float(np.max(inner))
    return float(np.sum(inner**q) ** (1.0 / q))


@dataclasses.dataclass(frozen=True)
class WeightedMomentResult:
    """Partial l^q norms of ((n+1)^theta mu_n) with a convergence verdict.

    ``converged`` means the dyadic increments of the q-th power partial sums
    decay geometrically (ratio <= 0.8); the partial norms are reported at
    N/4, N/2 and N.
    """

    value: float
    converged: bool
    partials: tuple
    increment_ratio: float


def weighted_moment_lq(moments, theta: float, q: float) -> WeightedMomentResult:
    mu = moments.values if isinstance(moments, MomentSequence) else np.asarray(moments)
    n_max = mu.size - 1
    if n_max < 16:
        raise DomainError("weighted moment sums need truncation >= 16")
    n = np.arange(mu.size, dtype=float)
    terms = (n + 1.0) ** theta * mu
    quarter, half = n_max // 4, n_max // 2
    if math.isinf(q):
        value = float(np.max(terms))
        partials = (float(np.max(terms[: quarter + 1])),
                    float(np.max(terms[: half + 1])), value)
        # in ell^inf iff the running sup has stopped growing by the last half
        growth = value / max(partials[1], 1e-300)
        return WeightedMomentResult(value, bool(growth <= 1.0 + 1e-6),
                                    partials, float(growth))
    with np.errstate(over="ignore"):
        powers = terms**q
    csum = np.cumsum(powers)
    s1, s2, s3 = float(csum[quarter]), float(csum[half]), float(csum[-1])
    d1, d2 = s2 - s1, s3 - s2
    ratio = 0.0 if d1 <= 0.0 else d2 / d1
    partials = tuple(s ** (1.0 / q) for s in (s1, s2, s3))
    return WeightedMomentResult(partials[2], bool(ratio <= MEMBER_RATIO),
                                partials, float(ratio))


def growth_exponent(f: PowerSeries, p: float, grid=None,
                    fit_window: int = 10) -> ExponentFit:
    """Fitted growth exponent m with M_p(f,r) ~ (1-r)^(-m).

    The default radius grid r = 1-2^-k stops at the largest k the truncation
    resolves under N = 8*2^k.
    """
    if grid is None:
        k_top = int(math.floor(math.log2(max(f.degree, 8) / 8.0)))
        grid = range(3, k_top + 1)
    ks = np.asarray(list(grid), dtype=float)
    if ks.size < 4:
        raise DomainError("growth fits need at least 4 radii; deepen the truncation")
    means = np.array([_mean_detailed(f, p, 1.0 - 2.0**-k)[0] for k in ks])
    if np.any(means <= 0.0):
        raise DomainError("growth fits need positive means on the whole grid")
    x = (ks * math.log(2.0))[-fit_window:]
    y = np.log(means)[-fit_window:]
    slope, intercept, resid = _fit_line(x, y)
    return ExponentFit(slope, intercept, resid,
                       f"means, r=1-2^-k, k in {ks[0]:g}..{ks[-1]:g}")


@dataclasses.dataclass(frozen=True)
class MembershipReport:
    """Block-contribution verdict for membership of a coefficient stream."""

    verdict: str
    params: MixedNormParams
    block_k: tuple
    block_phi: tuple
    ratios: tuple


def membership_classify(coeff_rule, params: MixedNormParams, *, k_min: int = 2,
                        k_max: int = 12, window: int = 6,
                        block_nodes: int = 12) -> MembershipReport:
    """Classify membership from re-truncated dyadic block contributions.

    ``coeff_rule(N)`` must return coefficients 0..N of the series under test;
    block k is computed from the truncation N(k) = 8*2^k.  Geometric decay of
    the final window's ratios means member; a plateau or growth means
    non-member for integral norms, while for sup norms (q = inf) a plateau is
    membership and only geometric growth rejects.
    """
    if k_max - k_min < window:
        raise DomainError("classification needs more blocks than the window")
    ks = list(range(k_min, k_max + 1))
    phis = []
    for k in ks:
        truncation = 8 * 2**k
        f = PowerSeries(coeff_rule(truncation))
        if math.isinf(params.q):
            phi, _ = _sup_on_block(f, params, k)
        else:
            phi, _, _ = _block_integral(f, params, k, nodes=block_nodes)
        phis.append(phi)
    tail = phis[-(window + 1):]
    if all(v == 0.0 for v in tail):
        return MembershipReport("member", params, tuple(ks), tuple(phis), ())
    if any(v <= 0.0 for v in tail):
        return MembershipReport("inconclusive", params, tuple(ks), tuple(phis), ())
    ratios = tuple(b / a for a, b in zip(tail, tail[1:]))
    if math.isinf(params.q):
        if max(ratios) <= SUP_MEMBER_RATIO:
            verdict = "member"
        elif min(ratios) >= SUP_NON_MEMBER_RATIO:
            verdict = "non-member"
        else:
            verdict = "inconclusive"
    else:
        if max(ratios) <= MEMBER_RATIO:
            verdict = "member"
        elif min(ratios) >= NON_MEMBER_RATIO:
            verdict = "non-member"
        else:
            verdict = "inconclusive"
    return MembershipReport(verdict, params, tuple(ks), tuple(phis), ratios)
