"""Boundedness lab: criterion-table predictions vs numerical probes.

For the averaging operator with measure mu and exponent beta acting between
mixed norm spaces, `predict` applies a fixed table of boundedness criteria.
Most reduce to comparing the measure's Carleson exponent against

    s_required = beta + gamma1 - gamma2 + 1/p1 - 1/p2,

while the sup-to-integral rows (q1 = inf > q2, same p and gamma) use moment
sequence summability instead.  `probe` pushes a family of test functions
toward the boundary and fits the growth rate of the ratio

    target_norm(C f) / source_norm(f);

a flat ratio curve diagnoses bounded, geometric growth diagnoses unbounded.
The table is evaluated in a fixed order arranged so that any overlapping rows
agree; the first matching row supplies the tag.

The lab treats the prediction as ground truth and the probe as a consistency
check, never the reverse: a finite family can only ever witness
unboundedness, not certify boundedness.
"""
from __future__ import annotations

import dataclasses
import math
import statistics

import numpy as np

from .errors import DomainError
from .measures import (INFINITE_EXPONENT, RadialMeasure, ExponentFit,
                       carleson_exponent, parse_measure, _fit_line)
from .norms import (MixedNormParams, MembershipReport, WeightedMomentResult,
                    integral_mean, membership_classify, mixed_norm,
                    weighted_moment_lq)
from .operators import CesaroParams, apply_cesaro, d_alpha_f_mu
from .series import PowerSeries, dilate, make_kernel_K, monomial

BOUNDED_SLOPE = 0.05
UNBOUNDED_SLOPE = 0.15
CRITICAL_MARGIN = 0.25
SEQUENCE_TRUNCATION = 65536
DEFAULT_FAMILY_KS = tuple(range(4, 11))
PROBE_FIT_WINDOW = 6


def _invp(p: float) -> float:
    return 0.0 if math.isinf(p) else 1.0 / p


@dataclasses.dataclass(frozen=True)
class SpacePair:
    """Source and target mixed norm spaces."""

    source: MixedNormParams
    target: MixedNormParams

    def required_exponent(self, beta: float) -> float:
        """The Carleson exponent the comparison rules demand."""
        return (beta + self.source.gamma - self.target.gamma
                + _invp(self.source.p) - _invp(self.target.p))

    def label(self) -> str:
        return f"{self.source.label()}->{self.target.label()}"


@dataclasses.dataclass(frozen=True)
class PredictedVerdict:
    """Outcome of the criterion table for one (measure, beta, pair)."""

    status: str                 # bounded | unbounded | critical | uncovered
    rule: str                   # R1..R8, or none
    s_required: float | None
    detail: str


def _compare_exponent(s_measure, s_required: float, rule: str, detail: str,
                      order_sharp) -> PredictedVerdict:
    if s_measure is INFINITE_EXPONENT:
        return PredictedVerdict("bounded", rule, s_required,
                                detail + "; compactly supported measure")
    if s_measure > s_required:
        return PredictedVerdict("bounded", rule, s_required, detail)
    if s_measure < s_required:
        return PredictedVerdict("unbounded", rule, s_required, detail)
    if order_sharp is True:
        return PredictedVerdict("bounded", rule, s_required,
                                detail + "; tail bound holds at the exponent itself")
    if order_sharp is False:
        return PredictedVerdict("unbounded", rule, s_required,
                                detail + "; tail bound fails at the exponent itself")
    return PredictedVerdict("critical", rule, s_required,
                            detail + "; exponent sits exactly on the threshold")


def _sequence_verdict(moments, theta: float, q: float, s_measure, rule: str,
                      beta: float) -> PredictedVerdict:
    detail = f"summability of ((n+1)^{theta:g} mu_n) in l^{q:g}"
    if moments is not None:
        arr = moments() if callable(moments) else moments
        arr = arr.values if hasattr(arr, "values") else np.asarray(arr, dtype=float)
        wm = weighted_moment_lq(arr, theta, q)
        status = "bounded" if wm.converged else "unbounded"
        return PredictedVerdict(
            status, rule, beta,
            detail + f"; dyadic increment ratio {wm.increment_ratio:.3g}")
    # No moment data: fall back to the power-law threshold s = beta.
    if s_measure is INFINITE_EXPONENT:
        return PredictedVerdict("bounded", rule, beta,
                                detail + "; compactly supported measure")
    if s_measure > beta:
        return PredictedVerdict("bounded", rule, beta, detail + " (power-law proxy)")
    if s_measure < beta:
        return PredictedVerdict("unbounded", rule, beta, detail + " (power-law proxy)")
    return PredictedVerdict("critical", rule, beta,
                            detail + "; power-law proxy cannot break the tie")


def predict(s_measure, beta: float, pair: SpacePair, *, moments=None,
            order_sharp=None) -> PredictedVerdict:
    """Apply the criterion table.

    ``s_measure`` is the measure's Carleson exponent (or the infinite-exponent
    sentinel).  ``moments`` (array, sequence object, or zero-argument callable
    producing one) feeds the sup-to-integral sequence rules; without it those
    rows fall back to a power-law proxy that cannot resolve ties.
    ``order_sharp`` states whether the tail bound holds at the exponent itself,
    which decides comparison rules landing exactly on the threshold.
    """
    if beta <= 0.0:
        raise DomainError(f"beta must be positive, got {beta}")
    p1, q1, g1 = pair.source.p, pair.source.q, pair.source.gamma
    p2, q2, g2 = pair.target.p, pair.target.q, pair.target.gamma
    s_req = pair.required_exponent(beta)

    # R5: target large enough that any finite measure works.
    if q1 <= q2 and s_req <= 0.0:
        return PredictedVerdict(
            "bounded", "R5", s_req,
            "any finite measure: smoothing by beta covers the gamma gap")
    # R2: sup-norm scale on both sides.
    if (math.isinf(q1) and math.isinf(q2) and 1.0 <= p2 <= p1 and s_req > 0.0):
        return _compare_exponent(s_measure, s_req, "R2",
                                 "Carleson comparison on sup-scale spaces",
                                 order_sharp)
    # R7 before R6: both sequence rules, R7 is the sharper beta = 1 form.
    if (math.isinf(q1) and not math.isinf(q2) and p1 == p2 and g1 == g2
            and beta == 1.0 and p1 >= 2.0):
        return _sequence_verdict(moments, 1.0 - 1.0 / q2, q2, s_measure,
                                 "R7", beta)
    if (math.isinf(q1) and not math.isinf(q2) and p1 == p2 and g1 == g2
            and p1 >= 1.0):
        return _sequence_verdict(moments, beta - 1.0 / q2, q2, s_measure,
                                 "R6", beta)
    # R1: same p, same finite q, gamma gap below beta.
    if (p1 == p2 and 1.0 <= p1 and not math.isinf(p1)
            and q1 == q2 and not math.isinf(q1) and g2 < g1 + beta):
        return _compare_exponent(s_measure, s_req, "R1",
                                 "Carleson comparison at equal (p, q)",
                                 order_sharp)
    # R3 before R4: R4 only relaxes R3's gamma ordering.
    if (1.0 <= p2 <= p1 and not math.isinf(p1)
            and q1 <= q2 and not math.isinf(q2) and g1 < g2 and s_req > 0.0):
        return _compare_exponent(s_measure, s_req, "R3",
                                 "Carleson comparison, integral scales",
                                 order_sharp)
    if (1.0 <= p2 <= p1 and not math.isinf(p1)
            and q1 <= q2 and not math.isinf(q2)
            and 0.0 < g1 - (_invp(p2) - _invp(p1)) < g2 and s_req > 0.0):
        return _compare_exponent(s_measure, s_req, "R4",
                                 "Carleson comparison, relaxed gamma ordering",
                                 order_sharp)
    return PredictedVerdict("uncovered", "none", None,
                            "no criterion in the table matches this pair")


def bergman_space(p: float, alpha: float) -> MixedNormParams:
    """The weighted Bergman space with weight (1-|z|)^alpha as a mixed norm."""
    if alpha <= -1.0:
        raise DomainError(f"Bergman weight exponent must exceed -1, got {alpha}")
    return MixedNormParams(p, p, (1.0 + alpha) / p)


def predict_bergman(s_measure, beta: float, p1: float, alpha1: float,
                    p2: float, alpha2: float, **kwargs) -> PredictedVerdict:
    """Criterion table on Bergman spaces, via their mixed norm aliases."""
    pair = SpacePair(bergman_space(p1, alpha1), bergman_space(p2, alpha2))
    return predict(s_measure, beta, pair, **kwargs)


# ---------------------------------------------------------------------------
# Test families and the empirical probe
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class FamilyMember:
    label: str
    x: float                    # divergence coordinate for the ratio fit
    series: PowerSeries


def test_family(kind: str, indices, source: MixedNormParams | None = None):
    """Test functions pushed toward the boundary.

    kernels: dilations of the reproducing-type kernel attached to the source
    sup-scale space, at a = 1-2^-k (indices are the k's).  boundary_kernels:
    dilations of the kernel whose exponent is 1/p1 + 1/q1 + gamma1, the
    standard family for integral-scale sources.  monomials: z^n (indices are
    the degrees).  Truncations follow N(k) = 8*2^k, respectively N(n) = 8n.
    """
    members = []
    if kind == "monomials":
        for n in indices:
            if n < 1:
                raise DomainError("monomial degrees start at 1")
            members.append(FamilyMember(f"z^{n}", math.log(n),
                                        monomial(n, truncation=8 * n)))
        return members
    if source is None:
        raise DomainError(f"family {kind!r} needs the source space")
    if kind == "kernels":
        exponent = source.gamma - (1.0 - _invp(source.p))
    elif kind == "boundary_kernels":
        exponent = _invp(source.p) + _invp(source.q) + source.gamma - 1.0
    else:
        raise DomainError(f"unknown family kind {kind!r}")
    if exponent <= -1.0:
        raise DomainError(
            f"family kernel exponent {exponent:g} out of range for {source.label()}")
    for k in indices:
        truncation = 8 * 2**k
        a = 1.0 - 2.0**-k
        kernel = make_kernel_K(exponent, truncation=truncation)
        members.append(FamilyMember(f"a=1-2^-{k}", k * math.log(2.0),
                                    dilate(kernel, a)))
    return members


@dataclasses.dataclass(frozen=True)
class ProbeRow:
    label: str
    x: float
    source_norm: float
    target_norm: float
    ratio: float


@dataclasses.dataclass(frozen=True)
class ProbeResult:
    """Ratio curve of a family pushed through the operator, with its fit."""

    family: str
    diagnosis: str              # bounded | unbounded | inconclusive
    fit: ExponentFit
    rows: tuple


def probe(mu: RadialMeasure, beta: float, pair: SpacePair,
          family: str = "auto", ks=None,
          fit_window: int = PROBE_FIT_WINDOW) -> ProbeResult:
    """Fit the growth of target_norm(C f)/source_norm(f) along a family."""
    if family == "auto":
        family = "kernels" if math.isinf(pair.source.q) else "boundary_kernels"
    indices = list(DEFAULT_FAMILY_KS if ks is None else ks)
    members = test_family(family, indices, pair.source)
    params = CesaroParams(mu, beta)
    rows = []
    for member in members:
        src = mixed_norm(member.series, pair.source, block_nodes=8,
                         certify=False).value
        image = apply_cesaro(params, member.series)
        tgt = mixed_norm(image, pair.target, block_nodes=8, certify=False).value
        rows.append(ProbeRow(member.label, member.x, src, tgt,
                             tgt / src if src > 0.0 else math.inf))
    ratios = np.array([row.ratio for row in rows])
    grid = f"{family}, x in {rows[0].x:.3g}..{rows[-1].x:.3g}"
    if not np.all(np.isfinite(ratios)) or np.any(ratios <= 0.0):
        fit = ExponentFit(math.inf, 0.0, 0.0, grid)
        return ProbeResult(family, "unbounded", fit, tuple(rows))
    x = np.array([row.x for row in rows])[-fit_window:]
    y = np.log(ratios)[-fit_window:]
    if x.size < 4:
        raise DomainError("ratio fits need at least 4 family members")
    slope, intercept, resid = _fit_line(x, y)
    fit = ExponentFit(slope, intercept, resid, grid)
    if slope <= BOUNDED_SLOPE:
        diagnosis = "bounded"
    elif slope >= UNBOUNDED_SLOPE:
        diagnosis = "unbounded"
    else:
        diagnosis = "inconclusive"
    return ProbeResult(family, diagnosis, fit, tuple(rows))


@dataclasses.dataclass(frozen=True)
class BoundednessVerdict:
    """Prediction, empirical probe, and whether they agree.

    ``agreement`` is None when either side abstains (critical or uncovered
    prediction, inconclusive probe).
    """

    measure: str
    beta: float
    pair: SpacePair
    predicted: PredictedVerdict
    empirical: ProbeResult
    agreement: bool | None


def boundedness_verdict(mu: RadialMeasure, beta: float, pair: SpacePair,
                        family: str = "auto", ks=None) -> BoundednessVerdict:
    """Run predict and probe for one case and compare them."""
    s = mu.known_carleson_exponent
    if s is None:
        s = carleson_exponent(mu, method="tail").slope
    verdict = predict(
        s, beta, pair,
        moments=lambda: mu.moments(SEQUENCE_TRUNCATION),
        order_sharp=getattr(mu, "tail_order_sharp", None))
    empirical = probe(mu, beta, pair, family=family, ks=ks)
    if verdict.status in ("critical", "uncovered") or \
            empirical.diagnosis == "inconclusive":
        agreement = None
    else:
        agreement = verdict.status == empirical.diagnosis
    return BoundednessVerdict(mu.label, beta, pair, verdict, empirical, agreement)


# ---------------------------------------------------------------------------
# Cross-checks
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class MonomialProbeReport:
    """Lower-bound check: M_inf(C z^n, n/(n+1)) against (n+1)^beta mu_{2n}."""

    n_values: tuple
    means: tuple
    bounds: tuple
    ratios: tuple
    min_ratio: float
    median_ratio: float
    stable: bool


def monomial_lower_bound_probe(mu: RadialMeasure, beta: float,
                               n_values=(8, 16, 32, 64, 128)) -> MonomialProbeReport:
    params = CesaroParams(mu, beta)
    means, bounds, ratios = [], [], []
    for n in n_values:
        image = apply_cesaro(params, monomial(n, truncation=8 * n))
        mean = integral_mean(image, math.inf, n / (n + 1.0))
        bound = (n + 1.0) ** beta * float(mu.moments_at([2 * n])[0])
        means.append(mean)
        bounds.append(bound)
        ratios.append(mean / bound if bound > 0.0 else math.inf)
    finite = [r for r in ratios if math.isfinite(r)]
    min_ratio = min(finite) if finite else math.inf
    median_ratio = statistics.median(finite) if finite else math.inf
    return MonomialProbeReport(tuple(n_values), tuple(means), tuple(bounds),
                               tuple(ratios), min_ratio, median_ratio,
                               bool(min_ratio >= 0.5 * median_ratio))


@dataclasses.dataclass(frozen=True)
class MeanwiseReport:
    """Stability of M_p(C f, r) / M_p(D_alpha F_mu, r) under grid refinement."""

    alpha: float
    k_values: tuple
    labels: tuple
    max_ratio_coarse: tuple
    max_ratio_full: tuple
    growth_factors: tuple
    stable: bool


def mainprop_meanwise_check(mu: RadialMeasure, beta: float, gamma: float,
                            p: float, corpus=None,
                            k_values=tuple(range(2, 11))) -> MeanwiseReport:
    """Meanwise domination of the operator by a derivative of F_mu.

    Each corpus function is normalized in (p, inf, gamma); the ratio of p-means
    at r = 1-2^-k must top out at a constant that barely moves when the grid
    is pushed two dyadic levels deeper.
    """
    if p not in (2.0, math.inf):
        raise DomainError("meanwise check runs at p = 2 or p = inf")
    alpha = beta + gamma - (1.0 - _invp(p))
    truncation = 8 * 2 ** max(k_values)
    reference = d_alpha_f_mu(mu, alpha, truncation)
    if corpus is None:
        base = gamma - (1.0 - _invp(p))
        corpus = [("kernel", make_kernel_K(base, truncation=truncation)),
                  ("soft-kernel", make_kernel_K(base - 0.3, truncation=truncation)),
                  ("unit", PowerSeries(np.ones(1)))]
    params = CesaroParams(mu, beta)
    sup_space = MixedNormParams(p, math.inf, gamma)
    labels, coarse, full, factors = [], [], [], []
    for label, f in corpus:
        nrm = mixed_norm(f, sup_space).value
        image = apply_cesaro(params, f * (1.0 / nrm))
        ratios = []
        for k in k_values:
            r = 1.0 - 2.0**-k
            denom = integral_mean(reference, p, r)
            ratios.append(integral_mean(image, p, r) / denom)
        labels.append(label)
        coarse.append(max(ratios[:-2]))
        full.append(max(ratios))
        factors.append(full[-1] / coarse[-1])
    return MeanwiseReport(alpha, tuple(k_values), tuple(labels), tuple(coarse),
                          tuple(full), tuple(factors),
                          bool(max(factors) <= 1.25))


@dataclasses.dataclass(frozen=True)
class CrosscheckReport:
    """Membership of D_alpha F_mu vs summability of weighted moments."""

    alpha: float
    theta: float
    params: MixedNormParams
    classify: MembershipReport
    sequence: WeightedMomentResult
    consistent: bool | None


def fmu_membership_crosscheck(mu: RadialMeasure, alpha: float,
                              params: MixedNormParams,
                              k_max: int = 12) -> CrosscheckReport:
    """Two routes to 'D_alpha F_mu lies in H(p,q,gamma)' must agree.

    Route one classifies dyadic block contributions of the series itself;
    route two tests the weighted moment sequence ((n+1)^theta mu_n) for l^q
    summability with theta = alpha - gamma + 1/p' - 1/q.  Inconclusive block
    verdicts abstain.
    """
    theta = (alpha - params.gamma + (1.0 - _invp(params.p))
             - _invp(params.q))
    report = membership_classify(
        lambda truncation: d_alpha_f_mu(mu, alpha, truncation).coeffs,
        params, k_max=k_max)
    sequence = weighted_moment_lq(mu.moments(8 * 2**k_max), theta, params.q)
    if report.verdict == "inconclusive":
        consistent = None
    else:
        consistent = (report.verdict == "member") == sequence.converged
    return CrosscheckReport(alpha, theta, params, report, sequence, consistent)


# ---------------------------------------------------------------------------
# The released case grid
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class LabCase:
    """One released scan case; expected is the hand-derived verdict."""

    case_id: str
    measure: str
    beta: float
    source: tuple
    target: tuple
    expected: str
    k_min: int = 4
    k_max: int = 10

    def pair(self) -> SpacePair:
        return SpacePair(MixedNormParams(*self.source),
                         MixedNormParams(*self.target))


INF = math.inf

RELEASED_GRID = (
    # Equal (p, q) comparisons, integral scale.
    LabCase("R1-01", "power_carleson:1.5", 1.0, (2, 2, 1.0), (2, 2, 1.0), "bounded", 4, 11),
    LabCase("R1-02", "power_carleson:0.5", 1.0, (2, 2, 1.0), (2, 2, 1.0), "unbounded", 4, 11),
    LabCase("R1-03", "lebesgue", 0.5, (2, 2, 1.0), (2, 2, 1.0), "bounded", 4, 11),
    LabCase("R1-04", "lebesgue", 1.5, (2, 2, 1.0), (2, 2, 1.0), "unbounded", 4, 11),
    LabCase("R1-05", "dirac:0.5", 1.0, (2, 2, 1.0), (2, 2, 1.0), "bounded", 4, 11),
    LabCase("R1-06", "dyadic_atomic:0.5", 1.0, (2, 2, 1.0), (2, 2, 1.0), "unbounded", 4, 11),
    LabCase("R1-07", "dyadic_atomic:1.5", 1.0, (1, 1, 1.0), (1, 1, 1.0), "bounded", 4, 9),
    LabCase("R1-08", "power_carleson:0.6", 1.2, (1, 1, 0.8), (1, 1, 1.1), "unbounded", 4, 9),
    LabCase("R1-09", "beta_weight:2", 0.7, (3, 2, 1.0), (3, 2, 1.2), "bounded", 4, 9),
    LabCase("R1-10", "power_carleson:1", 2.0, (4, 2, 1.0), (4, 2, 1.5), "unbounded", 4, 9),
    LabCase("R1-11", "power_carleson:2.5", 2.0, (2, 2, 1.0), (2, 2, 1.0), "bounded", 4, 11),
    LabCase("R1-12", "lebesgue", 1.0, (2, 2, 0.5), (2, 2, 1.0), "bounded", 4, 11),
    # Sup scale on both sides.
    LabCase("R2-01", "power_carleson:1.5", 1.0, (2, INF, 1.0), (2, INF, 1.0), "bounded", 4, 11),
    LabCase("R2-02", "power_carleson:0.5", 1.0, (2, INF, 1.0), (2, INF, 1.0), "unbounded", 4, 11),
    LabCase("R2-03", "dirac:0.9", 2.0, (INF, INF, 1.0), (INF, INF, 1.5), "bounded", 4, 11),
    LabCase("R2-04", "lebesgue", 2.0, (INF, INF, 1.0), (INF, INF, 1.5), "unbounded", 4, 11),
    LabCase("R2-05", "dyadic_atomic:2", 1.0, (INF, INF, 1.0), (INF, INF, 1.0), "bounded", 4, 11),
    LabCase("R2-06", "dyadic_atomic:0.7", 1.2, (INF, INF, 1.0), (INF, INF, 1.0), "unbounded", 4, 11),
    LabCase("R2-07", "beta_weight:1.8", 1.0, (2, INF, 1.0), (1, INF, 1.0), "bounded", 4, 9),
    # ratio growth only clears the r = 0 plateau past k = 8 for this weak exponent
    LabCase("R2-08", "power_carleson:0.2", 1.0, (2, INF, 1.0), (1, INF, 1.0), "unbounded", 6, 12),
    LabCase("R2-09", "lebesgue", 0.5, (INF, INF, 1.0), (INF, INF, 1.0), "bounded", 4, 11),
    LabCase("R2-10", "lebesgue", 2.0, (2, INF, 1.0), (2, INF, 1.5), "unbounded", 4, 11),
    LabCase("R2-11", "dirac:0.5", 1.0, (2, INF, 1.0), (2, INF, 1.0), "bounded", 4, 11),
    LabCase("R2-12", "power_carleson:1.4", 3.0, (INF, INF, 2.0), (INF, INF, 3.0), "unbounded", 4, 11),
    # Integral scales with moving (p, q, gamma).
    LabCase("R3-01", "power_carleson:1", 1.0, (2, 1, 1.0), (2, 2, 1.5), "bounded", 4, 10),
    LabCase("R3-02", "power_carleson:0.2", 1.0, (2, 1, 1.0), (2, 2, 1.5), "unbounded", 4, 10),
    LabCase("R3-03", "lebesgue", 1.0, (3, 2, 1.0), (2, 3, 1.4), "bounded", 4, 9),
    LabCase("R3-04", "lebesgue", 2.0, (3, 2, 1.0), (2, 3, 1.4), "unbounded", 4, 9),
    LabCase("R3-05", "dirac:0.7", 0.8, (4, 2, 1.0), (4, 4, 1.3), "bounded", 4, 9),
    LabCase("R3-06", "dyadic_atomic:0.6", 1.1, (4, 2, 1.0), (4, 4, 1.2), "unbounded", 4, 9),
    LabCase("R3-07", "beta_weight:1.3", 0.9, (1, 1, 0.5), (1, 2, 0.9), "bounded", 4, 9),
    LabCase("R3-08", "power_carleson:0.4", 1.4, (2, 2, 0.8), (1, 2, 1.0), "unbounded", 4, 9),
    # Sup-to-integral sequence criterion at beta = 1.
    LabCase("R7-01", "beta_weight:1.5", 1.0, (2, INF, 1.0), (2, 2, 1.0), "bounded", 4, 11),
    LabCase("R7-02", "power_carleson:0.5", 1.0, (2, INF, 1.0), (2, 2, 1.0), "unbounded", 4, 11),
    LabCase("R7-03", "dirac:0.6", 1.0, (2, INF, 1.0), (2, 1, 1.0), "bounded", 4, 11),
    LabCase("R7-04", "dyadic_atomic:0.5", 1.0, (2, INF, 1.0), (2, 1, 1.0), "unbounded", 4, 11),
    LabCase("R7-05", "beta_weight:2.5", 1.0, (4, INF, 1.2), (4, 2, 1.2), "bounded", 4, 9),
    LabCase("R7-06", "power_carleson:0.6", 1.0, (4, INF, 1.2), (4, 2, 1.2), "unbounded", 4, 9),
    LabCase("R7-07", "beta_weight:1.4", 1.0, (INF, INF, 1.0), (INF, 2, 1.0), "bounded", 4, 11),
    LabCase("R7-08", "dyadic_atomic:0.7", 1.0, (INF, INF, 1.0), (INF, 4, 1.0), "unbounded", 4, 11),
)


def released_grid():
    """The frozen scan grid; every case sits >= 0.25 away from criticality."""
    return RELEASED_GRID


def evaluate_case(case: LabCase) -> BoundednessVerdict:
    """Run one released case end to end."""
    mu = parse_measure(case.measure)
    return boundedness_verdict(mu, case.beta, case.pair(),
                               ks=range(case.k_min, case.k_max + 1))
