"""Acceptance suite: nine end-to-end criteria, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; each test also enforces its tolerance (and, where stated, its time
budget) with plain asserts.
"""
import math
import time

import numpy as np
from scipy.special import gammaln

from cesarolab.lab import (INF, SpacePair, fmu_membership_crosscheck, predict,
                           released_grid)
from cesarolab.measures import carleson_exponent, zoo
from cesarolab.norms import (MixedNormParams, growth_exponent, integral_mean,
                             membership_classify, mixed_norm)
from cesarolab.operators import (IDENTITY_NAMES, CesaroParams, apply_cesaro,
                                 apply_cesaro_integral_at, verify_identity)
from cesarolab.reports import ScanConfig, run_scan
from cesarolab.series import PowerSeries, cauchy_product, hadamard, make_kernel_K

from conftest import polynomial_corpus


def _line(num: int, passed: bool, detail: str) -> None:
    print(f"\ncriterion {num}: {'PASS' if passed else 'FAIL'} ({detail})")
    assert passed, f"criterion {num}: {detail}"


def _pad(f: PowerSeries, n: int) -> PowerSeries:
    out = np.zeros(n + 1)
    out[: f.coeffs.size] = f.coeffs
    return PowerSeries(out)


def test_criterion_1_identity_suite():
    measures = (zoo("lebesgue"), zoo("beta_weight", 0.5), zoo("beta_weight", 2.0),
                zoo("dirac", 0.5), zoo("dyadic_atomic", 1.0))
    corpus = polynomial_corpus(20, 256, seed=2026)
    start = time.perf_counter()
    worst = 0.0
    for mu in measures:
        for beta in (0.5, 1.0, 2.5):
            for f in corpus:
                for name in IDENTITY_NAMES:
                    report = verify_identity(name, mu, beta, f, tol=1e-11)
                    worst = max(worst, report.deviation)
    elapsed = time.perf_counter() - start
    _line(1, worst <= 1e-11 and elapsed <= 10.0,
          f"max deviation {worst:.3g} over 2100 checks, {elapsed:.1f}s")


def test_criterion_2_dual_path_agreement():
    specs = (zoo("lebesgue"), zoo("beta_weight", 1.5), zoo("power_carleson", 1.0),
             zoo("dirac", 0.5), zoo("dyadic_atomic", 1.0),
             zoo("log_perturbed", 1.0, 1.0))
    f = _pad(polynomial_corpus(1, 48, seed=7)[0], 2048)
    radii = [round(0.1 * j, 1) for j in range(1, 10)]
    start = time.perf_counter()
    worst = 0.0
    for mu in specs:
        for beta in (0.5, 1.0, 2.0):
            params = CesaroParams(mu, beta)
            image = apply_cesaro(params, f)
            for z in radii:
                direct = apply_cesaro_integral_at(params, f, z)
                err = abs(image(z) - direct) / max(1.0, abs(direct))
                worst = max(worst, err)
    elapsed = time.perf_counter() - start
    _line(2, worst <= 1e-8 and elapsed <= 30.0,
          f"max relative gap {worst:.3g} over 6 measures x 3 betas x 9 radii, "
          f"{elapsed:.1f}s")


def test_criterion_3_moment_closed_forms():
    n = np.arange(4097, dtype=float)
    worst = 0.0
    for beta in (0.5, 1.0, 2.0, 3.7):
        got = zoo("beta_weight", beta).moments(4096).values
        want = np.exp(gammaln(n + 1.0) + gammaln(beta + 1.0)
                      - gammaln(n + beta + 1.0))
        worst = max(worst, float(np.max(np.abs(got - want) / want)))
    _line(3, worst <= 1e-10, f"max relative moment error {worst:.3g} up to n=4096")


def test_criterion_4_carleson_fits_agree():
    worst = 0.0
    for family in ("power_carleson", "dyadic_atomic"):
        for s in (0.5, 1.0, 1.5, 2.5):
            mu = zoo(family, s)
            fits = [carleson_exponent(mu, method=m).slope
                    for m in ("tail", "moments", "poisson")]
            spread = max(fits) - min(fits)
            worst = max(worst, spread)
    _line(4, worst <= 0.05, f"max pairwise fit spread {worst:.3g}")


KERNEL_MEMBERSHIP_GRID = (
    # (beta, p, q, gamma, verdict); member iff beta < gamma + 1/p,
    # with equality decided by q (sup scale keeps the endpoint).
    (0.5, 2, 2, 1.0, "member"),
    (1.0, 2, 2, 1.0, "member"),
    (2.0, 2, 2, 1.0, "non-member"),
    (1.75, 2, 2, 1.0, "non-member"),
    (1.5, 2, 2, 1.0, "non-member"),      # critical, q < inf
    (1.5, 2, INF, 1.0, "member"),        # critical, q = inf
    (1.0, INF, INF, 1.5, "member"),
    (2.0, INF, INF, 1.5, "non-member"),
    (0.5, 1, 1, 0.5, "member"),
    (2.0, 1, 1, 0.5, "non-member"),
    (1.0, 4, 2, 0.5, "non-member"),
    (0.5, 4, 2, 0.5, "member"),
    (0.5, 2, 4, 0.25, "member"),
    (1.0, 2, 4, 0.25, "non-member"),
    (3.0, 2, 2, 2.0, "non-member"),
    (2.0, 2, 2, 2.0, "member"),
    (0.75, INF, 2, 0.5, "non-member"),
    (0.25, INF, 2, 0.5, "member"),
    (1.25, 1, INF, 1.0, "member"),
    (2.5, 1, INF, 1.0, "non-member"),
    (0.5, INF, INF, 0.25, "non-member"),
    (1.75, 3, 3, 1.0, "non-member"),
    (1.0, 3, 3, 1.0, "member"),
    (0.75, 2, 2, 0.5, "member"),
)


def test_criterion_5_kernel_membership_truth_table():
    misses = []
    for beta, p, q, gamma, want in KERNEL_MEMBERSHIP_GRID:
        rule = lambda n, b=beta: make_kernel_K(b - 1.0, truncation=n).coeffs  # noqa: E731
        report = membership_classify(rule, MixedNormParams(p, q, gamma))
        if report.verdict != want:
            misses.append((beta, p, q, gamma, want, report.verdict))
    _line(5, not misses,
          f"{24 - len(misses)}/24 verdicts correct" +
          (f", misses: {misses}" if misses else ""))


def test_criterion_6_growth_exponents():
    worst = 0.0
    for beta, p in ((1.5, 2.0), (2.0, 1.0), (1.0, INF), (0.75, 4.0)):
        fit = growth_exponent(make_kernel_K(beta - 1.0, truncation=2**14), p)
        want = beta - (0.0 if math.isinf(p) else 1.0 / p)
        worst = max(worst, abs(fit.slope - want))
    _line(6, worst <= 0.05, f"max growth-exponent error {worst:.3g}")


def test_criterion_7_boundedness_grid():
    start = time.perf_counter()
    bundle = run_scan(ScanConfig())
    elapsed = time.perf_counter() - start
    summary = bundle["summary"]
    total = len(released_grid())
    expected_hits = sum(1 for r in bundle["records"]
                        if r.get("predicted") == r.get("expected"))
    passed = (summary["cases"] == total
              and summary["agreements"] == total
              and expected_hits == total
              and summary["clean"] and elapsed <= 300.0)
    _line(7, passed,
          f"{summary['agreements']}/{total} probe agreements, "
          f"{expected_hits}/{total} expected verdicts, {elapsed:.1f}s")


def test_criterion_8_sup_to_integral_consistency():
    verdicts = {}
    ok = True
    for spec, want in (("lebesgue", "unbounded"), ("beta_weight:1.2", "bounded")):
        mu = zoo(*([spec] if ":" not in spec else
                   [spec.split(":")[0], float(spec.split(":")[1])]))
        for p in (2.0, INF):
            pair = SpacePair(MixedNormParams(p, INF, 1.0),
                             MixedNormParams(p, 2.0, 1.0))
            verdict = predict(mu.known_carleson_exponent, 1.0, pair,
                              moments=mu.moments(65536))
            invp = 0.0 if math.isinf(p) else 1.0 / p
            alpha = 1.0 + 1.0 - (1.0 - invp)
            cross = fmu_membership_crosscheck(mu, alpha,
                                              MixedNormParams(p, 2.0, 1.0))
            ok = ok and verdict.rule in ("R6", "R7")
            ok = ok and verdict.status == want
            ok = ok and cross.consistent is True
            ok = ok and ((cross.classify.verdict == "member")
                         == (verdict.status == "bounded"))
            verdicts[(spec, p)] = (verdict.status, cross.classify.verdict)
    _line(8, ok, f"rule verdicts and membership crosschecks: {verdicts}")


def test_criterion_9_inequality_suite(corpus50):
    slack = 1.0 + 1e-12
    violations = 0
    total = 0
    for f in corpus50:
        for g in corpus50[:3]:
            fg = cauchy_product(_pad(f, 96), _pad(g, 96))
            hg = hadamard(f, g)
            for (p1, p2, p3) in ((2, 2, 1), (4, 4, 2), (INF, 3, 3)):
                for r in (0.3, 0.8):
                    total += 1
                    if integral_mean(fg, p3, r) > slack * (
                            integral_mean(f, p1, r) * integral_mean(g, p2, r)):
                        violations += 1
            for (p1, p2, p3) in ((1, 1, 1), (2, 2, INF), (1, 2, 2)):
                for r in (0.3, 0.8):
                    total += 1
                    if integral_mean(hg, p3, r * r) > slack * (
                            integral_mean(f, p1, r) * integral_mean(g, p2, r)):
                        violations += 1
        # monotonicity in r and in p
        total += 2
        if integral_mean(f, 2, 0.3) > slack * integral_mean(f, 2, 0.7):
            violations += 1
        means = [integral_mean(f, p, 0.6) for p in (1, 2, 4, INF)]
        if any(means[i] > slack * means[i + 1] for i in range(3)):
            violations += 1
        # constant-1 embeddings in gamma and p
        total += 2
        if mixed_norm(f, MixedNormParams(2, 2, 1.5)).value > slack * \
                mixed_norm(f, MixedNormParams(2, 2, 1.0)).value:
            violations += 1
        if mixed_norm(f, MixedNormParams(1, 2, 1.0)).value > slack * \
                mixed_norm(f, MixedNormParams(4, 2, 1.0)).value:
            violations += 1
    _line(9, violations == 0, f"{violations}/{total} inequality violations")
