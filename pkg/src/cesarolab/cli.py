"""Command line surface.

Subcommands: moments, carleson-fit, apply, norm, classify, verify, probe,
scan.  Exit codes: 0 success, 1 case failures (failed identities, errored or
disagreeing scan cases), 2 usage errors.  Output goes to --out when given,
otherwise stdout; --format selects json, csv, or both where a command
supports both renderings.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import reports
from .errors import DomainError
from .lab import (LabCase, SpacePair, boundedness_verdict, released_grid)
from .measures import carleson_exponent, parse_measure
from .norms import MixedNormParams, membership_classify, mixed_norm
from .operators import (IDENTITY_NAMES, CesaroParams, IdentityReport,
                        apply_cesaro, d_alpha_f_mu, verify_identity)
from .series import PowerSeries, make_kernel_K, monomial


def _parse_extended(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    return float(text)


def _space_tuple(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise DomainError(f"space spec must be 'p,q,gamma', got {text!r}")
    return tuple(_parse_extended(p) for p in parts)


def _load_series(args) -> PowerSeries:
    chosen = [name for name in ("input", "kernel", "monomial", "derivative")
              if getattr(args, name, None) is not None]
    if len(chosen) != 1:
        raise DomainError(
            "supply exactly one of --input, --kernel, --monomial, "
            "--measure-derivative")
    if args.input is not None:
        with open(args.input) as fh:
            text = fh.read()
        if args.input.endswith(".json"):
            return PowerSeries.from_json_array(text)
        return PowerSeries.from_csv(text)
    if args.kernel is not None:
        return make_kernel_K(args.kernel, truncation=args.truncation)
    if args.monomial is not None:
        return monomial(args.monomial, truncation=args.truncation)
    spec, _, alpha = args.derivative.rpartition("@")
    if not spec:
        raise DomainError("measure derivative spec is 'measure@alpha'")
    return d_alpha_f_mu(parse_measure(spec), float(alpha), args.truncation)


def _write(args, text: str, default_name: str) -> None:
    if args.out:
        path = args.out
        # two formats cannot share one file, so "both" forces a directory
        if getattr(args, "format", None) == "both" and not os.path.isfile(path):
            os.makedirs(path, exist_ok=True)
        if os.path.isdir(path) or path.endswith(os.sep):
            path = os.path.join(path, default_name)
        reports.write_text(path, text)
        print(path)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json_text(payload) -> str:
    return reports.canonical_json(payload) + "\n"


# ---------------------------------------------------------------------------
# Subcommand bodies
# ---------------------------------------------------------------------------

def _cmd_moments(args) -> int:
    mu = parse_measure(args.measure)
    moments = mu.moments(args.truncation)
    if args.format == "csv":
        _write(args, reports.moments_csv(moments), "moments.csv")
    else:
        payload = {"schema": reports.SCHEMA, "kind": "moments",
                   "measure": mu.label, "method": moments.method,
                   "values": list(moments.values)}
        _write(args, _json_text(payload), "moments.json")
    return 0


def _cmd_carleson_fit(args) -> int:
    mu = parse_measure(args.measure)
    fit = carleson_exponent(mu, method=args.method,
                            probe_exponent=args.sigma)
    payload = {"schema": reports.SCHEMA, "kind": "carleson-fit",
               "measure": mu.label, "method": args.method,
               "slope": fit.slope, "intercept": fit.intercept,
               "residual": fit.residual, "grid": fit.grid,
               "infinite": fit.infinite}
    _write(args, _json_text(payload), "carleson_fit.json")
    return 0


def _cmd_apply(args) -> int:
    mu = parse_measure(args.measure)
    f = _load_series(args)
    image = apply_cesaro(CesaroParams(mu, args.beta), f)
    if args.at:
        zs = [float(z) for z in args.at.split(",")]
        payload = {"schema": reports.SCHEMA, "kind": "apply-values",
                   "measure": mu.label, "beta": args.beta,
                   "values": [{"z": z, "value": float(image(z))} for z in zs]}
        _write(args, _json_text(payload), "apply.json")
    elif args.format == "json":
        _write(args, image.to_json_array() + "\n", "apply.json")
    else:
        _write(args, image.to_csv(), "apply.csv")
    return 0


def _cmd_norm(args) -> int:
    f = _load_series(args)
    params = MixedNormParams(_parse_extended(args.p), _parse_extended(args.q),
                             args.gamma)
    result = mixed_norm(f, params)
    payload = {"schema": reports.SCHEMA, "kind": "norm",
               "space": list((params.p, params.q, params.gamma)),
               "value": result.value, "converged": result.converged,
               "error_estimate": result.error_estimate,
               "block_k": list(result.block_k),
               "block_phi": list(result.block_phi)}
    _write(args, _json_text(payload), "norm.json")
    return 0


def _cmd_classify(args) -> int:
    params = MixedNormParams(_parse_extended(args.p), _parse_extended(args.q),
                             args.gamma)
    if args.kernel is not None:
        alpha = args.kernel
        rule = lambda n: make_kernel_K(alpha, truncation=n).coeffs  # noqa: E731
        label = f"kernel:{alpha:g}"
    elif args.derivative is not None:
        spec, _, alpha_text = args.derivative.rpartition("@")
        if not spec:
            raise DomainError("measure derivative spec is 'measure@alpha'")
        mu, alpha = parse_measure(spec), float(alpha_text)
        rule = lambda n: d_alpha_f_mu(mu, alpha, n).coeffs  # noqa: E731
        label = f"{mu.label}@{alpha:g}"
    else:
        raise DomainError(
            "classify needs --kernel or --measure-derivative (a rule that "
            "extends to any truncation)")
    report = membership_classify(rule, params, k_min=args.kmin, k_max=args.kmax)
    if args.format == "csv":
        _write(args, reports.blocks_csv(report.block_k, report.block_phi,
                                        report.verdict), "classify.csv")
    else:
        payload = {"schema": reports.SCHEMA, "kind": "classify",
                   "series": label,
                   "space": list((params.p, params.q, params.gamma)),
                   "verdict": report.verdict,
                   "block_k": list(report.block_k),
                   "block_phi": list(report.block_phi),
                   "ratios": list(report.ratios)}
        _write(args, _json_text(payload), "classify.json")
    return 0


def _corpus_series(truncation: int, seed: int) -> PowerSeries:
    rng = np.random.default_rng(seed)
    return PowerSeries(rng.uniform(-1.0, 1.0, truncation + 1))


def _cmd_verify(args) -> int:
    mu = parse_measure(args.measure)
    f = _corpus_series(min(args.truncation, 256), args.seed)
    names = IDENTITY_NAMES if args.identity == "all" else (args.identity,)
    runs: list[IdentityReport] = []
    for name in names:
        runs.append(verify_identity(name, mu, args.beta, f, tol=args.tol))
    payload = reports.identity_suite_report(runs)
    _write(args, _json_text(payload), "verify.json")
    return 0 if all(r.passed for r in runs) else 1


def _cmd_probe(args) -> int:
    mu = parse_measure(args.measure)
    source = _space_tuple(args.source)
    target = _space_tuple(args.target)
    pair = SpacePair(MixedNormParams(*source), MixedNormParams(*target))
    verdict = boundedness_verdict(mu, args.beta, pair, family=args.family,
                                  ks=range(args.kmin, args.kmax + 1))
    case = LabCase("probe", args.measure, args.beta, source, target, "",
                   args.kmin, args.kmax)
    record = reports.verdict_record(case, verdict)
    wrote_csv = False
    if args.format in ("csv", "both"):
        _write(args, reports.probe_csv(record), "ratios.csv")
        wrote_csv = True
    if args.format in ("json", "both") or not wrote_csv:
        _write(args, _json_text(reports.to_jsonable(record)), "probe.json")
    if args.figures:
        from . import figures
        base = args.out if args.out and os.path.isdir(args.out) else "."
        print(figures.ratio_figure(reports.to_jsonable(record),
                                   os.path.join(base, "probe_ratio.png")))
    return 0


def _cmd_scan(args) -> int:
    settings = {}
    if args.config:
        with open(args.config) as fh:
            settings.update(json.load(fh))
    if args.cases:
        settings["case_ids"] = tuple(args.cases.split(","))
    if args.out:
        settings["out_dir"] = args.out
    if args.format:
        settings["fmt"] = args.format
    if args.figures:
        settings["figures"] = True
    if args.seed is not None:
        settings["seed"] = args.seed
    settings.pop("schema", None)
    for key in ("measures", "betas", "case_ids"):
        if key in settings:
            settings[key] = tuple(settings[key])
    if "pairs" in settings:
        settings["pairs"] = tuple(
            (tuple(src), tuple(tgt)) for src, tgt in settings["pairs"])
    config = reports.ScanConfig(**settings)
    bundle = reports.run_scan(config)
    paths = reports.emit(bundle, out_dir=config.out_dir, fmt=config.fmt,
                         figures=config.figures)
    summary = bundle["summary"]
    print(f"scan: {summary['cases']} cases, {summary['agreements']} agree, "
          f"{summary['disagreements']} disagree, "
          f"{summary['abstentions']} abstain, {summary['errors']} errors")
    for path in paths:
        print(path)
    return 0 if summary["clean"] else 1


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--truncation", type=int, default=1024,
                        help="series truncation degree (default 1024)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for generated test inputs")
    common.add_argument("--out", help="output file or directory")
    common.add_argument("--format", choices=("json", "csv", "both"),
                        default="json", help="output rendering")
    common.add_argument("--figures", action="store_true",
                        help="also render figures next to the output")

    series_opts = argparse.ArgumentParser(add_help=False)
    series_opts.add_argument("--input", help="series file (.csv 'n,coeff' or .json array)")
    series_opts.add_argument("--kernel", type=float,
                             help="use the kernel with this exponent")
    series_opts.add_argument("--monomial", type=int, help="use z^N")
    series_opts.add_argument("--measure-derivative", dest="derivative",
                             help="use the alpha-derivative of a measure's "
                                  "generating series, as 'measure@alpha'")

    parser = argparse.ArgumentParser(
        prog="cesaro-lab",
        description="Averaging operators on power series: norms, Carleson "
                    "fits, and boundedness scans.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", parents=[common],
                       help="moment sequence of a measure")
    p.add_argument("--measure", required=True)
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("carleson-fit", parents=[common],
                       help="fit the Carleson exponent of a measure")
    p.add_argument("--measure", required=True)
    p.add_argument("--method", choices=("tail", "moments", "poisson"),
                   default="tail")
    p.add_argument("--sigma", type=float, default=None,
                   help="probe exponent for the poisson method")
    p.set_defaults(func=_cmd_carleson_fit)

    p = sub.add_parser("apply", parents=[common, series_opts],
                       help="apply the averaging operator to a series")
    p.add_argument("--measure", required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--at", help="evaluate the image at these radii, e.g. '0.1,0.5'")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("norm", parents=[common, series_opts],
                       help="mixed norm of a series")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.set_defaults(func=_cmd_norm)

    p = sub.add_parser("classify", parents=[common, series_opts],
                       help="membership verdict from dyadic block contributions")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--kmin", type=int, default=2)
    p.add_argument("--kmax", type=int, default=12)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", parents=[common],
                       help="run the operator identity suite")
    p.add_argument("--measure", required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--identity", default="all",
                   choices=("all",) + IDENTITY_NAMES)
    p.add_argument("--tol", type=float, default=1e-11)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("probe", parents=[common],
                       help="push a test family through the operator")
    p.add_argument("--measure", required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--source", required=True, help="'p,q,gamma'")
    p.add_argument("--target", required=True, help="'p,q,gamma'")
    p.add_argument("--family", default="auto",
                   choices=("auto", "kernels", "boundary_kernels", "monomials"))
    p.add_argument("--kmin", type=int, default=4)
    p.add_argument("--kmax", type=int, default=10)
    p.set_defaults(func=_cmd_probe)

    p = sub.add_parser("scan", parents=[common],
                       help="run the released boundedness grid (or a config)")
    p.add_argument("--config", help="JSON scan configuration; flags override it")
    p.add_argument("--cases", help="comma-separated case ids to keep")
    # None means "not given": the config file's value survives.
    p.set_defaults(func=_cmd_scan, format=None, seed=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # computation failed mid-run
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
