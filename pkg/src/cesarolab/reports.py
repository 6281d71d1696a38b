"""Report bundles: canonical JSON/CSV emission and the scan orchestrator.

Every JSON document carries the versioned schema tag, floats print at 17
significant digits, keys are emitted in sorted order, and records sort by
case identifier, so reruns are diff-clean.  Non-finite floats serialize as
the strings "inf", "-inf", "nan".  The bundle's content hash covers the
canonical text with the timestamp and the hash itself excluded, which makes
replays byte-comparable.
"""
from __future__ import annotations

import dataclasses
import datetime
import hashlib
import json
import math
import os

from .errors import DomainError
from .lab import (RELEASED_GRID, BoundednessVerdict, LabCase, evaluate_case)
from .measures import MomentSequence
from .operators import IdentityReport

SCHEMA = "cesaro-lab/1"


def format_float(x: float) -> str:
    """17-significant-digit decimal, enough for exact float round-trips."""
    return format(float(x), ".17g")


def to_jsonable(value):
    """Pure dict/list/str/int/float tree; non-finite floats become strings."""
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return to_jsonable(dataclasses.asdict(value))
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if hasattr(value, "item") and not hasattr(value, "__len__"):
        value = value.item()
        if isinstance(value, (bool, int, str)):
            return value
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    raise DomainError(f"cannot serialize {type(value).__name__} into a report")


def canonical_json(value, _top: bool = True) -> str:
    """Deterministic JSON text: sorted keys, %.17g floats, no whitespace drift."""
    if _top:
        value = to_jsonable(value)
    if value is None or isinstance(value, (bool, str, int)):
        return json.dumps(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, list):
        return "[" + ",".join(canonical_json(v, False) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ",".join(
            json.dumps(k) + ":" + canonical_json(value[k], False)
            for k in sorted(value)) + "}"
    raise DomainError(f"cannot serialize {type(value).__name__} into a report")


def content_hash(document: dict, volatile=("generated_at", "content_hash")) -> str:
    core = {k: v for k, v in document.items() if k not in volatile}
    return hashlib.sha256(canonical_json(core).encode()).hexdigest()


# ---------------------------------------------------------------------------
# Scan orchestration
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class ScanConfig:
    """What to scan and where to put it.

    With ``measures``/``betas``/``pairs`` unset the frozen released grid runs;
    set them to scan a cross product instead.  ``case_ids`` filters either
    way.
    """

    measures: tuple = ()
    betas: tuple = ()
    pairs: tuple = ()           # ((p1,q1,g1), (p2,q2,g2)) entries
    case_ids: tuple = ()
    k_min: int = 4
    k_max: int = 10
    seed: int = 0
    out_dir: str = "."
    fmt: str = "json"           # json | csv | both
    figures: bool = False

    def cases(self):
        if self.measures or self.betas or self.pairs:
            if not (self.measures and self.betas and self.pairs):
                raise DomainError(
                    "custom scans need measures, betas, and pairs together")
            built = []
            i = 0
            for spec in self.measures:
                for beta in self.betas:
                    for source, target in self.pairs:
                        i += 1
                        built.append(LabCase(f"S-{i:03d}", spec, float(beta),
                                             tuple(source), tuple(target),
                                             expected="", k_min=self.k_min,
                                             k_max=self.k_max))
            grid = tuple(built)
        else:
            grid = RELEASED_GRID
        if self.case_ids:
            wanted = set(self.case_ids)
            grid = tuple(c for c in grid if c.case_id in wanted)
            if not grid:
                raise DomainError("no scan cases match the requested ids")
        return grid


def verdict_record(case: LabCase, verdict: BoundednessVerdict) -> dict:
    rows = [[row.label, row.x, row.source_norm, row.target_norm, row.ratio]
            for row in verdict.empirical.rows]
    return {
        "case_id": case.case_id,
        "measure": verdict.measure,
        "beta": verdict.beta,
        "source": list(case.source),
        "target": list(case.target),
        "predicted": verdict.predicted.status,
        "predicted_by": verdict.predicted.rule,
        "s_required": verdict.predicted.s_required,
        "detail": verdict.predicted.detail,
        "family": verdict.empirical.family,
        "slope": verdict.empirical.fit.slope,
        "diagnosis": verdict.empirical.diagnosis,
        "agreement": verdict.agreement,
        "expected": case.expected or None,
        "rows": rows,
    }


def run_scan(config: ScanConfig = ScanConfig()) -> dict:
    """One verdict record per case; failures recorded, never fatal."""
    records = []
    for case in config.cases():
        try:
            records.append(verdict_record(case, evaluate_case(case)))
        except Exception as exc:  # scan must survive bad cases
            records.append({"case_id": case.case_id, "measure": case.measure,
                            "beta": case.beta, "source": list(case.source),
                            "target": list(case.target),
                            "error": f"{type(exc).__name__}: {exc}"})
    records.sort(key=lambda r: r["case_id"])
    agreements = sum(1 for r in records if r.get("agreement") is True)
    disagreements = sum(1 for r in records if r.get("agreement") is False)
    abstentions = sum(1 for r in records
                      if "error" not in r and r.get("agreement") is None)
    errors = sum(1 for r in records if "error" in r)
    bundle = {
        "schema": SCHEMA,
        "kind": "boundedness-scan",
        "seed": config.seed,
        "generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "records": to_jsonable(records),
        "summary": {
            "cases": len(records),
            "agreements": agreements,
            "disagreements": disagreements,
            "abstentions": abstentions,
            "errors": errors,
            "clean": disagreements == 0 and errors == 0,
        },
    }
    bundle["content_hash"] = content_hash(bundle)
    return bundle


# ---------------------------------------------------------------------------
# Delimited renderings
# ---------------------------------------------------------------------------

def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    text = str(value)
    # error messages can carry commas; quote so columns stay aligned
    if any(c in text for c in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def csv_text(header, rows) -> str:
    lines = [",".join(header)]
    lines += [",".join(_cell(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def moments_csv(moments: MomentSequence) -> str:
    return csv_text(("n", "mu_n"),
                    [(n, v) for n, v in enumerate(moments.values)])


def probe_csv(record_or_result) -> str:
    """Ratio table; accepts a scan record or a ProbeResult."""
    if isinstance(record_or_result, dict):
        rows = record_or_result["rows"]
        rows = [(r[0], r[2], r[3], r[4]) for r in rows]
    else:
        rows = [(row.label, row.source_norm, row.target_norm, row.ratio)
                for row in record_or_result.rows]
    return csv_text(("index", "source_norm", "target_norm", "ratio"), rows)


def blocks_csv(block_k, block_phi, verdict: str | None = None) -> str:
    if verdict is None:
        return csv_text(("k", "phi"), list(zip(block_k, block_phi)))
    return csv_text(("k", "phi", "verdict"),
                    [(k, phi, verdict) for k, phi in zip(block_k, block_phi)])


def scan_csv(bundle: dict) -> str:
    header = ("case_id", "measure", "beta", "p1", "q1", "gamma1", "p2", "q2",
              "gamma2", "predicted", "predicted_by", "s_required", "slope",
              "diagnosis", "agreement", "error")
    rows = []
    for r in bundle["records"]:
        rows.append((r["case_id"], r["measure"], r["beta"],
                     *r["source"], *r["target"],
                     r.get("predicted"), r.get("predicted_by"),
                     r.get("s_required"), r.get("slope"), r.get("diagnosis"),
                     r.get("agreement"), r.get("error")))
    return csv_text(header, rows)


def identity_suite_report(reports) -> list:
    """JSON-ready identity records, sorted by (identity, measure)."""
    records = [{
        "identity": rep.identity,
        "measure": rep.measure,
        "beta": rep.beta,
        "deviation": rep.deviation,
        "tolerance": rep.tolerance,
        "pass": rep.passed,
        "detail": rep.detail,
    } for rep in reports]
    records.sort(key=lambda r: (r["identity"], r["measure"]))
    return to_jsonable(records)


def write_text(path: str, text: str) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w") as fh:
        fh.write(text)
    return path


def emit(bundle: dict, out_dir: str = ".", fmt: str = "json",
         figures: bool = False) -> list:
    """Write the scan bundle; returns the created paths."""
    if fmt not in ("json", "csv", "both"):
        raise DomainError(f"unknown output format {fmt!r}")
    paths = []
    if fmt in ("json", "both"):
        paths.append(write_text(os.path.join(out_dir, "scan.json"),
                                canonical_json(bundle) + "\n"))
    if fmt in ("csv", "both"):
        paths.append(write_text(os.path.join(out_dir, "scan.csv"),
                                scan_csv(bundle)))
    if figures:
        from . import figures as figmod
        fig_dir = os.path.join(out_dir, "figures")
        paths.append(figmod.scan_summary_figure(bundle, os.path.join(
            fig_dir, "scan_summary.png")))
        for record in bundle["records"]:
            if "rows" in record:
                paths.append(figmod.ratio_figure(record, os.path.join(
                    fig_dir, f"ratio_{record['case_id']}.png")))
    return paths
