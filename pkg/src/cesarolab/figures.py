"""Matplotlib renderings of probe curves, block tables, and scan summaries.

All functions take plain data (scan records, arrays), render to a file with
the Agg backend, and return the path written.
"""
from __future__ import annotations

import math
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .lab import BOUNDED_SLOPE, UNBOUNDED_SLOPE  # noqa: E402


def _prepare(path: str) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    return path


def ratio_figure(record: dict, path: str) -> str:
    """Log-ratio curve of one probe with its fitted growth line."""
    rows = record["rows"]
    x = np.array([row[1] for row in rows], dtype=float)
    ratios = np.array([row[4] if not isinstance(row[4], str) else math.inf
                       for row in rows], dtype=float)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    finite = np.isfinite(ratios) & (ratios > 0)
    ax.plot(x[finite], np.log(ratios[finite]), "o-", label="log ratio")
    slope = record.get("slope")
    if isinstance(slope, (int, float)) and math.isfinite(slope) and finite.sum() >= 2:
        y0 = np.log(ratios[finite])[-1]
        ax.plot(x[finite], y0 + slope * (x[finite] - x[finite][-1]), "--",
                label=f"fit slope {slope:.3f}")
    ax.set_xlabel("divergence coordinate")
    ax.set_ylabel("log(target norm / source norm)")
    ax.set_title(f"{record['case_id']}: {record['measure']}, "
                 f"beta={record['beta']:g} [{record.get('diagnosis', '?')}]")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(_prepare(path), dpi=110)
    plt.close(fig)
    return path


def scan_summary_figure(bundle: dict, path: str) -> str:
    """Fitted slopes across the scan, colored by the predicted verdict."""
    records = [r for r in bundle["records"] if "slope" in r]
    fig, ax = plt.subplots(figsize=(max(7.0, 0.22 * len(records)), 4.5))
    colors = {"bounded": "tab:blue", "unbounded": "tab:red",
              "critical": "tab:orange", "uncovered": "tab:gray"}
    for i, r in enumerate(records):
        slope = r["slope"]
        if isinstance(slope, str):
            slope = 1.0 if slope == "inf" else 0.0
        marker = "o" if r.get("agreement") is True else "x"
        ax.plot(i, slope, marker, color=colors.get(r["predicted"], "black"))
    ax.axhline(BOUNDED_SLOPE, color="tab:blue", ls=":", lw=1,
               label=f"bounded below {BOUNDED_SLOPE:g}")
    ax.axhline(UNBOUNDED_SLOPE, color="tab:red", ls=":", lw=1,
               label=f"unbounded above {UNBOUNDED_SLOPE:g}")
    ax.set_xticks(range(len(records)))
    ax.set_xticklabels([r["case_id"] for r in records], rotation=90, fontsize=7)
    ax.set_ylabel("ratio growth slope")
    ax.set_title("probe slopes vs predictions "
                 f"({bundle['summary']['agreements']} agreements, "
                 f"{bundle['summary']['disagreements']} disagreements)")
    ax.legend(loc="upper left", fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(_prepare(path), dpi=110)
    plt.close(fig)
    return path


def blocks_figure(block_k, block_phi, path: str, title: str = "block contributions") -> str:
    """Dyadic block contributions on a log scale."""
    ks = np.asarray(list(block_k), dtype=float)
    phis = np.asarray(list(block_phi), dtype=float)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    positive = phis > 0
    ax.semilogy(ks[positive], phis[positive], "s-")
    ax.set_xlabel("block k  (1-r in [2^-(k+1), 2^-k])")
    ax.set_ylabel("Phi(k)")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(_prepare(path), dpi=110)
    plt.close(fig)
    return path


def moments_figure(values, path: str, label: str = "mu_n") -> str:
    """Moment decay on log-log axes."""
    mu = np.asarray(values, dtype=float)
    n = np.arange(mu.size) + 1.0
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    positive = mu > 0
    ax.loglog(n[positive], mu[positive], ".", ms=3)
    ax.set_xlabel("n+1")
    ax.set_ylabel(label)
    ax.set_title(f"moment decay: {label}")
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(_prepare(path), dpi=110)
    plt.close(fig)
    return path
