"""CSV tables and figures summarizing one checker run."""

from __future__ import annotations

import collections
import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .checker import AccessStats  # noqa: E402
from .diagnostics import Code, Diagnostic  # noqa: E402

DIAG_FIELDS = ["code", "severity", "file", "line", "column", "message", "expected", "actual"]


def write_diagnostics_csv(path: Path, diags: list[Diagnostic]):
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(DIAG_FIELDS)
        for d in diags:
            w.writerow([d.code.value, d.severity.label, d.span.file, d.span.line, d.span.column,
                        d.message, d.expected or "", d.actual or ""])


def write_stats_csv(path: Path, stats: AccessStats):
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["bucket", "count"])
        for k, v in stats.as_dict().items():
            w.writerow([k, v])


def plot_codes(path: Path, diags: list[Diagnostic]):
    counts = collections.Counter(d.code.value for d in diags)
    codes = [c.value for c in Code]
    fig, ax = plt.subplots(figsize=(8, 3.5))
    ax.bar(codes, [counts.get(c, 0) for c in codes], color="#4c72b0")
    ax.set_ylabel("diagnostics")
    ax.tick_params(axis="x", labelrotation=60, labelsize=8)
    ax.spines[["top", "right"]].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_coverage(path: Path, stats: AccessStats):
    labels = ["getters", "setters"]
    checked = [stats.getters_checked - stats.getters_flagged,
               stats.setters_checked - stats.setters_flagged]
    flagged = [stats.getters_flagged, stats.setters_flagged]
    fig, (ax, ax2) = plt.subplots(1, 2, figsize=(8, 3.5))
    ax.bar(labels, checked, label="checked, clean", color="#55a868")
    ax.bar(labels, flagged, bottom=checked, label="checked, flagged", color="#c44e52")
    ax.set_ylabel("accesses")
    ax.legend(frameon=False, fontsize=8)
    ax2.bar(["out of scope", "unchecked"], [stats.out_of_scope, stats.unchecked], color="#8172b2")
    for a in (ax, ax2):
        a.spines[["top", "right"]].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_report(out_dir, diags: list[Diagnostic], stats: AccessStats) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = [out / "diagnostics.csv", out / "stats.csv", out / "codes.png", out / "coverage.png"]
    write_diagnostics_csv(paths[0], diags)
    write_stats_csv(paths[1], stats)
    plot_codes(paths[2], diags)
    plot_coverage(paths[3], stats)
    return paths
