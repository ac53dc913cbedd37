"""File reporting: JSON, CSV, and rendered figures for suite runs.

Given a suite report (and optionally the per-graph verdicts behind it),
writes report.json and cases.csv plus PNG figures into a directory. The
figures give the at-a-glance story: case outcomes, aggregate counters, and
for verdict sets the omega/chi scatter against the omega+1 line that the
whole project is about.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path

from .harness import SuiteReport, TheoremVerdict


def _figure_cases(report: SuiteReport, path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = [c.case_id for c in report.cases]
    values = [1 if c.passed else 0 for c in report.cases]
    colors = ["#2a9d4e" if v else "#d43f3f" for v in values]
    height = max(2.0, 0.32 * len(names) + 1.2)
    fig, ax = plt.subplots(figsize=(7, height))
    ax.barh(range(len(names)), [1] * len(names), color=colors)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xticks([])
    ax.set_title(f"{report.suite}: case outcomes (green = pass)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _figure_counts(report: SuiteReport, path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    items = list(report.counts.items())
    if not items:
        return
    names = [k for k, _ in items]
    values = [v for _, v in items]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.bar(names, values, color="#4878a8")
    ax.set_ylabel("count")
    ax.set_title(f"{report.suite}: aggregate counters")
    for i, v in enumerate(values):
        ax.text(i, v, str(v), ha="center", va="bottom", fontsize=8)
    plt.setp(ax.get_xticklabels(), rotation=20, ha="right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _figure_bound(verdicts: list[TheoremVerdict], path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    members = [(v.omega, v.chi) for v in verdicts if v.in_class and v.chi is not None]
    outside = [
        (v.omega, v.chi) for v in verdicts if not v.in_class and v.chi is not None
    ]
    fig, ax = plt.subplots(figsize=(5.5, 5))
    top = max([o for o, _ in members + outside] + [3]) + 1
    xs = list(range(0, top + 1))
    ax.plot(xs, [x + 1 for x in xs], "--", color="#666", label="chi = omega + 1")
    if members:
        ax.scatter(*zip(*members), s=28, color="#2a9d4e", label="class members")
    if outside:
        ax.scatter(
            *zip(*outside), s=28, color="#d43f3f", marker="x", label="non-members"
        )
    ax.set_xlabel("omega")
    ax.set_ylabel("chi")
    ax.set_title("chromatic number against the clique bound")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_report(
    report: SuiteReport,
    out_dir: str | Path,
    verdicts: list[TheoremVerdict] | None = None,
) -> list[Path]:
    """Write report.json, cases.csv, and figures; returns the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    payload = report.to_dict()
    if verdicts is not None:
        payload["verdicts"] = [v.to_dict() for v in verdicts]
    json_path = out / "report.json"
    json_path.write_text(json.dumps(payload, indent=2) + "\n")
    written.append(json_path)

    csv_path = out / "cases.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["case_id", "passed", "detail"])
        for c in report.cases:
            writer.writerow([c.case_id, "pass" if c.passed else "fail", c.detail])
    written.append(csv_path)

    cases_png = out / "cases.png"
    _figure_cases(report, cases_png)
    written.append(cases_png)
    counts_png = out / "counts.png"
    _figure_counts(report, counts_png)
    if counts_png.exists():
        written.append(counts_png)
    if verdicts:
        bound_png = out / "bound.png"
        _figure_bound(verdicts, bound_png)
        written.append(bound_png)
    return written
