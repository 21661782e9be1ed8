"""Rendering of verify reports: JSON, delimited tables, and summary figures.

Figures are written as PNG files next to the CSV output.  Matplotlib is
imported lazily with the Agg backend so that plain CLI calls never pay for
it and no display is required.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .verify import VerifyReport


def write_report_files(report: VerifyReport, directory: str | Path) -> list[Path]:
    """Write report.json, suite and failure CSVs, and the figures.

    Returns the list of paths written.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []

    json_path = directory / "verify_report.json"
    json_path.write_text(report.to_json() + "\n")
    written.append(json_path)

    suites_path = directory / "verify_suites.csv"
    with suites_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["suite", "cases", "failures", "wall_time_s"])
        for s in report.suites:
            writer.writerow([s.name, s.cases, len(s.failures),
                             f"{s.wall_time_s:.6f}"])
    written.append(suites_path)

    if report.total_failures:
        failures_path = directory / "verify_failures.csv"
        with failures_path.open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["suite", "case", "inputs", "lhs", "rhs"])
            for s in report.suites:
                for f in s.failures:
                    writer.writerow([s.name, f.case, f.inputs, f.lhs, f.rhs])
        written.append(failures_path)

    written.extend(_write_figures(report, directory))
    return written


def _write_figures(report: VerifyReport, directory: Path) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    written = []

    fig, ax = plt.subplots(figsize=(7, 3.5))
    names = [s.name for s in report.suites]
    cases = [s.cases for s in report.suites]
    colors = ["#2a9d2a" if not s.failures else "#c03030" for s in report.suites]
    ax.bar(names, cases, color=colors)
    ax.set_ylabel("checks run")
    ax.set_title(f"verify: {report.total_cases} checks, "
                 f"{report.total_failures} failures (seed {report.seed})")
    ax.tick_params(axis="x", rotation=20)
    fig.tight_layout()
    path = directory / "verify_suites.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    for s in report.suites:
        lengths = s.metrics.get("word_lengths")
        if not lengths:
            continue
        fig, ax = plt.subplots(figsize=(6, 3.5))
        ax.hist(lengths, bins=range(0, max(lengths) + 2), color="#33557f",
                edgecolor="white", align="left")
        ax.set_xlabel("reduction word length")
        ax.set_ylabel("instances")
        ax.set_title(f"{s.name}: mutation words recovered "
                     f"({len(lengths)} collections)")
        fig.tight_layout()
        path = directory / f"verify_{s.name.replace('-', '_')}_depths.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    return written
