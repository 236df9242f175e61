"""Report files: JSON, a CSV of dimension sequences, and two figures."""

from __future__ import annotations

import csv
import json
import os
from typing import List

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

__all__ = ["write_report"]


def _dims_rows(report: dict) -> List[dict]:
    tasks = report["tasks"]
    hilb = tasks.get("hilbert", {}).get("values", [])
    quot = tasks.get("pertinency", {}).get("growth", {}).get("dims", [])
    rows = []
    for n in range(max(len(hilb), len(quot))):
        rows.append({"degree": n,
                     "identity_component": hilb[n] if n < len(hilb) else "",
                     "quotient_A_by_J": quot[n] if n < len(quot) else ""})
    return rows


def _plot(values, title: str, ylabel: str, path: str, bound=None):
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.plot(range(len(values)), values, marker="o", lw=1)
    if bound is not None:
        ax.axhline(bound, ls="--", color="grey", lw=0.8, label=f"bound {bound}")
        ax.legend(loc="best", fontsize=8)
    ax.set_xlabel("degree n")
    ax.set_ylabel(ylabel)
    ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata={"Software": None})
    plt.close(fig)


def write_report(report: dict, out: str) -> List[str]:
    """Write ``out`` (JSON) plus ``.dims.csv`` and ``.growth.png``/``.hilbert.png`` beside it.

    Figures are only produced for the sequences the report contains.
    """
    base = out[:-5] if out.endswith(".json") else out
    folder = os.path.dirname(os.path.abspath(out))
    os.makedirs(folder, exist_ok=True)
    written = [out]
    with open(out, "w") as fh:
        fh.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    rows = _dims_rows(report)
    if rows:
        path = base + ".dims.csv"
        with open(path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=["degree", "identity_component", "quotient_A_by_J"])
            w.writeheader()
            w.writerows(rows)
        written.append(path)
    tasks = report["tasks"]
    growth = tasks.get("pertinency", {}).get("growth")
    if growth:
        path = base + ".growth.png"
        _plot(growth["dims"], f"{report['name']}: dim (A/J)_n [{growth['classification']}]",
              "dim (A/J)_n", path, growth.get("bound"))
        written.append(path)
    hilb = tasks.get("hilbert", {}).get("values")
    if hilb:
        path = base + ".hilbert.png"
        _plot(hilb, f"{report['name']}: identity component", "dim", path)
        written.append(path)
    return written
