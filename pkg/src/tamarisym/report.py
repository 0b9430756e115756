"""Text tables and matplotlib figures for the experiment commands."""

from __future__ import annotations

import csv
import io
import math
from typing import Sequence


def text_table(rows: Sequence[dict], columns: Sequence[str] | None = None) -> str:
    if not rows:
        return ""
    columns = list(columns or rows[0].keys())
    cells = [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[k]) for row in cells)) for k, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def csv_table(rows: Sequence[dict], columns: Sequence[str] | None = None) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns or rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _figure():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.grid(True, alpha=0.3)
    return plt, fig, ax


def _save(plt, fig, path: str) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_diameters(rows: Sequence[dict], path: str) -> None:
    plt, fig, ax = _figure()
    ns = [r["n"] for r in rows]
    ax.plot(ns, [r["diameter"] for r in rows], "o-", label="diameter (BFS)")
    ax.plot(ns, [2 * n - 6 for n in ns], "--", label="2n - 6")
    ax.plot(ns, [2 * n - math.sqrt(70 * n) for n in ns], ":", label="2n - sqrt(70n)")
    ax.set_xlabel("size n")
    ax.set_ylabel("rotation distance")
    ax.legend()
    _save(plt, fig, path)


def plot_upfamily(rows: Sequence[dict], path: str) -> None:
    plt, fig, ax = _figure()
    ps = [r["p"] for r in rows]
    ax.plot(ps, [r["dist_plus"] for r in rows], "o-", label="dist+ (left rotations only)")
    ax.plot(ps, [r["dist"] for r in rows], "s-", label="dist")
    ax.plot(ps, [3 * p + 1 for p in ps], "--", label="3p + 1")
    ax.set_xlabel("p")
    ax.set_ylabel("rotations")
    ax.legend()
    _save(plt, fig, path)


def plot_zigzag(rows: Sequence[dict], path: str) -> None:
    plt, fig, ax = _figure()
    ns = [r["n"] for r in rows]
    ax.plot(ns, [r["dist"] for r in rows], "o-", label="dist(Z_n, Z'_n)")
    ax.plot(ns, [2 * n - 6 for n in ns], "--", label="2n - 6")
    ax.set_xlabel("size n")
    ax.set_ylabel("rotation distance")
    ax.legend()
    _save(plt, fig, path)
