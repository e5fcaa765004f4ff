"""Figure rendering for the report path.

Every figure is drawn on an explicit Agg canvas with fixed size, dpi, and
PNG metadata, so re-rendering the same data produces the same bytes; no
pyplot global state is touched.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .intpoly import IntPoly

_METADATA = {"Software": "weilsieve"}


def _new_figure() -> Figure:
    fig = Figure(figsize=(7.0, 4.5), dpi=100)
    FigureCanvasAgg(fig)
    return fig


def _save(fig: Figure, path: str) -> None:
    fig.savefig(path, format="png", metadata=_METADATA)


def save_candidate_roots(polys: Sequence[IntPoly], q: int, path: str) -> None:
    """Scatter of the real roots of each candidate against its index.

    Roots are approximated numerically for display only; the library's
    decisions never depend on floats.
    """
    fig = _new_figure()
    ax = fig.add_subplot(111)
    xs: list[float] = []
    ys: list[int] = []
    for idx, p in enumerate(polys, 1):
        coeffs = [float(c) for c in reversed(p.coeffs)]
        # companion-matrix eigenvalues stay stable on repeated roots
        for r in numpy.roots(coeffs):
            xs.append(float(r.real))
            ys.append(idx)
    bound = 2 * math.sqrt(q)
    ax.scatter(xs, ys, s=12, color="#1f5fa8", alpha=0.7, linewidths=0)
    ax.axvline(-bound, color="#aa3333", linewidth=1, linestyle="--")
    ax.axvline(bound, color="#aa3333", linewidth=1, linestyle="--")
    ax.set_xlabel("real root location")
    ax.set_ylabel("candidate index")
    ax.set_title(f"candidate root spectra, q = {q} (dashed: +-2 sqrt q)")
    fig.tight_layout()
    _save(fig, path)


def save_argument_histogram(labels: Sequence[str], path: str) -> None:
    """Bar chart of elimination argument labels, in fixed category order."""
    order = ["resultant-1", "supersingular-factor", "resultant-2", "none"]
    counts = {k: 0 for k in order}
    for lab in labels:
        counts[lab] = counts.get(lab, 0) + 1
    cats = [k for k in counts]
    fig = _new_figure()
    ax = fig.add_subplot(111)
    ax.bar(range(len(cats)), [counts[k] for k in cats], color="#1f5fa8")
    ax.set_xticks(range(len(cats)))
    ax.set_xticklabels(cats, rotation=15, ha="right")
    ax.set_ylabel("candidates")
    ax.set_title("elimination arguments")
    for i, k in enumerate(cats):
        ax.text(i, counts[k], str(counts[k]), ha="center", va="bottom")
    fig.tight_layout()
    _save(fig, path)


def save_count_plot(counts: Sequence[int], q: int, genus: int, path: str) -> None:
    """Point counts N_1..N_k against the Weil band q^n + 1 +- 2g q^(n/2)."""
    ns = list(range(1, len(counts) + 1))
    mid = [q**n + 1 for n in ns]
    rad = [2 * genus * math.sqrt(q) ** n for n in ns]
    fig = _new_figure()
    ax = fig.add_subplot(111)
    ax.fill_between(
        ns,
        [m - r for m, r in zip(mid, rad)],
        [m + r for m, r in zip(mid, rad)],
        color="#c9d9ec",
        label="Weil band",
    )
    ax.plot(ns, mid, color="#7a8ba0", linewidth=1, linestyle=":", label="q^n + 1")
    ax.plot(ns, list(counts), color="#1f5fa8", marker="o", label="N_n")
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("points over GF(q^n)")
    ax.set_title(f"point counts vs Weil band, q = {q}, g = {genus}")
    ax.legend()
    fig.tight_layout()
    _save(fig, path)
