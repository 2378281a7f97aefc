"""Figures written next to the delimited reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .fixtures import COLUMNS  # noqa: E402


def _style(ax):
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    ax.grid(axis="y", alpha=0.3, lw=0.5)


def bench_figure(report, path: str | Path) -> Path:
    """Basis length per division and fixture, published values as markers."""
    fixtures = list(dict.fromkeys(c.fixture for c in report.cells))
    divisions = [k for k in COLUMNS if any(c.division is k for c in report.cells)]
    fig, ax = plt.subplots(figsize=(1.6 + 1.3 * len(fixtures), 3.6))
    width = 0.8 / max(len(divisions), 1)
    cmap = plt.get_cmap("tab10")
    for j, kind in enumerate(divisions):
        xs, ys, ex, ey = [], [], [], []
        for i, name in enumerate(fixtures):
            c = report.cell(name, kind)
            x = i + (j - (len(divisions) - 1) / 2) * width
            if c is not None and c.status == "ok":
                xs.append(x)
                ys.append(c.length)
            if c is not None and c.expected is not None:
                ex.append(x)
                ey.append(c.expected.length)
        ax.bar(xs, ys, width=width, color=cmap(j % 10), label=kind.label)
        ax.scatter(ex, ey, marker="_", s=60, color="black", lw=1.2, zorder=3)
    ax.set_yscale("log")
    ax.set_xticks(range(len(fixtures)))
    ax.set_xticklabels(fixtures)
    ax.set_ylabel("minimal involutive basis length")
    ax.legend(ncol=4, fontsize=7, frameon=False)
    _style(ax)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def hilbert_figure(data, bound: int, path: str | Path) -> Path:
    """HF(s) against the Hilbert polynomial, regularity index marked."""
    from .hilbert import poly_eval

    ss = list(range(bound + 1))
    fig, ax = plt.subplots(figsize=(4.5, 3.2))
    ax.plot(ss, [data.hf(s) for s in ss], "o", ms=4, label="HF(s)")
    ax.plot(ss, [float(poly_eval(data.polynomial, s)) for s in ss], "-", lw=1,
            label="Hilbert polynomial")
    ax.axvline(data.regularity, color="grey", ls=":", lw=1, label="regularity")
    ax.set_xlabel("degree s")
    ax.legend(fontsize=7, frameon=False)
    _style(ax)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
