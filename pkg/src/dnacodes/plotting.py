"""Figures for the ``tables`` report."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
from matplotlib import pyplot as plt  # noqa: E402


def _style():
    plt.rcParams["font.size"] = 9
    plt.rcParams["axes.spines.top"] = False
    plt.rcParams["axes.spines.right"] = False
    plt.rcParams["savefig.dpi"] = 150


def plot_growth_convergence(series: dict, path, reference: dict | None = None):
    """``series`` maps a label to a list of ``(n, ratio)`` pairs."""
    _style()
    fig, ax = plt.subplots(figsize=(5.5, 3.5))
    for label, pts in series.items():
        ns, rs = zip(*pts)
        line, = ax.plot(ns, rs, lw=1.2, label=label)
        if reference and label in reference:
            ax.axhline(reference[label], color=line.get_color(), ls=":", lw=0.8)
    ax.set_xlabel("length n")
    ax.set_ylabel("count(n) / count(n-1)")
    ax.set_xscale("log")
    ax.legend(frameon=False, fontsize=7, ncol=2)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_rates(curves: dict, path, targets: dict | None = None):
    _style()
    fig, ax = plt.subplots(figsize=(5.5, 3.5))
    for label, pts in curves.items():
        ns, rs = zip(*pts)
        ax.plot(ns, rs, lw=1.2, label=label)
    for label, y in (targets or {}).items():
        ax.axhline(y, color="0.4", ls="--", lw=0.8)
        ax.annotate(label, (ax.get_xlim()[1], y), ha="right", va="bottom", fontsize=7)
    ax.set_xlabel("block length n")
    ax.set_ylabel("rate (bits/nt)")
    ax.legend(frameon=False, fontsize=7)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
