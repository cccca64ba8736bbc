"""Figures rendered next to a report file."""
from __future__ import annotations

import os
from collections import defaultdict
from typing import Iterable

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .report import CheckReport  # noqa: E402


def _style(ax, xlabel, ylabel, title):
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title, fontsize=11)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)


def plot_valuations(reports: Iterable[CheckReport], path: str) -> str:
    """Difference valuation against prime, one series per check, with the
    claimed exponent drawn as a dashed step."""
    series = defaultdict(list)
    for r in reports:
        if r.prime and not r.flagged:
            series[r.check].append((r.prime, r.diff_valuation, r.exponent))
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for i, (check, pts) in enumerate(sorted(series.items())):
        pts.sort()
        xs = [x for x, _, _ in pts]
        ax.plot(xs, [v + 0.04 * i for _, v, _ in pts], "o", ms=3, label=check)
        ax.step(xs, [e for _, _, e in pts], "--", lw=0.6, where="mid", color="grey")
    _style(ax, "prime p", "v_p(LHS - RHS), capped", "Difference valuations")
    if series:
        ax.legend(fontsize=6, ncol=4, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_timing(reports: Iterable[CheckReport], path: str) -> str:
    totals = defaultdict(int)
    for r in reports:
        totals[r.check] += r.elapsed_us
    names = sorted(totals, key=totals.get, reverse=True)
    fig, ax = plt.subplots(figsize=(8, max(2.5, 0.22 * len(names) + 1)))
    ax.barh(names, [totals[n] / 1e6 for n in names], color="#4c72b0")
    ax.invert_yaxis()
    ax.tick_params(axis="y", labelsize=7)
    _style(ax, "seconds", "", "Time per check (summed over primes)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_figures(reports: list[CheckReport], out_dir: str) -> list[str]:
    os.makedirs(out_dir, exist_ok=True)
    return [
        plot_valuations(reports, os.path.join(out_dir, "diff_valuation.png")),
        plot_timing(reports, os.path.join(out_dir, "timing.png")),
    ]
