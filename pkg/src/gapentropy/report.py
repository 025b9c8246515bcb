"""Plot-ready series files and rendered figures for the entropy comparisons.

emit_plot_series writes one `x,y` CSV per series with a comment line naming
the series and its parameters, suitable for external plotting tools.
render_report additionally draws the standard figures (matplotlib, file
backend only) next to the CSVs: the three-way entropy comparison over a range
of limits, and the gap-6 / gap-8 frequency ratio drifting toward its
predicted asymptote 2.
"""

from __future__ import annotations

import math
import os
from collections.abc import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)
import numpy as np  # noqa: E402

from .entropy import empirical_gap_entropy, h_real, h_uniform_gaps  # noqa: E402
from .errors import DomainError  # noqa: E402
from .sieve import gap_histogram  # noqa: E402


def emit_plot_series(
    name: str,
    xs: Sequence[float],
    ys: Sequence[float],
    path: str | os.PathLike,
    params: str = "",
) -> None:
    """Write a two-column CSV `x,y` with a naming comment line."""
    if len(xs) != len(ys):
        raise DomainError(f"series length mismatch: {len(xs)} xs vs {len(ys)} ys")
    if len(xs) == 0:
        raise DomainError("empty series")
    with open(path, "w", encoding="ascii") as fh:
        suffix = f" {params}" if params else ""
        fh.write(f"# series={name}{suffix} (all logarithms natural, nats)\n")
        fh.write("x,y\n")
        for x, y in zip(xs, ys):
            fh.write(f"{x:.12g},{y:.12g}\n")


def _log_spaced_limits(x_max: int, points: int) -> list[int]:
    limits = np.unique(
        np.logspace(3, math.log10(x_max), points).astype(np.int64)
    )
    return [int(v) for v in limits if v >= 1000]


def render_report(
    out_dir: str | os.PathLike,
    x_max: int = 1_000_000,
    points: int = 25,
) -> list[str]:
    """Write the standard series CSVs and PNG figures; returns written paths."""
    if x_max < 1000:
        raise DomainError(f"report requires x_max >= 1000, got {x_max}")
    if points < 2:
        raise DomainError(f"report requires points >= 2, got {points}")
    os.makedirs(out_dir, exist_ok=True)

    limits = _log_spaced_limits(int(x_max), points)
    h_emp, h_uni, h_re, ratio_x, ratio_y = [], [], [], [], []
    for limit in limits:
        hist = gap_histogram(limit)
        h_emp.append(empirical_gap_entropy(hist).value)
        h_uni.append(h_uniform_gaps(float(max(hist.counts))).value)
        h_re.append(h_real(float(limit)).value)
        gap6, gap8 = hist.counts.get(6, 0), hist.counts.get(8, 0)
        if gap8 > 0:
            ratio_x.append(float(limit))
            ratio_y.append(gap6 / gap8)

    params = f"limits=[1000,{x_max}] points={len(limits)}"
    written: list[str] = []

    def _series(name: str, xs, ys) -> None:
        path = os.path.join(out_dir, f"{name}.csv")
        emit_plot_series(name, xs, ys, path, params=params)
        written.append(path)

    xs = [float(v) for v in limits]
    _series("entropy_prime_gaps", xs, h_emp)
    _series("entropy_uniform_gaps", xs, h_uni)
    _series("entropy_uniform_reals", xs, h_re)
    _series("gap6_gap8_ratio", ratio_x, ratio_y)

    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.semilogx(xs, h_re, "o-", label="ln(x/ln x - 2)  uniform reals")
    ax.semilogx(xs, h_uni, "s-", label="ln(G - 2)  uniform gaps")
    ax.semilogx(xs, h_emp, "^-", label="empirical prime-gap entropy")
    ax.set_xlabel("limit x")
    ax.set_ylabel("entropy (nats)")
    ax.set_title("Entropy comparison of gap distributions")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    path = os.path.join(out_dir, "entropy_comparison.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    if ratio_x:
        fig, ax = plt.subplots(figsize=(7, 4.5))
        ax.semilogx(ratio_x, ratio_y, "o-", label="count(gap 6) / count(gap 8)")
        ax.axhline(2.0, color="gray", linestyle="--", label="predicted asymptote 2")
        ax.set_xlabel("limit x")
        ax.set_ylabel("frequency ratio")
        ax.set_title("Gap-6 vs gap-8 frequency ratio")
        ax.legend()
        ax.grid(True, which="both", alpha=0.3)
        fig.tight_layout()
        path = os.path.join(out_dir, "gap6_gap8_ratio.png")
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    return written
