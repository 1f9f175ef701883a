"""Figure rendering for bound traces and random scans.

Uses the Agg backend and always writes to a file, so it works headless;
the report commands call into here when asked for a figure next to
their delimited output.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_TSIRELSON = 2.0 * math.sqrt(2.0)


def _reference_lines(ax):
    for level in (2.0, -2.0):
        ax.axhline(level, ls="--", lw=0.9, color="0.5")
    for level in (_TSIRELSON, -_TSIRELSON):
        ax.axhline(level, ls=":", lw=0.9, color="tab:red")


def plot_bound_trace(records, path, fixed_xi_curves=None):
    """Render a bound trace to `path`.

    Thick lines show the analytical extrema, the thin green line the
    prepared state's ideal value, black points the sampled estimates
    with their error bars, and optional thin curves the fixed-xi
    frontier states (label -> list of values per theta).
    """
    thetas = [r.theta for r in records]
    fig, ax = plt.subplots(figsize=(7.2, 5.0))
    ax.plot(thetas, [r.bound_upper for r in records], lw=2.2, color="tab:blue", label="quantum bound")
    ax.plot(thetas, [r.bound_lower for r in records], lw=2.2, color="tab:blue")
    _reference_lines(ax)
    if fixed_xi_curves:
        for label, values in fixed_xi_curves.items():
            ax.plot(thetas, values, lw=0.7, alpha=0.8, label=label)
    ax.plot(thetas, [r.chsh_ideal for r in records], lw=1.0, color="tab:green", label="prepared (ideal)")
    if any(r.chsh_est is not None for r in records):
        ax.errorbar(
            thetas,
            [r.chsh_est for r in records],
            yerr=[r.chsh_err for r in records],
            fmt=".",
            ms=3.5,
            lw=0.7,
            color="black",
            label="sampled estimate",
        )
    ax.set_xlim(0.0, math.pi)
    ax.set_xlabel("theta (rad)")
    ax.set_ylabel("CHSH value")
    ax.legend(loc="lower center", fontsize=8, ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_scan(rows, path):
    """Render scan extrema against the analytical bounds to `path`.

    rows are mappings with theta, bound_upper, bound_lower, scan_min
    and scan_max keys, one per scanned angle.
    """
    thetas = [row["theta"] for row in rows]
    fig, ax = plt.subplots(figsize=(7.2, 5.0))
    ax.plot(thetas, [row["bound_upper"] for row in rows], lw=2.2, color="tab:blue", label="quantum bound")
    ax.plot(thetas, [row["bound_lower"] for row in rows], lw=2.2, color="tab:blue")
    _reference_lines(ax)
    ax.plot(thetas, [row["scan_max"] for row in rows], "v", ms=4, color="black", label="scan max")
    ax.plot(thetas, [row["scan_min"] for row in rows], "^", ms=4, color="0.4", label="scan min")
    ax.set_xlim(min(thetas), max(thetas))
    ax.set_xlabel("theta (rad)")
    ax.set_ylabel("CHSH value")
    ax.legend(loc="lower center", fontsize=8, ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
