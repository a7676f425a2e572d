"""Render the percent-difference series to an image next to the .dat files.

Kept out of the computational modules so the library core has no plotting
dependency; only the CLI report path imports this.
"""

from __future__ import annotations

from pathlib import Path


def render_figure(series_pair, out_path, *, dpi: int = 150) -> Path:
    """Plot both percent-difference series against the level prime.

    Returns the written path.  Uses the Agg backend; safe headless.
    """
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = {"eq7": "survivor estimate (eq7)", "eq15": "corrected estimate (eq15)"}
    colors = {"eq7": "tab:blue", "eq15": "tab:red"}

    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    for series in series_pair:
        xs = [p for p, _ in series.points]
        ys = [pct for _, pct in series.points]
        ax.plot(xs, ys, lw=1.8, color=colors.get(series.label),
                label=labels.get(series.label, series.label))
    ax.axhline(0.0, color="0.6", lw=0.8)
    ax.set_xlabel("prime p")
    ax.set_ylabel("% difference from actual")
    ax.legend(frameon=False)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()

    out_path = Path(out_path)
    fig.savefig(out_path, dpi=dpi)
    plt.close(fig)
    return out_path
