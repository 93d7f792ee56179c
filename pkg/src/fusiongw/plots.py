"""Figure rendering for the report paths of the CLI.

All functions write a PNG next to the delimited output and return the path.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_bethe_roots_figure(rootsets, path, title):
    """All root tuples on the unit circle, one marker colour per tuple."""
    fig, ax = plt.subplots(figsize=(5, 5))
    theta = np.linspace(0, 2 * np.pi, 256)
    ax.plot(np.cos(theta), np.sin(theta), lw=0.5, color="0.7")
    cmap = plt.get_cmap("viridis")
    m = max(len(rootsets) - 1, 1)
    for idx, roots in enumerate(rootsets):
        pts = np.array(roots.points, dtype=complex)
        if pts.size == 0:
            continue
        ax.plot(
            pts.real, pts.imag, "o", ms=5, alpha=0.8,
            color=cmap(idx / m), label=str(roots.sigma),
        )
    ax.set_aspect("equal")
    ax.set_title(title)
    if len(rootsets) <= 12:
        ax.legend(fontsize=6, loc="center")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_matrix_figure(mat, path, title):
    """Magnitude and phase heatmaps of a complex matrix."""
    mat = np.asarray(mat, dtype=complex)
    fig, axes = plt.subplots(1, 2, figsize=(9, 4))
    im0 = axes[0].imshow(np.abs(mat), cmap="magma")
    axes[0].set_title("|entries|")
    fig.colorbar(im0, ax=axes[0], shrink=0.8)
    im1 = axes[1].imshow(np.angle(mat), cmap="twilight", vmin=-np.pi, vmax=np.pi)
    axes[1].set_title("arg(entries)")
    fig.colorbar(im1, ax=axes[1], shrink=0.8)
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_table_figure(records, path, title):
    """Histogram of structure constants grouped by degree."""
    degrees = sorted({r["d"] for r in records})
    fig, ax = plt.subplots(figsize=(6, 4))
    width = 0.8 / max(len(degrees), 1)
    for i, d in enumerate(degrees):
        values = [r["c"] for r in records if r["d"] == d]
        counts = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        xs = sorted(counts)
        ax.bar(
            [x + i * width for x in xs],
            [counts[x] for x in xs],
            width=width,
            label="degree %d" % d,
        )
    ax.set_xlabel("coefficient value")
    ax.set_ylabel("count")
    ax.set_title(title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def ensure_dir(path):
    os.makedirs(path, exist_ok=True)
    return path
