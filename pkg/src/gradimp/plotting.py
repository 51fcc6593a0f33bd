"""Matplotlib figures for CLI reports. Everything renders off-screen to files."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bases import PseudoIntentGraph  # noqa: E402
from .fsets import format_lset  # noqa: E402
from .implications import Implication, validity_per_row  # noqa: E402
from .lattice import ChainLattice  # noqa: E402


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_row_validity(lat: ChainLattice, imp: Implication, t, path):
    """Bar chart of the validity degree of ``imp`` in each row, with the table minimum marked."""
    values = [float(lat.value(a)) for a in validity_per_row(lat, imp, t)]
    fig, ax = plt.subplots(figsize=(max(3.0, 0.8 * len(values) + 1.5), 3.2))
    ax.bar(range(len(values)), values, color="#4c72b0")
    if values:
        ax.axhline(min(values), color="#c44e52", linestyle="--", label=f"table: {min(values):g}")
        ax.legend(loc="lower right", fontsize=8)
    ax.set_xticks(range(len(values)), t.objects, rotation=45 if len(values) > 6 else 0)
    ax.set_ylim(0, 1.05)
    ax.set_ylabel("validity degree")
    ax.set_title(imp.format(lat, decimal=True), fontsize=9)
    return _save(fig, path)


def plot_pseudo_intent_graph(lat: ChainLattice, graph: PseudoIntentGraph, path, systems=()):
    """Cross table of ``E`` next to a circular drawing of ``E ∪ E⁻¹``.

    Vertices belonging to the first system in ``systems`` are highlighted.
    """
    V = graph.vertices
    labels = [format_lset(lat, P, decimal=True) for P in V]
    pos = {P: i for i, P in enumerate(V)}
    chosen = set(systems[0]) if systems else set()
    size = max(4.0, 0.55 * len(V) + 2.5)
    fig, (left, right) = plt.subplots(1, 2, figsize=(2 * size, size))

    if not V:
        for ax in (left, right):
            ax.axis("off")
        left.text(0.5, 0.5, "every L-set is an intent", ha="center", va="center", fontsize=9)
        return _save(fig, path)
    matrix = [[1 if (P, Q) in graph.edges else 0 for Q in V] for P in V]
    left.imshow(matrix, cmap="Greys", vmin=0, vmax=4)
    left.set_xticks(range(len(V)), labels, rotation=90, fontsize=7)
    left.set_yticks(range(len(V)), labels, fontsize=7)
    for i, row in enumerate(matrix):
        for j, bit in enumerate(row):
            if bit:
                left.text(j, i, "x", ha="center", va="center", fontsize=8)
    left.set_title("E (row P, column Q)", fontsize=9)

    coords = [(math.cos(2 * math.pi * i / max(len(V), 1)), math.sin(2 * math.pi * i / max(len(V), 1)))
              for i in range(len(V))]
    for P, Q in graph.edges:
        (x1, y1), (x2, y2) = coords[pos[P]], coords[pos[Q]]
        right.plot([x1, x2], [y1, y2], color="#999999", linewidth=0.8, zorder=1)
    for P, (x, y) in zip(V, coords):
        right.scatter([x], [y], s=120, zorder=2,
                      color="#dd8452" if P in chosen else "#4c72b0")
        right.annotate(labels[pos[P]], (x, y), textcoords="offset points", xytext=(0, 9),
                       ha="center", fontsize=7)
    right.set_xlim(-1.5, 1.5)
    right.set_ylim(-1.5, 1.5)
    right.set_aspect("equal")
    right.axis("off")
    right.set_title("G = (V, E ∪ E⁻¹)", fontsize=9)
    return _save(fig, path)


def plot_lifted_table(lifted, path):
    """Incidence of the two-valued lifted table as a black and white grid."""
    binary = lifted.binary
    fig, ax = plt.subplots(figsize=(max(4.0, 0.4 * len(binary.universe) + 2),
                                    max(2.5, 0.35 * len(binary.objects) + 1.5)))
    ax.imshow(binary.entries, cmap="Greys", vmin=0, vmax=1)
    ax.set_xticks(range(len(binary.universe)), binary.universe.attributes, rotation=90, fontsize=7)
    ax.set_yticks(range(len(binary.objects)), binary.objects, fontsize=7)
    ax.set_title("lifted incidence", fontsize=9)
    return _save(fig, path)
