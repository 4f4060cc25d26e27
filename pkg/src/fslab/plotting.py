"""Figures for the CLI: Hasse diagrams of submodule lattices and suite summaries."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

# beyond this many nodes a Hasse diagram is unreadable
MAX_HASSE_NODES = 200

_RC = {
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 120,
    "svg.hashsalt": "fslab",
}


def _save(fig, path):
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    fig.savefig(path, bbox_inches="tight", metadata={"Software": None})
    plt.close(fig)
    return path


def hasse_layout(lat):
    """Nodes in rows by height, each row ordered canonically and centred."""
    rows: dict[int, list[int]] = {}
    for i in lat:
        rows.setdefault(lat.heights[i], []).append(i)
    pos = {}
    for h, nodes in rows.items():
        w = len(nodes)
        for k, i in enumerate(nodes):
            pos[i] = (k - (w - 1) / 2, h)
    return pos


def plot_hasse(lat, path, title="", highlight=None, labels=None):
    """Draw the Hasse diagram; ``highlight`` maps a legend name to a set of nodes."""
    if len(lat) > MAX_HASSE_NODES:
        return None
    highlight = highlight or {}
    colors = ["tab:red", "tab:blue", "tab:green", "tab:orange"]
    pos = hasse_layout(lat)
    with plt.rc_context(_RC):
        width = max(3.0, 0.6 * max(sum(1 for p in pos.values() if p[1] == h) for h in set(lat.heights)))
        fig, ax = plt.subplots(figsize=(min(width, 14), 1.2 * (lat.length() + 1) + 0.6))
        for i, j in lat.edges():
            (x0, y0), (x1, y1) = pos[i], pos[j]
            ax.plot([x0, x1], [y0, y1], color="0.6", lw=0.8, zorder=1)
        xs = [pos[i][0] for i in lat]
        ys = [pos[i][1] for i in lat]
        ax.scatter(xs, ys, s=60, color="white", edgecolor="black", zorder=2)
        for k, ((name, nodes), c) in enumerate(zip(highlight.items(), colors)):
            nodes = sorted(nodes)
            if nodes:
                # growing ring sizes keep coinciding highlights visible
                ax.scatter([pos[i][0] for i in nodes], [pos[i][1] for i in nodes], s=110 + 90 * k, facecolor="none",
                           edgecolor=c, lw=1.6, zorder=3, label=name)
        if labels is not None and len(lat) <= 40:
            for i in lat:
                ax.annotate(labels(i), pos[i], xytext=(5, 3), textcoords="offset points", fontsize=7)
        ax.set_yticks(range(lat.length() + 1))
        ax.set_ylabel("height")
        ax.set_xticks([])
        ax.spines["bottom"].set_visible(False)
        if highlight:
            ax.legend(loc="upper left", bbox_to_anchor=(1.0, 1.0), frameon=False)
        ax.set_title(title)
        return _save(fig, path)


def plot_suite_summary(summary: dict, path, title="theorem suite"):
    """Horizontal stacked bars: substantive passes, vacuous passes, failures per check."""
    names = list(summary)
    if not names:
        return None
    real = [summary[n]["passed"] - summary[n]["vacuous"] for n in names]
    vac = [summary[n]["vacuous"] for n in names]
    fail = [summary[n]["failed"] for n in names]
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(7, 0.28 * len(names) + 1.2))
        y = range(len(names))
        ax.barh(y, real, color="tab:green", label="pass")
        ax.barh(y, vac, left=real, color="0.75", label="vacuous")
        ax.barh(y, fail, left=[a + b for a, b in zip(real, vac)], color="tab:red", label="fail")
        ax.set_yticks(list(y))
        ax.set_yticklabels(names)
        ax.invert_yaxis()
        ax.set_xlabel("instances")
        ax.legend(loc="lower right", frameon=False)
        ax.set_title(title)
        return _save(fig, path)


def plot_invariant_scatter(instances: list, path):
    """Goldie versus hollow dimension over the corpus, sized by instance count."""
    counts: dict[tuple[int, int], int] = {}
    for rec in instances:
        inv = rec.get("invariants")
        if inv:
            key = (inv["goldie_dim"], inv["hollow_dim"])
            counts[key] = counts.get(key, 0) + 1
    if not counts:
        return None
    keys = sorted(counts)
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(4, 4))
        ax.scatter([k[0] for k in keys], [k[1] for k in keys], s=[12 + 4 * counts[k] ** 0.8 for k in keys],
                   alpha=0.6, color="tab:blue")
        ax.set_xlabel("Goldie dimension")
        ax.set_ylabel("hollow dimension")
        ax.set_title("corpus invariants")
        return _save(fig, path)
