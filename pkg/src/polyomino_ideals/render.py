"""Text and figure rendering of polyominoes and harness summaries.

matplotlib is imported lazily so text-only use stays light; figures are
drawn on explicit Figure objects (no pyplot state) and written to files.
"""

from __future__ import annotations

from .polyomino import Polyomino

FULL = "█"
DOT = "·"


def render_text(p: Polyomino) -> str:
    """ASCII grid of the bounding box, y increasing upward."""
    bb = p.bounding_box()
    lines = []
    for y in range(bb.hi.y - 1, bb.lo.y - 1, -1):
        lines.append(
            "".join(FULL if (x, y) in p.cell_set else DOT for x in range(bb.lo.x, bb.hi.x))
        )
    return "\n".join(lines)


def _cell_axes(fig, p: Polyomino, title=None):
    from matplotlib.patches import Rectangle

    ax = fig.subplots()
    bb = p.bounding_box()
    for x, y in sorted(p.cell_set):
        ax.add_patch(Rectangle((x, y), 1, 1, facecolor="#4878cf", edgecolor="black", linewidth=0.8))
    ax.set_xlim(bb.lo.x - 0.5, bb.hi.x + 0.5)
    ax.set_ylim(bb.lo.y - 0.5, bb.hi.y + 0.5)
    ax.set_aspect("equal")
    ax.set_xticks(range(bb.lo.x, bb.hi.x + 1))
    ax.set_yticks(range(bb.lo.y, bb.hi.y + 1))
    ax.grid(True, linewidth=0.3, alpha=0.5)
    if title:
        ax.set_title(title)
    return ax


def save_polyomino_figure(p: Polyomino, path, title: str | None = None) -> None:
    """Render the polyomino to an image file (format from the extension)."""
    from matplotlib.figure import Figure

    fig = Figure(figsize=(4.5, 4.5))
    _cell_axes(fig, p, title)
    fig.savefig(path, bbox_inches="tight", dpi=150)


def save_summary_figure(records: list[dict], path) -> None:
    """Bar chart of harness outcomes by rank, written next to the log."""
    from matplotlib.figure import Figure

    by_rank: dict[int, dict[str, int]] = {}
    for rec in records:
        counts = by_rank.setdefault(rec["rank"], {"certificate": 0, "exhausted": 0, "budget": 0})
        counts[rec["koenig"]["status"]] += 1
    ranks = sorted(by_rank)
    fig = Figure(figsize=(6.5, 4))
    ax = fig.subplots()
    bottom = [0] * len(ranks)
    colors = {"certificate": "#2f9e44", "exhausted": "#d9480f", "budget": "#868e96"}
    for status in ("certificate", "exhausted", "budget"):
        heights = [by_rank[r][status] for r in ranks]
        ax.bar(ranks, heights, bottom=bottom, label=status, color=colors[status])
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_xlabel("rank")
    ax.set_ylabel("instances")
    ax.set_title("Koenig search outcomes by rank")
    if ranks:
        ax.set_xticks(ranks)
    ax.legend()
    fig.savefig(path, bbox_inches="tight", dpi=150)
