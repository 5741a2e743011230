"""Curated instance corpus shipped with the package.

Closed paths through rank 14 (complete up to symmetry), the minimal
zig-zag closed path (rank 16; exhaustive enumeration shows none exists
below), a rank-30 walk-order exemplar, and small reference shapes.
"""

from __future__ import annotations

import json
from importlib import resources

from .polyomino import Polyomino, from_text


def _root():
    return resources.files("polyomino_ideals").joinpath("data/golden")


def golden_index() -> list[dict]:
    """Metadata rows for every corpus instance."""
    return json.loads(_root().joinpath("index.json").read_text(encoding="utf-8"))


def golden_names() -> list[str]:
    return [row["name"] for row in golden_index()]


def load_golden(name: str) -> Polyomino:
    return from_text(_root().joinpath(f"{name}.cells").read_text(encoding="utf-8"))
