"""Structural recognizers on polyominoes.

Closed paths (cell cycles), L-configurations, ladders of maximal blocks,
zig-zag walks of inner intervals, and the block-hook patterns (gamma-like
paths and skew paths) that occur inside closed paths.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import NotClosedPathError
from .lattice import Cell, Interval, Point, cell_vertices, corners, interval_point_intersection
from .polyomino import (
    HORIZONTAL,
    VERTICAL,
    Block,
    Polyomino,
    inner_intervals,
    maximal_blocks,
    maximal_edge_intervals,
)


# ---------------------------------------------------------------- closed paths

class ClosedPathSequence(NamedTuple):
    """A witnessing cyclic cell sequence for a closed path polyomino."""

    cells: tuple[Cell, ...]

    @property
    def length(self) -> int:
        return len(self.cells)


def closed_path_sequence(p: Polyomino) -> ClosedPathSequence | None:
    """Canonical cell cycle if the polyomino is a closed path, else None.

    Checks: every cell has exactly two edge-neighbours, the adjacency graph
    is a single cycle of length > 5, and cells at cyclic distance >= 3 share
    no vertex.  Canonical start is the least lower-left corner; the walk
    proceeds towards the smaller of its two neighbours.
    """
    cycle = closed_path_cycle(p.cell_set)
    if cycle is None:
        return None
    return ClosedPathSequence(tuple(Cell(Point(x, y)) for x, y in cycle))


def closed_path_cycle(cell_set: frozenset) -> tuple | None:
    """Raw-tuple core of :func:`closed_path_sequence` (shared with enumeration)."""
    n = len(cell_set)
    if n <= 5:
        return None
    nbrs = {}
    for x, y in cell_set:
        mine = [nb for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)) if nb in cell_set]
        if len(mine) != 2:
            return None
        nbrs[(x, y)] = mine
    start = min(cell_set)
    first = min(nbrs[start])
    cycle = [start, first]
    prev, cur = start, first
    while cur != start:
        a, b = nbrs[cur]
        nxt = b if a == prev else a
        prev, cur = cur, nxt
        if cur != start:
            cycle.append(cur)
        if len(cycle) > n:
            return None
    if len(cycle) != n:
        return None  # more than one cycle
    verts = [
        frozenset(((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))) for x, y in cycle
    ]
    for i in range(n):
        for j in range(i + 3, n):
            if min(j - i, n - (j - i)) <= 2:
                continue
            if verts[i] & verts[j]:
                return None
    return tuple(cycle)


def direction(a: Cell, b: Cell) -> tuple[int, int]:
    """Unit step from cell a to edge-adjacent cell b."""
    return (b.ll.x - a.ll.x, b.ll.y - a.ll.y)


def changes_of_direction(seq: ClosedPathSequence) -> list[int]:
    """Indices i such that the walk changes direction at cells[i]."""
    cells = seq.cells
    n = len(cells)
    result = []
    for i in range(n):
        before = cells[(i - 1) % n]
        after = cells[(i + 1) % n]
        if before.ll.x != after.ll.x and before.ll.y != after.ll.y:
            result.append(i)
    return result


# ---------------------------------------------------------------- L-configurations

class LConfiguration(NamedTuple):
    """Five cells forming two orthogonal straight runs of three."""

    cells: tuple[Cell, Cell, Cell, Cell, Cell]


def find_L_configurations(p: Polyomino) -> list[LConfiguration]:
    """All 5-cell paths whose halves run in orthogonal directions.

    Deduplicated up to reversal by always listing the horizontal arm first.
    """
    found = []
    for ll in sorted(p.cell_set):
        x, y = ll
        for dh in ((1, 0), (-1, 0)):
            if (x + dh[0], y) not in p.cell_set or (x + 2 * dh[0], y) not in p.cell_set:
                continue
            for dv in ((0, 1), (0, -1)):
                if (x, y + dv[1]) not in p.cell_set or (x, y + 2 * dv[1]) not in p.cell_set:
                    continue
                found.append(
                    LConfiguration(
                        (
                            Cell(Point(x + 2 * dh[0], y)),
                            Cell(Point(x + dh[0], y)),
                            Cell(Point(x, y)),
                            Cell(Point(x, y + dv[1])),
                            Cell(Point(x, y + 2 * dv[1])),
                        )
                    )
                )
    found.sort(key=lambda l: l.cells)
    return found


# ---------------------------------------------------------------- ladders

class Ladder(NamedTuple):
    """A chain of same-orientation maximal blocks linked by two-vertex steps."""

    blocks: tuple[Block, ...]
    steps: tuple[tuple[Point, Point], ...]

    @property
    def n_steps(self) -> int:
        return len(self.blocks)


class _EdgeRunIndex:
    """Membership test 'these points lie on one maximal edge interval'."""

    def __init__(self, p: Polyomino):
        self.h = {}
        for ei in maximal_edge_intervals(p, HORIZONTAL):
            (x1, y), (x2, _) = ei.endpoints
            self.h.setdefault(y, []).append((x1, x2))
        self.v = {}
        for ei in maximal_edge_intervals(p, VERTICAL):
            (x, y1), (_, y2) = ei.endpoints
            self.v.setdefault(x, []).append((y1, y2))

    def common_run(self, pts) -> bool:
        xs = {q[0] for q in pts}
        ys = {q[1] for q in pts}
        if len(ys) == 1:
            y = next(iter(ys))
            lo, hi = min(xs), max(xs)
            return any(a <= lo and hi <= b for a, b in self.h.get(y, ()))
        if len(xs) == 1:
            x = next(iter(xs))
            lo, hi = min(ys), max(ys)
            return any(a <= lo and hi <= b for a, b in self.v.get(x, ()))
        return False


def find_ladders(p: Polyomino, min_steps: int) -> list[Ladder]:
    """All maximal ladders with at least ``min_steps`` blocks.

    Consecutive blocks must share exactly two distinct vertices, and two
    consecutive steps may not lie on one edge interval of the polyomino.
    Chains are maximal (not extendable at either end) and deduplicated up
    to reversal.
    """
    if min_steps < 2:
        raise ValueError("min_steps must be >= 2")
    runs = _EdgeRunIndex(p)
    ladders = []
    for orientation in (HORIZONTAL, VERTICAL):
        blocks = maximal_blocks(p, orientation)
        vsets = [b.vertex_set() for b in blocks]
        links: dict[int, list[tuple[int, tuple[Point, Point]]]] = {i: [] for i in range(len(blocks))}
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                shared = vsets[i] & vsets[j]
                if len(shared) == 2:
                    step = tuple(sorted(shared))
                    links[i].append((j, step))
                    links[j].append((i, step))

        def extensions(chain, steps):
            last = chain[-1]
            for k, step in links[last]:
                if k in chain:
                    continue
                if steps and runs.common_run(steps[-1] + step):
                    continue
                yield k, step

        def dfs(chain, steps):
            extended = False
            for k, step in extensions(chain, steps):
                extended = True
                dfs(chain + [k], steps + [step])
            if not extended and len(chain) >= min_steps:
                # maximal forward; also require no extension at the front
                rev_chain = list(reversed(chain))
                rev_steps = list(reversed(steps))
                if not any(True for _ in extensions(rev_chain, rev_steps)):
                    if chain[0] <= chain[-1]:  # canonical direction
                        ladders.append(
                            Ladder(tuple(blocks[i] for i in chain), tuple(steps))
                        )

        for i in range(len(blocks)):
            dfs([i], [])
    ladders.sort(key=lambda l: tuple(b.cells for b in l.blocks))
    return ladders


# ---------------------------------------------------------------- zig-zag walks

class ZigZagCorners(NamedTuple):
    """Corner roles of one interval inside a zig-zag walk."""

    v: Point
    z: Point
    u: Point
    v_next: Point


class ZigZagWalk(NamedTuple):
    intervals: tuple[Interval, ...]
    corners: tuple[ZigZagCorners, ...]


class ZigZagSearch(NamedTuple):
    """Search result; ``complete`` is False iff a length cap truncated it."""

    walks: tuple[ZigZagWalk, ...]
    complete: bool


def _corner_roles(iv: Interval):
    """(v, z, exit pair) for each of the four corners used as entering corner."""
    cp = corners(iv)
    d1, d2 = cp.diagonal
    a1, a2 = cp.antidiagonal
    return {
        d1: (d2, (a1, a2)),
        d2: (d1, (a1, a2)),
        a1: (a2, (d1, d2)),
        a2: (a1, (d1, d2)),
    }


def find_zigzag_walks(p: Polyomino, max_length: int | None = None) -> ZigZagSearch:
    """All zig-zag walks of the polyomino, up to rotation and reversal.

    Depth-first search over inner intervals chained through shared corners;
    cycles are closed back to the first interval and then condition (3)
    (no inner interval contains two of the z-corners) is enforced
    incrementally.  The chain length is naturally bounded by the number of
    inner intervals; a smaller explicit cap yields ``complete=False`` when
    it actually truncates a chain.
    """
    intervals = inner_intervals(p)
    m = len(intervals)
    cap = m if max_length is None else min(max_length, m)
    roles = [_corner_roles(iv) for iv in intervals]
    by_corner: dict[Point, list[int]] = {}
    for i, role in enumerate(roles):
        for pt in role:
            by_corner.setdefault(pt, []).append(i)
    # bitmask of intervals containing each relevant point (condition 3)
    masks: dict[Point, int] = {}

    def mask_of(pt: Point) -> int:
        if pt not in masks:
            bits = 0
            for i, iv in enumerate(intervals):
                if iv.contains_point(pt):
                    bits |= 1 << i
            masks[pt] = bits
        return masks[pt]

    runs = _EdgeRunIndex(p)
    found: dict[tuple, ZigZagWalk] = {}
    truncated = False

    def close_or_extend(chain, vs, zs, zmask, used, i0):
        nonlocal truncated
        i = chain[-1]
        v = vs[-1]
        z, exits = roles[i][v]
        if zmask & mask_of(z):
            return
        zmask |= mask_of(z)
        zs = zs + [z]
        for v_next in exits:
            if not runs.common_run((v, v_next)):
                continue  # condition (2)
            if len(chain) >= 3 and v_next == vs[0]:
                cnt, pt = interval_point_intersection(intervals[i], intervals[i0])
                if cnt == 1 and pt == vs[0]:
                    _record(chain, vs + [v_next], zs)
            if len(chain) >= cap:
                if cap < m:  # a user cap actually cut a chain short
                    truncated = True
                continue
            for j in by_corner.get(v_next, ()):
                if j <= i0 or (used >> j) & 1:
                    continue
                cnt, pt = interval_point_intersection(intervals[i], intervals[j])
                if cnt != 1 or pt != v_next:
                    continue
                close_or_extend(chain + [j], vs + [v_next], zs, zmask, used | (1 << j), i0)

    def _record(chain, vs, zs):
        walk = ZigZagWalk(
            intervals=tuple(intervals[i] for i in chain),
            corners=tuple(
                ZigZagCorners(v=vs[k], z=zs[k], u=_other_exit(chain[k], vs[k], vs[k + 1]), v_next=vs[k + 1])
                for k in range(len(chain))
            ),
        )
        found[_canonical_walk_key(walk)] = walk

    def _other_exit(i, v, v_next):
        _, exits = roles[i][v]
        return exits[1] if exits[0] == v_next else exits[0]

    for i0 in range(m):
        for v1 in roles[i0]:
            close_or_extend([i0], [v1], [], 0, 1 << i0, i0)

    walks = [found[k] for k in sorted(found)]
    return ZigZagSearch(walks=tuple(walks), complete=not truncated)


def _canonical_walk_key(walk: ZigZagWalk) -> tuple:
    ell = len(walk.intervals)
    seqs = []
    fwd = [(walk.intervals[k], walk.corners[k].v) for k in range(ell)]
    seqs.extend(tuple(fwd[r:] + fwd[:r]) for r in range(ell))
    # reversed traversal enters each interval at its former exit corner
    rev = [
        (walk.intervals[k], walk.corners[k].v_next)
        for k in [0] + list(range(ell - 1, 0, -1))
    ]
    seqs.extend(tuple(rev[r:] + rev[:r]) for r in range(ell))
    return min(seqs)


def is_prime_closed_path(p: Polyomino) -> bool:
    """Zig-zag-freeness criterion for closed paths: an L-configuration or a
    ladder of at least three steps is present."""
    if closed_path_sequence(p) is None:
        raise NotClosedPathError("not a closed path")
    if find_L_configurations(p):
        return True
    return bool(find_ladders(p, 3))


# ---------------------------------------------------------------- block hooks

class GammaLikePath(NamedTuple):
    """Two orthogonal long maximal blocks sharing one vertex, hooked at a cell.

    ``kind`` records the corner role of the hooking vertex on the middle
    cell: upper-left -> "gamma", upper-right -> "tau", lower-left -> "w",
    lower-right -> "zeta" (the four patterns are dihedral images of each
    other; this fixes one representative naming).
    """

    kind: str
    horizontal_block: Block
    vertical_block: Block
    middle_cell: Cell
    hooking_vertex: Point


_GAMMA_KINDS = {"ul": "gamma", "ur": "tau", "ll": "w", "lr": "zeta"}


def find_gamma_like_paths(p: Polyomino) -> list[GammaLikePath]:
    """All gamma/tau/w/zeta configurations: a horizontal and a vertical
    maximal block, both of rank > 3, sharing exactly one vertex w, plus a
    middle cell outside both blocks having w as one of its corners."""
    result = []
    h_blocks = [b for b in maximal_blocks(p, HORIZONTAL) if b.rank > 3]
    v_blocks = [b for b in maximal_blocks(p, VERTICAL) if b.rank > 3]
    for bh in h_blocks:
        vh = bh.vertex_set()
        for bv in v_blocks:
            shared = vh & bv.vertex_set()
            if len(shared) != 1:
                continue
            (w,) = shared
            block_cells = {c.ll for c in bh.cells} | {c.ll for c in bv.cells}
            for ll in sorted(p.cell_set - block_cells):
                d = Cell(Point(*ll))
                role = None
                if w == d.ul:
                    role = "ul"
                elif w == d.ur:
                    role = "ur"
                elif w == d.ll:
                    role = "ll"
                elif w == d.lr:
                    role = "lr"
                if role is None:
                    continue
                if not _connected_union(block_cells | {d.ll}):
                    continue
                result.append(
                    GammaLikePath(
                        kind=_GAMMA_KINDS[role],
                        horizontal_block=bh,
                        vertical_block=bv,
                        middle_cell=d,
                        hooking_vertex=w,
                    )
                )
    result.sort(key=lambda g: (g.kind, g.middle_cell, g.hooking_vertex))
    return result


class SkewPath(NamedTuple):
    """Two long same-orientation maximal blocks overlapping in one step.

    ``kind``: horizontal pairs ascending eastwards are "LU", descending
    "LD"; vertical pairs with the right block shifted up are "DU", shifted
    down "UD" (each kind is closed under 180-degree rotation).
    """

    kind: str
    block1: Block
    block2: Block
    hooking_vertices: tuple[Point, Point]


def find_skew_paths(p: Polyomino) -> list[SkewPath]:
    """All skew configurations: same-orientation maximal blocks of rank > 3
    whose vertex sets share exactly two (adjacent) vertices."""
    result = []
    for orientation in (HORIZONTAL, VERTICAL):
        blocks = [b for b in maximal_blocks(p, orientation) if b.rank > 3]
        vsets = [b.vertex_set() for b in blocks]
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                shared = vsets[i] & vsets[j]
                if len(shared) != 2:
                    continue
                hooks = tuple(sorted(shared))
                b1, b2 = blocks[i], blocks[j]
                if orientation == HORIZONTAL:
                    lower, upper = (b1, b2) if b1.a.ll.y < b2.a.ll.y else (b2, b1)
                    kind = "LU" if upper.a.ll.x >= lower.b.ll.x else "LD"
                    result.append(SkewPath(kind, lower, upper, hooks))
                else:
                    left, right = (b1, b2) if b1.a.ll.x < b2.a.ll.x else (b2, b1)
                    kind = "DU" if right.a.ll.y >= left.b.ll.y else "UD"
                    result.append(SkewPath(kind, left, right, hooks))
    result.sort(key=lambda s: (s.kind, s.hooking_vertices))
    return result


def _connected_union(lls: set) -> bool:
    lls = set(lls)
    stack = [min(lls)]
    seen = {stack[0]}
    while stack:
        x, y = stack.pop()
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb in lls and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(lls)
