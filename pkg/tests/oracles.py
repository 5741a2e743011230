"""Independent brute-force oracles used to freeze expected test values.

These deliberately avoid the library's optimised code paths: inner
intervals by direct per-cell scans, holes by flood fill on a wide window,
quotient dimension by exhaustive subset enumeration, and the Koenig
oracle by iterating every h-subset of minors with every initial choice.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from polyomino_ideals.koenig import SelectionEntry, weight_feasible
from polyomino_ideals.lattice import Interval, Point


def brute_inner_intervals(p) -> list[Interval]:
    """All proper intervals of the bounding box whose cells all lie in p,
    checked cell by cell without prefix sums."""
    bb = p.bounding_box()
    out = []
    for x1 in range(bb.lo.x, bb.hi.x):
        for x2 in range(x1 + 1, bb.hi.x + 1):
            for y1 in range(bb.lo.y, bb.hi.y):
                for y2 in range(y1 + 1, bb.hi.y + 1):
                    if all(
                        (x, y) in p.cell_set
                        for x in range(x1, x2)
                        for y in range(y1, y2)
                    ):
                        out.append(Interval(Point(x1, y1), Point(x2, y2)))
    return sorted(out)


def brute_holes(cell_set) -> list[frozenset]:
    """Connected components of the complement that cannot reach the edge of
    a window padded by three rings."""
    xs = [c[0] for c in cell_set]
    ys = [c[1] for c in cell_set]
    x0, x1 = min(xs) - 3, max(xs) + 3
    y0, y1 = min(ys) - 3, max(ys) + 3
    complement = {
        (x, y)
        for x in range(x0, x1 + 1)
        for y in range(y0, y1 + 1)
        if (x, y) not in cell_set
    }
    comps = []
    while complement:
        seed = min(complement)
        stack, comp = [seed], {seed}
        complement.discard(seed)
        while stack:
            x, y = stack.pop()
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb in complement:
                    complement.discard(nb)
                    comp.add(nb)
                    stack.append(nb)
        touches_rim = any(x in (x0, x1) or y in (y0, y1) for x, y in comp)
        if not touches_rim:
            comps.append(frozenset(comp))
    return comps


def brute_quotient_dim(n_vars: int, supports: list[frozenset]) -> int:
    """Largest subset of variables containing no generator support, by
    vectorised enumeration of all 2^n subsets as bitmasks."""
    masks = np.arange(1 << n_vars, dtype=np.int64)
    ok = np.ones(1 << n_vars, dtype=bool)
    for s in supports:
        bits = 0
        for v in s:
            bits |= 1 << v
        if bits == 0:
            raise ValueError("constant generator")
        ok &= (masks & bits) != bits
    pop = np.zeros(1 << n_vars, dtype=np.int8)
    for b in range(n_vars):
        pop[(masks & (1 << b)) != 0] += 1
    return int(pop[ok].max())


def brute_koenig_verdict(p, h: int, inner) -> bool:
    """True iff some h-subset of minors with some initial choice has
    pairwise-coprime chosen monomials and feasible weights.

    Iterates every h-subset in lexicographic order; within a subset the
    2^h side choices are walked minor by minor, abandoning a branch as
    soon as a chosen vertex repeats (such branches fail the coprimality
    test for every completion).
    """
    from polyomino_ideals.lattice import corners

    pairs = [(corners(iv).diagonal, corners(iv).antidiagonal) for iv in inner]

    def choose(subset, k, used, entries):
        if k == h:
            return weight_feasible(entries) is not None
        i = subset[k]
        for side, pair in ((("diag"), pairs[i][0]), (("antidiag"), pairs[i][1])):
            a, b = pair
            if a in used or b in used:
                continue
            if choose(subset, k + 1, used | {a, b}, entries + [SelectionEntry(inner[i], side)]):
                return True
        return False

    return any(
        choose(subset, 0, frozenset(), []) for subset in combinations(range(len(inner)), h)
    )
