"""Koenig-type certificates for inner-2-minor ideals.

A certificate selects h = height(I) inner 2-minors together with one of
the two monomials of each as its intended initial term, and witnesses the
existence of a monomial order realising that selection by an exact
rational weight vector (strict inequality per minor, lex tiebreak).
Pairwise-coprime initial terms of degree two then form a regular
sequence, and distinct inner 2-minors are part of a minimal generating
system, which together make the ideal Koenig type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .algebra import parse_variable_name, step_budget
from .configurations import ClosedPathSequence, changes_of_direction, closed_path_sequence
from .dimension import height as compute_height
from .errors import BudgetExceededError, NotClosedPathError
from .lattice import Interval, Point, corners
from .polyomino import Polyomino, inner_intervals

DIAG = "diag"
ANTIDIAG = "antidiag"


class SelectionEntry(NamedTuple):
    """One inner 2-minor with its intended initial monomial.

    ``chosen`` names which corner-pair product of the interval's minor is
    to become the initial term: "diag" for the plus monomial, "antidiag"
    for the minus one.
    """

    interval: Interval
    chosen: str


InitialSelection = Sequence[SelectionEntry]


def entry_monomials(entry: SelectionEntry) -> tuple[tuple[Point, Point], tuple[Point, Point]]:
    """(chosen pair, other pair) of vertex points for one entry."""
    cp = corners(entry.interval)
    if entry.chosen == DIAG:
        return cp.diagonal, cp.antidiagonal
    if entry.chosen == ANTIDIAG:
        return cp.antidiagonal, cp.diagonal
    raise ValueError(f"chosen must be 'diag' or 'antidiag', got {entry.chosen!r}")


@dataclass(frozen=True)
class KoenigCertificate:
    """Selection plus witnessing weights and a compatible vertex order.

    ``weights`` maps vertices to exact rationals (absent means zero); the
    witnessing monomial order is weight-compare with column-major lex
    tiebreak.  ``vertex_order`` lists the variables from largest to
    smallest under a compatible total order.
    """

    entries: tuple[SelectionEntry, ...]
    weights: tuple[tuple[Point, Fraction], ...]
    vertex_order: tuple[Point, ...]

    def weight_map(self) -> dict[Point, Fraction]:
        return dict(self.weights)


def make_certificate(entries: Iterable[SelectionEntry], weights: dict[Point, Fraction]) -> KoenigCertificate:
    entries = tuple(entries)
    weights = {p: Fraction(w) for p, w in weights.items() if w}
    vertex_order = _vertex_order_from_weights(entries, weights)
    return KoenigCertificate(
        entries=entries,
        weights=tuple(sorted(weights.items())),
        vertex_order=vertex_order,
    )


def _vertex_order_from_weights(entries, weights) -> tuple[Point, ...]:
    pts = set(weights)
    for e in entries:
        chosen, other = entry_monomials(e)
        pts.update(chosen)
        pts.update(other)
    return tuple(sorted(pts, key=lambda p: (weights.get(p, Fraction(0)), p), reverse=True))


# ---------------------------------------------------------------- feasibility

def weight_feasible(selection: InitialSelection) -> dict[Point, Fraction] | None:
    """Exact rational weights making every chosen monomial strictly heavier
    than its partner, or None if no such weights exist.

    Any feasible weight vector extends to a monomial order by lex
    tiebreak, so feasibility is equivalent to the existence of an order
    realising the selection.
    """
    entries = list(selection)
    if not entries:
        return {}
    pts = sorted({q for e in entries for pair in entry_monomials(e) for q in pair})
    index = {p: i for i, p in enumerate(pts)}
    rows = []
    for e in entries:
        chosen, other = entry_monomials(e)
        row = [0] * len(pts)
        for q in chosen:
            row[index[q]] += 1
        for q in other:
            row[index[q]] -= 1
        rows.append(row)
    sol = _feasible_nonnegative(rows)
    if sol is None:
        return None
    return {pts[i]: w for i, w in enumerate(sol) if w}


def _feasible_nonnegative(rows: list[list[int]]) -> list[Fraction] | None:
    """Solve A w >= 1, w >= 0 exactly (phase-I simplex, Bland's rule).

    Returns a feasible w or None.  The constraint rows here have as many
    +1 as -1 entries, so the system is shift-invariant and w >= 0 loses
    no generality.
    """
    m = len(rows)
    n = len(rows[0])
    width = n + 2 * m  # w, surplus, artificial
    tab = []
    for i, row in enumerate(rows):
        r = [Fraction(v) for v in row] + [Fraction(0)] * (2 * m) + [Fraction(1)]
        r[n + i] = Fraction(-1)
        r[n + m + i] = Fraction(1)
        tab.append(r)
    basis = [n + m + i for i in range(m)]
    # reduced costs for min sum(artificials); artificials are basic at cost 1
    z = [Fraction(0)] * (width + 1)
    for j in range(width + 1):
        z[j] = -sum(tab[i][j] for i in range(m))
    for i in range(m):
        z[n + m + i] += Fraction(1)

    while True:
        enter = next((j for j in range(width) if z[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][width] / tab[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # cannot happen: objective bounded below by 0
            raise RuntimeError("unbounded phase-I objective")
        _, r = best
        piv = tab[r][enter]
        tab[r] = [v / piv for v in tab[r]]
        for i in range(m):
            if i != r and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[r])]
        if z[enter]:
            f = z[enter]
            z = [a - f * b for a, b in zip(z, tab[r])]
        basis[r] = enter

    if -z[width] != 0:  # objective value = -z[rhs]
        return None
    w = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            w[b] = tab[i][width]
    return w


# ---------------------------------------------------------------- verification

@dataclass(frozen=True)
class VerificationCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    checks: tuple[VerificationCheck, ...]

    def failed(self) -> list[VerificationCheck]:
        return [c for c in self.checks if not c.passed]


def verify_certificate(p: Polyomino, cert: KoenigCertificate, budget: int | None = None) -> VerificationReport:
    """Run the five certificate checks in order.

    (a) entries are distinct inner 2-minors of the polyomino;
    (b) the entry count equals the ideal height (rank for closed paths);
    (c) chosen monomials are pairwise coprime;
    (d) the weight inequalities hold strictly;
    (e) the minors are linearly independent over the rationals.
    """
    checks = []
    inner = set(inner_intervals(p))
    bad = [str(e.interval) for e in cert.entries if e.interval not in inner]
    dupes = len(cert.entries) != len({e.interval for e in cert.entries})
    detail = []
    if bad:
        detail.append("not inner: " + ", ".join(bad))
    if dupes:
        detail.append("duplicate intervals")
    checks.append(VerificationCheck("a:inner-minors", not bad and not dupes, "; ".join(detail)))

    seq = closed_path_sequence(p)
    if seq is not None:
        expected = p.rank
        source = "rank (closed path)"
    else:
        expected = compute_height(p, budget=budget)
        source = "computed height"
    checks.append(
        VerificationCheck(
            "b:entry-count",
            len(cert.entries) == expected,
            f"expected {expected} ({source}), got {len(cert.entries)}",
        )
    )

    clash = None
    seen: dict[Point, int] = {}
    for k, e in enumerate(cert.entries):
        chosen, _ = entry_monomials(e)
        for q in chosen:
            if q in seen:
                clash = f"entries {seen[q]} and {k} share {q}"
                break
            seen[q] = k
        if clash:
            break
    checks.append(VerificationCheck("c:coprime-initials", clash is None, clash or ""))

    w = cert.weight_map()
    slack_bad = []
    for k, e in enumerate(cert.entries):
        chosen, other = entry_monomials(e)
        lhs = sum((w.get(q, Fraction(0)) for q in chosen), Fraction(0))
        rhs = sum((w.get(q, Fraction(0)) for q in other), Fraction(0))
        if not lhs > rhs:
            slack_bad.append(f"entry {k}: {lhs} <= {rhs}")
    checks.append(VerificationCheck("d:strict-weights", not slack_bad, "; ".join(slack_bad)))

    rank = _minor_matrix_rank(cert.entries)
    checks.append(
        VerificationCheck(
            "e:linear-independence",
            rank == len(cert.entries),
            f"rank {rank} of {len(cert.entries)}",
        )
    )
    return VerificationReport(ok=all(c.passed for c in checks), checks=tuple(checks))


def _minor_matrix_rank(entries: Sequence[SelectionEntry]) -> int:
    """Exact rank of the +-1 coefficient matrix of the minors on the basis
    of degree-two monomials."""
    cols: dict[tuple[Point, Point], int] = {}
    rows = []
    for e in entries:
        cp = corners(e.interval)
        row = {}
        for mono, coeff in ((cp.diagonal, 1), (cp.antidiagonal, -1)):
            cols.setdefault(mono, len(cols))
            row[cols[mono]] = Fraction(coeff)
        rows.append(row)
    dense = [[row.get(j, Fraction(0)) for j in range(len(cols))] for row in rows]
    rank = 0
    col = 0
    while rank < len(dense) and col < len(cols):
        pivot = next((i for i in range(rank, len(dense)) if dense[i][col]), None)
        if pivot is None:
            col += 1
            continue
        dense[rank], dense[pivot] = dense[pivot], dense[rank]
        pv = dense[rank][col]
        dense[rank] = [v / pv for v in dense[rank]]
        for i in range(len(dense)):
            if i != rank and dense[i][col]:
                f = dense[i][col]
                dense[i] = [a - f * b for a, b in zip(dense[i], dense[rank])]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------- search

def search_certificate(
    p: Polyomino,
    h: int | None = None,
    budget: int | None = None,
) -> KoenigCertificate | None:
    """Complete backtracking search for a certificate; None means exhausted.

    Vertices are processed in column-major order; the least undecided
    vertex is either covered by a chosen corner pair of an unused inner
    interval (options explored by (partner, interval) lexicographically)
    or skipped, within the budget |V| - 2h of skippable vertices.  Every
    extension is pruned by exact rational weight feasibility, so an
    exhausted search is a definitive negative over all monomial orders.
    Raises BudgetExceededError when the node cap is hit.
    """
    if h is None:
        h = p.rank if closed_path_sequence(p) is not None else compute_height(p, budget=budget)
    vertices = list(p.vertex_list)
    n = len(vertices)
    if 2 * h > n:
        return None
    intervals = inner_intervals(p)
    pair_options: dict[Point, list[tuple[Point, int, str]]] = {v: [] for v in vertices}
    for idx, iv in enumerate(intervals):
        cp = corners(iv)
        for side, pair in ((DIAG, cp.diagonal), (ANTIDIAG, cp.antidiagonal)):
            a, b = pair
            pair_options[a].append((b, idx, side))
            pair_options[b].append((a, idx, side))
    side_rank = {DIAG: 0, ANTIDIAG: 1}
    for v in pair_options:
        pair_options[v].sort(key=lambda t: (t[0], t[1], side_rank[t[2]]))

    limit = step_budget(budget)
    nodes = [0]
    decided: dict[Point, bool] = {}
    used_intervals = [False] * len(intervals)
    entries: list[SelectionEntry] = []
    cached_w: dict[Point, Fraction] = {}

    def entry_value(entry, w):
        chosen, other = entry_monomials(entry)
        return sum((w.get(q, Fraction(0)) for q in chosen), Fraction(0)) - sum(
            (w.get(q, Fraction(0)) for q in other), Fraction(0)
        )

    def feasible_with(entry) -> dict[Point, Fraction] | None:
        nonlocal cached_w
        if entry_value(entry, cached_w) > 0:
            return cached_w
        return weight_feasible(entries + [entry])

    def dfs(pos: int, skips: int):
        nonlocal cached_w
        nodes[0] += 1
        if nodes[0] > limit:
            raise BudgetExceededError("search node budget exhausted")
        if len(entries) == h:
            w = weight_feasible(entries)
            assert w is not None
            return make_certificate(entries, w)
        while pos < n and vertices[pos] in decided:
            pos += 1
        if pos == n:
            return None
        v = vertices[pos]
        for partner, idx, side in pair_options[v]:
            if used_intervals[idx] or partner in decided or partner == v:
                continue
            entry = SelectionEntry(intervals[idx], side)
            saved_w = cached_w
            w = feasible_with(entry)
            if w is None:
                continue
            cached_w = w
            entries.append(entry)
            used_intervals[idx] = True
            decided[v] = True
            decided[partner] = True
            found = dfs(pos + 1, skips)
            if found is not None:
                return found
            decided.pop(partner)
            decided.pop(v)
            used_intervals[idx] = False
            entries.pop()
            cached_w = saved_w
        if skips > 0:
            decided[v] = False
            found = dfs(pos + 1, skips - 1)
            if found is not None:
                return found
            decided.pop(v)
        return None

    return dfs(0, n - 2 * h)


# ---------------------------------------------------------------- walk order

class WalkResult(NamedTuple):
    certificate: KoenigCertificate | None
    fallback: bool


def walk_order(p: Polyomino, budget: int | None = None) -> WalkResult:
    """Certificate for a closed path via a cycle-order labelling.

    Walks the cell cycle assigning to each cell a corner pair of an inner
    interval containing it; the emitted order has the two-block shape
    x_1 > ... > x_n > x_1' > ... > x_n' (pair firsts in cycle order, then
    pair seconds), realised by powers-of-two weights.  The cycle is
    rotated to start at a skew tetromino when one exists, else at an
    L-configuration turn.  The result is always verified; on failure the
    complete search runs instead and the fallback is flagged.
    """
    seq = closed_path_sequence(p)
    if seq is None:
        raise NotClosedPathError("not a closed path")
    n = seq.length
    for cells in _seed_rotations(seq):
        assignment = _walk_assignment(p, cells)
        if assignment is None:
            continue
        order = [pair[0] for pair in assignment] + [pair[1] for pair in assignment]
        weights = {pt: Fraction(2 ** (2 * n - k)) for k, pt in enumerate(order)}
        entries = [SelectionEntry(iv, side) for (_, _, iv, side) in assignment]
        cert = KoenigCertificate(
            entries=tuple(entries),
            weights=tuple(sorted(weights.items())),
            vertex_order=tuple(order),
        )
        if verify_certificate(p, cert, budget=budget).ok:
            return WalkResult(cert, fallback=False)
    return WalkResult(search_certificate(p, h=p.rank, budget=budget), fallback=True)


def _seed_rotations(seq, max_seeds: int = 8):
    """Candidate cycle rotations/reflections to seed the walk: starts where
    a skew tetromino sits at positions 1..4, then starts putting an
    isolated change of direction at position 3, in both directions."""
    cells = list(seq.cells)
    n = len(cells)
    for direction in (cells, [cells[0]] + cells[:0:-1]):
        turns = set(changes_of_direction(ClosedPathSequence(tuple(direction))))
        starts = [i for i in range(n) if (i + 1) % n in turns and (i + 2) % n in turns]
        starts += [
            (t - 2) % n
            for t in sorted(turns)
            if (t - 1) % n not in turns and (t + 1) % n not in turns
        ]
        starts = starts or [0]
        for i in starts[: max_seeds // 2]:
            yield direction[i:] + direction[:i]


def _walk_assignment(p: Polyomino, cells: list, node_cap: int = 60_000):
    """Assign each cycle cell a corner pair (first, second, interval, side).

    Backtracking in cycle order under the constraints that pairs partition
    the vertex set, intervals are pairwise distinct and contain their
    cell, and no other corner of a cell's interval was labelled with an
    earlier pair-first (which would steal the initial term under the
    final two-block lex order).  Returns None when no assignment exists or
    the node cap is hit; the caller then falls back to the full search.
    """
    n = len(cells)
    intervals = inner_intervals(p)
    cell_lls = [c.ll for c in cells]
    cell_pos = {ll: i for i, ll in enumerate(cell_lls)}
    by_cell: list[list[int]] = [[] for _ in range(n)]
    corner_data = []
    areas = []
    for idx, iv in enumerate(intervals):
        cp = corners(iv)
        corner_data.append(cp)
        lls = list(iv.cell_lls())
        areas.append(len(lls))
        for ll in lls:
            by_cell[cell_pos[ll]].append(idx)
    for i in range(n):
        by_cell[i].sort(key=lambda idx: (areas[idx], idx))  # own cell first
    # every pairing option of each vertex: (interval, partner, last cell pos)
    options: dict[Point, list[tuple[int, Point, int]]] = {v: [] for v in p.vertices}
    for idx, iv in enumerate(intervals):
        cp = corner_data[idx]
        hi = max(cell_pos[ll] for ll in iv.cell_lls())
        for a, b in (cp.diagonal, cp.antidiagonal):
            options[a].append((idx, b, hi))
            options[b].append((idx, a, hi))

    by_deadline: dict[int, list[Point]] = {}
    for v, opts in options.items():
        by_deadline.setdefault(max(hi for _, _, hi in opts), []).append(v)

    label: dict[Point, tuple[str, int]] = {}
    used = [False] * len(intervals)
    result: list[tuple[Point, Point, Interval, str]] = []
    nodes = [0]

    def viable(i: int) -> bool:
        # every unassigned vertex still has a live pairing in a later cell
        for v, opts in options.items():
            if v in label:
                continue
            if not any(
                hi > i and not used[idx] and partner not in label
                for idx, partner, hi in opts
            ):
                return False
        return True

    def dfs(i: int):
        if i == n:
            return len(label) == len(p.vertices)
        nodes[0] += 1
        if nodes[0] > node_cap:
            return False
        # vertices running out of chances must be covered by this very cell
        must = [v for v in by_deadline.get(i, ()) if v not in label]
        if len(must) > 2:
            return False
        for idx in by_cell[i]:
            if used[idx]:
                continue
            cp = corner_data[idx]
            for side, pair in ((DIAG, cp.diagonal), (ANTIDIAG, cp.antidiagonal)):
                a, b = pair
                if a in label or b in label:
                    continue
                if any(v not in pair for v in must):
                    continue
                other = cp.antidiagonal if side == DIAG else cp.diagonal
                if any(label.get(q, ("", 0))[0] == "p" for q in other):
                    continue
                for first, second in ((a, b), (b, a)):
                    label[first] = ("p", i)
                    label[second] = ("q", i)
                    used[idx] = True
                    result.append((first, second, intervals[idx], side))
                    if viable(i) and dfs(i + 1):
                        return True
                    result.pop()
                    used[idx] = False
                    del label[first]
                    del label[second]
        return False

    if dfs(0):
        return result
    return None


# ---------------------------------------------------------------- serialisation

def certificate_to_json(cert: KoenigCertificate) -> dict:
    return {
        "entries": [
            {"interval": [list(e.interval.lo), list(e.interval.hi)], "initial": e.chosen}
            for e in cert.entries
        ],
        "weights": [
            [f"x({p.x},{p.y})", w.numerator, w.denominator] for p, w in cert.weights
        ],
        "vertex_order": [list(p) for p in cert.vertex_order],
    }


def certificate_from_json(obj: dict) -> KoenigCertificate:
    entries = tuple(
        SelectionEntry(
            Interval(Point(*e["interval"][0]), Point(*e["interval"][1])), e["initial"]
        )
        for e in obj["entries"]
    )
    weights = tuple(
        sorted(
            (parse_variable_name(name), Fraction(int(num), int(den)))
            for name, num, den in obj["weights"]
        )
    )
    vertex_order = tuple(Point(*v) for v in obj["vertex_order"])
    return KoenigCertificate(entries=entries, weights=weights, vertex_order=vertex_order)
