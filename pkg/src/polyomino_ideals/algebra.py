"""Monomials, pure-difference binomials, inner 2-minors, monomial orders,
and a Buchberger engine specialised to pure-difference binomial ideals.

Variables are the vertices of a polyomino; internally each vertex is an
integer id into a :class:`VariableSet` (sorted column-major), and a
monomial is the sorted tuple of its variable ids with multiplicity.  The
class of pure-difference binomials (m1 - m2) is closed under S-pairs and
reduction, so the whole engine is exact multiset arithmetic; coefficients
never leave {+1, -1}.
"""

from __future__ import annotations

import heapq
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import BudgetExceededError
from .lattice import Point, corners
from .polyomino import Polyomino, inner_intervals

Monomial = tuple[int, ...]

DEFAULT_BUDGET = 1_000_000


def step_budget(budget: int | None = None) -> int:
    """Effective step budget: explicit value, else POLY_BUDGET, else default."""
    if budget is not None:
        return budget
    env = os.environ.get("POLY_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


# ---------------------------------------------------------------- variables

class VariableSet:
    """Bijection between the vertices of a polyomino and variable ids 0..n-1."""

    __slots__ = ("points", "index")

    def __init__(self, points: Iterable[Point]):
        self.points = tuple(sorted(Point(*p) for p in points))
        self.index = {p: i for i, p in enumerate(self.points)}

    @classmethod
    def of_polyomino(cls, p: Polyomino) -> "VariableSet":
        return cls(p.vertex_list)

    def __len__(self):
        return len(self.points)

    def name(self, i: int) -> str:
        p = self.points[i]
        return f"x({p.x},{p.y})"

    def monomial(self, pts: Iterable[Point]) -> Monomial:
        return tuple(sorted(self.index[Point(*p)] for p in pts))

    def monomial_str(self, mono: Monomial) -> str:
        if not mono:
            return "1"
        parts = []
        i = 0
        while i < len(mono):
            j = i
            while j < len(mono) and mono[j] == mono[i]:
                j += 1
            parts.append(self.name(mono[i]) + (f"^{j - i}" if j - i > 1 else ""))
            i = j
        return "*".join(parts)


_NAME_RE = re.compile(r"^x\((-?\d+),(-?\d+)\)$")


def parse_variable_name(name: str) -> Point:
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"bad variable name: {name!r}")
    return Point(int(m.group(1)), int(m.group(2)))


# ---------------------------------------------------------------- monomials

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """Multiset inclusion a <= b (both sorted)."""
    i = 0
    n = len(a)
    if n > len(b):
        return False
    for x in b:
        if i == n:
            return True
        if a[i] == x:
            i += 1
        elif a[i] < x:
            return False
    return i == n


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """Multiset difference b - a; requires a | b."""
    out = []
    i = 0
    n = len(a)
    for x in b:
        if i < n and a[i] == x:
            i += 1
        else:
            out.append(x)
    return tuple(out)


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return mono_mul(a, mono_div(b, mono_gcd(a, b)))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            out.append(a[i])
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return tuple(out)


def mono_degree(a: Monomial) -> int:
    return len(a)


def mono_is_squarefree(a: Monomial) -> bool:
    return all(a[i] != a[i + 1] for i in range(len(a) - 1))


class Binomial(NamedTuple):
    """The pure difference plus - minus of two distinct monomials."""

    plus: Monomial
    minus: Monomial

    def support(self) -> frozenset[int]:
        return frozenset(self.plus) | frozenset(self.minus)


# ---------------------------------------------------------------- orders

class MonomialOrder:
    """A total multiplicative well-order on monomials.

    Two kinds: ``vertex_lex`` (lexicographic from a total order on the
    variables) and ``weight`` (exact rational weight sums, ties broken by a
    vertex-lex order).  ``ranks[i]`` is the rank of variable i; larger rank
    means larger variable.
    """

    __slots__ = ("kind", "variables", "ranks", "weights", "label")

    def __init__(self, kind, variables, ranks, weights=None, label=""):
        self.kind = kind
        self.variables = variables
        self.ranks = tuple(ranks)
        self.weights = None if weights is None else tuple(weights)
        self.label = label

    @classmethod
    def lex1(cls, variables: VariableSet) -> "MonomialOrder":
        """Lex from the column-major vertex order: (i,j) < (k,l) iff i < k,
        or i = k and j < l.  The package-wide default."""
        return cls("vertex_lex", variables, range(len(variables)), label="lex1")

    @classmethod
    def transposed_lex(cls, variables: VariableSet) -> "MonomialOrder":
        """Lex from the row-major vertex order (compare y first, then x)."""
        order = sorted(range(len(variables)), key=lambda i: (variables.points[i].y, variables.points[i].x))
        ranks = [0] * len(variables)
        for rank, i in enumerate(order):
            ranks[i] = rank
        return cls("vertex_lex", variables, ranks, label="lex-transposed")

    @classmethod
    def yset(cls, variables: VariableSet, y_points: Iterable[Point]) -> "MonomialOrder":
        """Lex where members of Y outrank non-members, column-major inside
        each class."""
        y = {Point(*p) for p in y_points}
        order = sorted(
            range(len(variables)),
            key=lambda i: (variables.points[i] in y, variables.points[i]),
        )
        ranks = [0] * len(variables)
        for rank, i in enumerate(order):
            ranks[i] = rank
        label = "yset:" + ";".join(f"{p.x},{p.y}" for p in sorted(y))
        return cls("vertex_lex", variables, ranks, label=label)

    @classmethod
    def from_vertex_order(cls, variables: VariableSet, descending: Sequence[Point], label="vertex-order") -> "MonomialOrder":
        """Lex from an explicit variable order, largest first."""
        n = len(variables)
        if sorted(descending) != list(variables.points):
            raise ValueError("vertex order must be a permutation of the variables")
        ranks = [0] * n
        for pos, p in enumerate(descending):
            ranks[variables.index[Point(*p)]] = n - 1 - pos
        return cls("vertex_lex", variables, ranks, label=label)

    @classmethod
    def from_weights(cls, variables: VariableSet, weight_map, label="weights") -> "MonomialOrder":
        """Weight order with column-major lex tiebreak; missing weights are 0."""
        weights = [Fraction(0)] * len(variables)
        for p, w in weight_map.items():
            weights[variables.index[Point(*p)]] = Fraction(w)
        return cls("weight", variables, range(len(variables)), weights=weights, label=label)

    def key(self, mono: Monomial):
        """Sort key; key(a) < key(b) iff a < b in the order."""
        lex = tuple(sorted((self.ranks[i] for i in mono), reverse=True))
        if self.kind == "vertex_lex":
            return lex
        return (sum((self.weights[i] for i in mono), Fraction(0)), lex)

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        """-1, 0 or +1 as m1 <, =, > m2."""
        if m1 == m2:
            return 0
        return -1 if self.key(m1) < self.key(m2) else 1

    def describe(self) -> dict:
        """JSON-serialisable description (ordered vertex list or weight table)."""
        desc_vertices = sorted(
            range(len(self.variables)), key=lambda i: self.ranks[i], reverse=True
        )
        out = {
            "kind": self.kind,
            "label": self.label,
            "vertex_order": [list(self.variables.points[i]) for i in desc_vertices],
        }
        if self.weights is not None:
            out["weights"] = [
                [self.variables.name(i), w.numerator, w.denominator]
                for i, w in enumerate(self.weights)
                if w
            ]
        return out


def initial_term(b: Binomial, order: MonomialOrder) -> Monomial:
    """The order-larger of the two monomials of the binomial."""
    return b.plus if order.compare(b.plus, b.minus) > 0 else b.minus


def orient(b: Binomial, order: MonomialOrder) -> Binomial:
    """Store the binomial with plus = initial term."""
    return b if order.compare(b.plus, b.minus) > 0 else Binomial(b.minus, b.plus)


# ---------------------------------------------------------------- inner minors

def inner_minors(p: Polyomino, variables: VariableSet | None = None) -> list[Binomial]:
    """One binomial per inner interval: diagonal product minus anti-diagonal
    product, listed in the canonical interval order."""
    variables = variables or VariableSet.of_polyomino(p)
    minors = []
    for iv in inner_intervals(p):
        cp = corners(iv)
        minors.append(
            Binomial(variables.monomial(cp.diagonal), variables.monomial(cp.antidiagonal))
        )
    return minors


def binomial_str(b: Binomial, variables: VariableSet) -> str:
    return f"{variables.monomial_str(b.plus)} - {variables.monomial_str(b.minus)}"


# ---------------------------------------------------------------- reduction

def _reduce_monomial(mono: Monomial, basis: Sequence[Binomial], counter) -> Monomial:
    """Rewrite mono by plus -> minus while some leading term divides it.

    Basis elements must be oriented.  Terminates because each rewrite
    strictly decreases the monomial in the (well-)order.
    """
    changed = True
    while changed:
        changed = False
        for g in basis:
            if mono_divides(g.plus, mono):
                mono = mono_mul(mono_div(mono, g.plus), g.minus)
                counter[0] += 1
                if counter[0] > counter[1]:
                    raise BudgetExceededError("reduction budget exhausted")
                changed = True
                break
    return mono


def normal_form(x, basis: Iterable[Binomial], order: MonomialOrder, budget: int | None = None):
    """Remainder of a monomial or binomial under division by the basis.

    Returns a Monomial for monomial input, and a Binomial or None (zero)
    for binomial input.  Pure differences stay pure differences or cancel.
    """
    oriented = [orient(g, order) for g in basis]
    counter = [0, step_budget(budget)]
    if isinstance(x, Binomial):
        plus = _reduce_monomial(x.plus, oriented, counter)
        minus = _reduce_monomial(x.minus, oriented, counter)
        if plus == minus:
            return None
        return orient(Binomial(plus, minus), order)
    return _reduce_monomial(tuple(x), oriented, counter)


def s_pair(f: Binomial, g: Binomial) -> Binomial | None:
    """S-binomial of two oriented binomials; None when it cancels exactly."""
    lcm = mono_lcm(f.plus, g.plus)
    left = mono_mul(mono_div(lcm, f.plus), f.minus)
    right = mono_mul(mono_div(lcm, g.plus), g.minus)
    if left == right:
        return None
    return Binomial(left, right)


# ---------------------------------------------------------------- Buchberger

@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Binomial, ...]
    order: MonomialOrder
    reduced: bool = True


def buchberger(gens: Iterable[Binomial], order: MonomialOrder, budget: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of a pure-difference binomial ideal.

    Normal selection strategy: the pending pair with the order-smallest lcm
    of leading terms is processed first, ties broken by the generator
    indices.  Pairs with coprime leading terms are skipped (their
    S-binomials reduce to zero).  Raises BudgetExceededError carrying the
    partial basis when the step budget runs out.
    """
    limit = step_budget(budget)
    counter = [0, limit]
    basis: list[Binomial] = []
    seen = set()
    for g in gens:
        if g.plus == g.minus:
            continue
        og = orient(g, order)
        if og not in seen:
            seen.add(og)
            basis.append(og)
    heap: list = []

    def push_pairs(j):
        for i in range(j):
            f, g = basis[i], basis[j]
            if not mono_gcd(f.plus, g.plus):
                continue  # coprime criterion
            lcm = mono_lcm(f.plus, g.plus)
            heapq.heappush(heap, (order.key(lcm), i, j))

    for j in range(len(basis)):
        push_pairs(j)

    try:
        while heap:
            counter[0] += 1
            if counter[0] > counter[1]:
                raise BudgetExceededError("pair budget exhausted")
            _, i, j = heapq.heappop(heap)
            sp = s_pair(basis[i], basis[j])
            if sp is None:
                continue
            plus = _reduce_monomial(sp.plus, basis, counter)
            minus = _reduce_monomial(sp.minus, basis, counter)
            if plus == minus:
                continue
            new = orient(Binomial(plus, minus), order)
            if new in seen:
                continue
            seen.add(new)
            basis.append(new)
            push_pairs(len(basis) - 1)
    except BudgetExceededError as exc:
        raise BudgetExceededError(
            str(exc), partial=GroebnerBasis(tuple(basis), order, reduced=False)
        ) from None

    reduced = _reduce_basis(basis, order, counter)
    for g in reduced:
        validate_binomial(g)  # purity: the engine never leaves pure differences
    return GroebnerBasis(tuple(reduced), order)


def _reduce_basis(basis: list[Binomial], order: MonomialOrder, counter) -> list[Binomial]:
    """Minimalise leading terms, then tail-reduce: the reduced basis."""
    minimal: list[Binomial] = []
    for g in sorted(basis, key=lambda b: order.key(b.plus)):
        if not any(mono_divides(h.plus, g.plus) for h in minimal):
            minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        minus = _reduce_monomial(g.minus, others, counter)
        out.append(Binomial(g.plus, minus))
    out.sort(key=lambda b: (order.key(b.plus), order.key(b.minus)))
    return out


def certify_groebner(gb: GroebnerBasis, budget: int | None = None) -> bool:
    """Check every S-pair of the basis reduces to zero (no pair skipped)."""
    elems = gb.elements
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            sp = s_pair(elems[i], elems[j])
            if sp is None:
                continue
            if normal_form(sp, elems, gb.order, budget) is not None:
                return False
    return True


def validate_binomial(b: Binomial) -> None:
    """Structural sanity for engine outputs: distinct sorted monomials."""
    if b.plus == b.minus:
        raise ValueError("degenerate binomial: plus == minus")
    for mono in (b.plus, b.minus):
        if tuple(sorted(mono)) != tuple(mono):
            raise ValueError("monomial not sorted")
