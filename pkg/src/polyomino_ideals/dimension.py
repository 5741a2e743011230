"""Krull dimension and height of the polyomino coordinate ring.

The route: Groebner basis -> initial monomial ideal -> dimension of the
monomial quotient, computed combinatorially.  For a monomial ideal J in n
variables, dim R/J is the largest size of a variable subset S containing
no generator's support; equivalently n minus a minimum hitting set of the
supports.  That value is order-independent and equals dim of the original
quotient by standard initial-ideal theory.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    Binomial,
    GroebnerBasis,
    Monomial,
    MonomialOrder,
    VariableSet,
    buchberger,
    inner_minors,
    mono_divides,
)
from .polyomino import Polyomino


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal generators of a monomial ideal with its ambient variables."""

    generators: tuple[Monomial, ...]
    variables: VariableSet

    @property
    def n_variables(self) -> int:
        return len(self.variables)


def monomial_ideal(generators: Sequence[Monomial], variables: VariableSet) -> MonomialIdeal:
    """Minimalise (no generator divides another) and sort the generators."""
    gens = sorted(set(tuple(g) for g in generators), key=lambda g: (len(g), g))
    minimal: list[Monomial] = []
    for g in gens:
        if not any(mono_divides(h, g) for h in minimal):
            minimal.append(g)
    return MonomialIdeal(tuple(sorted(minimal)), variables)


@dataclass(frozen=True)
class FaceComplex:
    """Faces = variable subsets containing no forbidden support."""

    n_variables: int
    forbidden_supports: tuple[frozenset[int], ...]

    def is_face(self, subset) -> bool:
        s = frozenset(subset)
        return not any(f <= s for f in self.forbidden_supports)


def face_complex(ideal: MonomialIdeal) -> FaceComplex:
    supports = sorted({frozenset(g) for g in ideal.generators}, key=sorted)
    return FaceComplex(ideal.n_variables, tuple(supports))


def initial_ideal(
    p: Polyomino, order: MonomialOrder | None = None, budget: int | None = None
) -> MonomialIdeal:
    """Minimal generators of the ideal of leading monomials of the reduced
    Groebner basis of the inner-2-minor ideal."""
    variables = VariableSet.of_polyomino(p)
    order = order or MonomialOrder.lex1(variables)
    gb = groebner_basis(p, order, budget)
    return monomial_ideal([g.plus for g in gb.elements], variables)


def groebner_basis(
    p: Polyomino, order: MonomialOrder | None = None, budget: int | None = None
) -> GroebnerBasis:
    variables = VariableSet.of_polyomino(p)
    order = order or MonomialOrder.lex1(variables)
    gens: list[Binomial] = inner_minors(p, variables)
    return buchberger(gens, order, budget)


def monomial_quotient_dim(ideal: MonomialIdeal) -> int:
    """dim of R/J: n minus a minimum hitting set of the generator supports.

    Supports (not exponents) are what matter, so non-squarefree generators
    are handled by taking radicals implicitly.  Exact branch and bound.
    """
    n = ideal.n_variables
    supports = sorted({frozenset(g) for g in ideal.generators}, key=lambda s: (len(s), sorted(s)))
    if any(not s for s in supports):
        raise ValueError("constant generator: quotient ring is zero")
    # drop supersets
    kept: list[frozenset[int]] = []
    for s in supports:
        if not any(t <= s for t in kept):
            kept.append(s)
    if not kept:
        return n
    best = [len(kept)]  # upper bound: hit each support separately

    def lower_bound(uncovered):
        # greedy pairwise-disjoint supports are a valid lower bound
        used: set[int] = set()
        count = 0
        for s in uncovered:
            if not (s & used):
                used |= s
                count += 1
        return count

    def search(uncovered, size):
        if not uncovered:
            if size < best[0]:
                best[0] = size
            return
        if size + lower_bound(uncovered) >= best[0]:
            return
        pivot = min(uncovered, key=lambda s: (len(s), sorted(s)))
        for v in sorted(pivot):
            rest = [s for s in uncovered if v not in s]
            search(rest, size + 1)

    search(kept, 0)
    return n - best[0]


def krull_dim(p: Polyomino, order: MonomialOrder | None = None, budget: int | None = None) -> int:
    """Krull dimension of the coordinate ring of the polyomino."""
    return monomial_quotient_dim(initial_ideal(p, order, budget))


def height(p: Polyomino, order: MonomialOrder | None = None, budget: int | None = None) -> int:
    """Height (codimension) of the inner-2-minor ideal."""
    return len(p.vertices) - krull_dim(p, order, budget)
