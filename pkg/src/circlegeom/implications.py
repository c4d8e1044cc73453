"""Implications (Horn-style rules) defining a geometry's closure operator:
generation, pairwise redundancy reduction, the induced alignment, and
tightness of single-conclusion implications."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from circlegeom.sets import (
    ConvexGeometry,
    GroundSet,
    _check_subset,
    closure_table,
    subset_elements,
)


@dataclass(frozen=True)
class Implication:
    """An ordered rule premise -> conclusion over subset masks.

    Normalized form: nonempty premise, nonempty conclusion, disjoint sides.
    """

    premise: int
    conclusion: int

    def __post_init__(self) -> None:
        if self.premise <= 0:
            raise ValueError("implication premise must be nonempty")
        if self.conclusion <= 0:
            raise ValueError("implication conclusion must be nonempty")
        if self.premise & self.conclusion:
            raise ValueError("implication premise and conclusion must be disjoint")

    def subsumes(self, other: "Implication") -> bool:
        """True when this rule makes `other` redundant: premise contained in
        other's premise and conclusion containing other's conclusion."""
        return (
            self.premise & other.premise == self.premise
            and other.conclusion & self.conclusion == other.conclusion
        )


@dataclass(frozen=True)
class ImplicationBasis:
    """A deterministic, pairwise-irredundant list of implications."""

    ground: GroundSet
    rules: tuple[Implication, ...]


def implication_holds(
    g: ConvexGeometry, imp: Implication | tuple[int, int]
) -> bool:
    """True iff the conclusion is contained in the closure of the premise.

    Accepts a normalized Implication or a raw (premise, conclusion) mask pair
    (the raw form also covers trivial rules like X -> X)."""
    premise, conclusion = (
        (imp.premise, imp.conclusion) if isinstance(imp, Implication) else imp
    )
    _check_subset(premise, g.ground)
    _check_subset(conclusion, g.ground)
    table = closure_table(g.family, g.ground.n)
    return conclusion & table[premise] == conclusion


def reduce_pairwise(rules: Sequence[Implication]) -> list[Implication]:
    """Drop every rule made redundant by a different rule with a smaller
    premise and a larger conclusion; exact duplicates collapse to one.
    The result is sorted by (premise, conclusion)."""
    unique = sorted(set(rules), key=lambda r: (r.premise, r.conclusion))
    # Subsumption between distinct rules is antisymmetric and transitive, so
    # keeping exactly the unsubsumed rules is order-independent.
    return [
        r
        for r in unique
        if not any(o is not r and o.subsumes(r) for o in unique)
    ]


def generate_basis(g: ConvexGeometry) -> ImplicationBasis:
    """Pairwise-reduced basis built from the rules A -> cl(A) \\ A for every
    nonempty non-closed A.  The induced alignment reproduces g exactly."""
    table = closure_table(g.family, g.ground.n)
    rules = []
    for a in range(1, 1 << g.ground.n):
        if g.family >> a & 1:
            continue
        rules.append(Implication(a, table[a] & ~a))
    return ImplicationBasis(g.ground, tuple(reduce_pairwise(rules)))


def alignment_from_implications(basis: ImplicationBasis) -> int:
    """Family of every subset that respects all rules (premise inside the
    subset forces the conclusion inside).  Always intersection-closed and
    containing the full set."""
    family = 0
    for w in range(1 << basis.ground.n):
        for rule in basis.rules:
            if rule.premise & w == rule.premise and rule.conclusion & w != rule.conclusion:
                break
        else:
            family |= 1 << w
    return family


def is_tight(g: ConvexGeometry, premise: int, u: int) -> bool:
    """True iff premise -> u holds but (premise minus z) -> u fails for every
    z in the premise.  Raises ValueError unless premise -> u holds with u
    outside the premise."""
    _check_subset(premise, g.ground)
    bu = 1 << u
    if u < 0 or u >= g.ground.n or premise & bu:
        raise ValueError("conclusion element must lie outside the premise")
    table = closure_table(g.family, g.ground.n)
    if not table[premise] & bu:
        raise ValueError("implication does not hold")
    return _tight(table, premise, bu)


def _tight(table: list[int], premise: int, bu: int) -> bool:
    rest = premise
    while rest:
        low = rest & -rest
        if table[premise ^ low] & bu:
            return False
        rest ^= low
    return True


def tight_implications(
    g: ConvexGeometry, premise_size: int | None = None
) -> list[tuple[int, int]]:
    """All pairs (premise mask, element) whose implication holds and is tight,
    optionally restricted to premises of a given size, ordered by (premise, element)."""
    table = closure_table(g.family, g.ground.n)
    out = []
    for y in range(1, 1 << g.ground.n):
        if premise_size is not None and y.bit_count() != premise_size:
            continue
        gained = table[y] & ~y
        for u in subset_elements(gained):
            if _tight(table, y, 1 << u):
                out.append((y, u))
    return out
