"""Meet-irreducible members and convex dimension via maximum antichains of
the inclusion order (computed through a minimum chain cover)."""

from __future__ import annotations

from typing import Sequence

from circlegeom.sets import ConvexGeometry, _check_subset, subset_elements


def upper_covers(g: ConvexGeometry, y: int) -> list[int]:
    """Members of g of the form y + {a}.  In a convex geometry these are
    exactly the covers of y in the inclusion order of the family."""
    _check_subset(y, g.ground)
    if not g.family >> y & 1:
        raise ValueError(f"subset {y} is not closed in the geometry")
    out = []
    for i in range(g.ground.n):
        b = 1 << i
        if not y & b and g.family >> (y | b) & 1:
            out.append(y | b)
    return out


def meet_irreducibles(g: ConvexGeometry) -> list[int]:
    """Closed sets other than the full set with exactly one upper cover;
    equivalently the members that are not intersections of strictly larger
    members."""
    full = g.ground.full_mask
    return [
        y
        for y in subset_elements(g.family)
        if y != full and len(upper_covers(g, y)) == 1
    ]


def max_antichain_size(elements: Sequence[int]) -> int:
    """Largest antichain of the given subset masks under inclusion.

    Uses the minimum-chain-cover identity: the poset splits into
    len(elements) - M chains, where M is a maximum matching of the strict
    containment relation, and the largest antichain has that same size.
    """
    elems = list(elements)
    if len(set(elems)) != len(elems):
        raise ValueError("poset elements must be distinct")
    m = len(elems)
    if m == 0:
        return 0
    below = [
        [j for j, z in enumerate(elems) if y != z and y & z == y]
        for y in elems
    ]
    match_right = [-1] * m

    def augment(i: int, seen: list[bool]) -> bool:
        for j in below[i]:
            if not seen[j]:
                seen[j] = True
                if match_right[j] < 0 or augment(match_right[j], seen):
                    match_right[j] = i
                    return True
        return False

    matched = 0
    for i in range(m):
        if augment(i, [False] * m):
            matched += 1
    return m - matched


def max_antichain_size_bruteforce(elements: Sequence[int]) -> int:
    """Exhaustive maximum-antichain search, kept as an independent oracle
    for the matching-based computation (practical up to ~32 elements)."""
    elems = list(elements)
    if len(set(elems)) != len(elems):
        raise ValueError("poset elements must be distinct")
    m = len(elems)
    comparable = [0] * m
    for i, y in enumerate(elems):
        for j, z in enumerate(elems):
            if i != j and (y & z == y or y & z == z):
                comparable[i] |= 1 << j

    def best(cand: int) -> int:
        if cand == 0:
            return 0
        # pick the candidate with the most comparabilities left; if none has
        # any, the remaining candidates already form an antichain
        pick = -1
        pick_deg = 0
        rest = cand
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            deg = (comparable[i] & cand).bit_count()
            if deg > pick_deg:
                pick = i
                pick_deg = deg
        if pick < 0:
            return cand.bit_count()
        b = 1 << pick
        with_pick = 1 + best(cand & ~comparable[pick] & ~b)
        without_pick = best(cand & ~b)
        return max(with_pick, without_pick)

    return best((1 << m) - 1)


def convex_dimension(g: ConvexGeometry) -> int:
    """Largest antichain of meet-irreducibles: the least number of chain
    alignments whose join reproduces the geometry."""
    return max_antichain_size(meet_irreducibles(g))
