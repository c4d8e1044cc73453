import pytest
from hypothesis import given, settings, strategies as st

from circlegeom import (
    ConvexGeometry,
    GroundSet,
    convex_dimension,
    family_encode,
    max_antichain_size,
    max_antichain_size_bruteforce,
    meet_irreducibles,
    subset_encode,
    upper_covers,
)
from circlegeom.sets import subset_elements

G3 = GroundSet(3)
CHAIN3 = 139


def test_upper_covers_chain3():
    g = ConvexGeometry(G3, CHAIN3)
    assert upper_covers(g, 0) == [1]
    assert upper_covers(g, 3) == [7]
    assert upper_covers(g, 7) == []


def test_upper_covers_requires_closed_set():
    g = ConvexGeometry(G3, CHAIN3)
    with pytest.raises(ValueError):
        upper_covers(g, 2)


def test_meet_irreducibles_examples():
    assert meet_irreducibles(ConvexGeometry(G3, CHAIN3)) == [0, 1, 3]
    assert meet_irreducibles(ConvexGeometry(G3, 255)) == [3, 5, 6]


def test_meet_irreducibles_chain_any_n():
    for n in (1, 2, 3, 4, 5):
        ground = GroundSet(n)
        chain_members = [(1 << k) - 1 for k in range(n + 1)]
        g = ConvexGeometry(ground, family_encode(chain_members, ground))
        assert meet_irreducibles(g) == chain_members[:-1]


def test_meet_irreducibles_match_intersection_definition(masks_by_n):
    # a member is meet-irreducible iff it is not the intersection of strictly
    # larger members (the full set never is, by the empty-intersection convention)
    for n in (1, 2, 3, 4):
        ground = GroundSet(n)
        full = ground.full_mask
        for mask in masks_by_n[n]:
            g = ConvexGeometry(ground, mask)
            irr = set(meet_irreducibles(g))
            for y in subset_elements(mask):
                if y == full:
                    assert y not in irr
                    continue
                acc = full
                for z in subset_elements(mask):
                    if z != y and y & z == y:
                        acc &= z
                assert (y in irr) == (acc != y)


def test_max_antichain_examples():
    chain = [0, 1, 3, 7, 15]
    assert max_antichain_size(chain) == 1
    singletons = [1, 2, 4, 8, 16]
    assert max_antichain_size(singletons) == 5
    assert max_antichain_size([1, 2, 3, 5]) == 2
    assert max_antichain_size([]) == 0


def test_max_antichain_rejects_duplicates():
    with pytest.raises(ValueError):
        max_antichain_size([1, 1])
    with pytest.raises(ValueError):
        max_antichain_size_bruteforce([3, 3])


def test_max_antichain_bruteforce_examples():
    assert max_antichain_size_bruteforce([0, 1, 3, 7]) == 1
    assert max_antichain_size_bruteforce([1, 2, 4]) == 3
    assert max_antichain_size_bruteforce([1, 2, 3, 5]) == 2


@settings(max_examples=150, deadline=None)
@given(elems=st.lists(st.integers(min_value=0, max_value=255), unique=True, max_size=14))
def test_matching_agrees_with_bruteforce_random(elems):
    assert max_antichain_size(elems) == max_antichain_size_bruteforce(elems)


def test_matching_agrees_with_bruteforce_on_catalog(masks_by_n):
    for n in (2, 3, 4):
        ground = GroundSet(n)
        for mask in masks_by_n[n]:
            irr = meet_irreducibles(ConvexGeometry(ground, mask))
            assert max_antichain_size(irr) == max_antichain_size_bruteforce(irr)


def test_convex_dimension_examples():
    assert convex_dimension(ConvexGeometry(G3, CHAIN3)) == 1
    for n in (1, 2, 3, 4, 5):
        ground = GroundSet(n)
        powerset = (1 << (1 << n)) - 1
        assert convex_dimension(ConvexGeometry(ground, powerset)) == n


def test_exactly_one_chain_geometry_per_n(masks_by_n):
    for n in (1, 2, 3, 4):
        ground = GroundSet(n)
        dims = [
            convex_dimension(ConvexGeometry(ground, mask)) for mask in masks_by_n[n]
        ]
        assert dims.count(1) == 1
        assert all(d >= 1 for d in dims)


def test_closed_sets_are_intersections_of_meet_irreducibles(masks_by_n):
    for n in (1, 2, 3, 4):
        ground = GroundSet(n)
        full = ground.full_mask
        for mask in masks_by_n[n]:
            g = ConvexGeometry(ground, mask)
            irr = meet_irreducibles(g)
            for y in subset_elements(mask):
                acc = full
                for m in irr:
                    if y & m == y:
                        acc &= m
                assert acc == y
