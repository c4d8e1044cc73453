"""Implication bases, pairwise redundancy reduction, tight implications, and
convex dimension for a few small geometries."""

from circlegeom import (
    ConvexGeometry,
    GroundSet,
    Implication,
    alignment_from_implications,
    convex_dimension,
    family_encode,
    generate_basis,
    meet_irreducibles,
    reduce_pairwise,
    subset_decode,
    subset_encode,
    tight_implications,
)

g3 = GroundSet(3)


def show(name, mask):
    g = ConvexGeometry(g3, mask)
    basis = generate_basis(g)
    rules = [
        f"{subset_decode(r.premise, g3)} -> {subset_decode(r.conclusion, g3)}"
        for r in basis.rules
    ]
    irr = [subset_decode(m, g3) or "{}" for m in meet_irreducibles(g)]
    print(f"{name} (mask {mask}):")
    print(f"  basis: {'; '.join(rules) if rules else '(empty)'}")
    print(f"  round-trip reproduces the family: {alignment_from_implications(basis) == mask}")
    print(f"  meet-irreducibles: {' '.join(irr)}")
    print(f"  convex dimension: {convex_dimension(g)}")
    tight = [
        f"{subset_decode(y, g3)} -> {g3.label(u)}" for y, u in tight_implications(g)
    ]
    print(f"  tight implications: {'; '.join(tight) if tight else '(none)'}")
    print()


show("chain", 139)
show("powerset", 255)
show("collinear points", family_encode([subset_encode(s, g3) for s in ("", "a", "b", "c", "ab", "bc", "abc")], g3))

print("pairwise reduction drops dominated rules:")
rules = [
    Implication(subset_encode("ab", g3), subset_encode("c", g3)),
    Implication(subset_encode("a", g3), subset_encode("c", g3)),
]
kept = reduce_pairwise(rules)
print(f"  {{ab -> c, a -> c}} reduces to "
      f"{subset_decode(kept[0].premise, g3)} -> {subset_decode(kept[0].conclusion, g3)}")
