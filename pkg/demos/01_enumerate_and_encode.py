"""Walk through the bitmask encodings and enumerate the small catalogs.

A subset of {a..e} is an n-bit integer, a family of subsets a 2^n-bit
integer.  The alignment {{}, a, ab, abc} on three elements therefore has
bits 0, 1, 3 and 7 set: the integer 139.
"""

from circlegeom import (
    GroundSet,
    anti_exchange_holds,
    complement_family,
    enumerate_geometries,
    family_encode,
    is_antimatroid,
    is_convex_geometry,
    subset_decode,
    subset_encode,
)

g3 = GroundSet(3)

print("subset encodings on {a,b,c}:")
for s in ("", "a", "b", "ab", "abc"):
    print(f"  {s or '{}':>3} -> {subset_encode(s, g3)}")

family = family_encode([subset_encode(s, g3) for s in ("", "a", "ab", "abc")], g3)
print(f"\nfamily {{{{}}, a, ab, abc}} -> {family}")
print(f"is a convex geometry: {is_convex_geometry(family, g3)}")
print(f"anti-exchange holds:  {anti_exchange_holds(family, g3)}")

anti = complement_family(family, g3)
print(f"\ncomplementing every member gives {anti}, an antimatroid: {is_antimatroid(anti, g3)}")

print("\nnon-isomorphic convex geometries per ground-set size:")
for n in (1, 2, 3, 4):
    masks = enumerate_geometries(GroundSet(n))
    print(f"  n={n}: {len(masks)}")

print("\nthe two classes on {a,b}:")
for mask in enumerate_geometries(GroundSet(2)):
    g2 = GroundSet(2)
    members = [subset_decode(m, g2) or "{}" for m in range(4) if mask >> m & 1]
    print(f"  mask {mask:2d}: {' '.join(members)}")

print("\n(n=5 yields 672 classes; run circlegeom enumerate -n 5 -o catalog5.jsonl)")
