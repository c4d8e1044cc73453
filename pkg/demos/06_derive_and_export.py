"""Grow a five-element candidate from a four-element configuration and emit
deterministic TikZ for the result."""

from pathlib import Path

from circlegeom import (
    ConvexGeometry,
    GroundSet,
    canonical_permutation,
    derive_representation,
    export_tikz,
    family_encode,
    induced_alignment,
    load_configuration,
    relabel_configuration,
    verify_full,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

conf = load_configuration(FIXTURES / "triangle-centroid4.json")
g5 = GroundSet(5)
placeholder = ConvexGeometry(g5, family_encode([(1 << k) - 1 for k in range(6)], g5))

candidate = derive_representation(conf, placeholder, "coatom")
print("coatom strategy wraps the four disks in one big circle:")
fifth = candidate.circles[4]
print(f"  new circle: center ({fifth.x:.3f}, {fifth.y:.3f}), radius {fifth.r:.3f}")

induced = induced_alignment(candidate)
perm = canonical_permutation(induced, g5)
aligned = relabel_configuration(candidate, perm)
target = ConvexGeometry(g5, induced_alignment(aligned))
report = verify_full(target, aligned)
print(f"  candidate verifies against its induced geometry: {report.verdict}")
coatoms = [m for m in target.members if bin(m).count('1') == 4]
print(f"  the induced geometry has a unique coatom: {len(coatoms) == 1}")

print("\nTikZ export (deterministic, 4 decimal places):")
print(export_tikz(candidate, width_cm=6.0))
