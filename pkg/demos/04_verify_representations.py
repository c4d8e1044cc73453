"""Verifying circle configurations against target geometries, both by full
alignment comparison and by the two practical checks (basis implications
plus meet-irreducible closedness)."""

from pathlib import Path

from circlegeom import (
    Circle,
    Configuration,
    ConvexGeometry,
    GroundSet,
    generate_basis,
    load_configuration,
    subset_decode,
    verify_by_propositions,
    verify_full,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

g2 = GroundSet(2)
chain = ConvexGeometry(g2, 11)
conf = load_configuration(FIXTURES / "chain2.json")

print("point a inside circle b, target chain {{}, a, ab}:")
report = verify_full(chain, conf)
print(f"  full comparison verdict: {report.verdict}")
report = verify_by_propositions(chain, generate_basis(chain), conf)
print(f"  practical checks verdict: {report.verdict}")

print("\nsame circles against the powerset on two elements:")
powerset = ConvexGeometry(g2, 15)
report = verify_full(powerset, conf)
bad = [subset_decode(m, g2) for m in report.non_closed_meet_irreducibles]
print(f"  verdict: {report.verdict} (meet-irreducibles not circle-closed: {bad})")

print("\nmoving the point outside the circle breaks the chain's implication:")
moved = Configuration(g2, (Circle(3.0, 0.0, 0.0), conf.circles[1]))
report = verify_full(chain, moved)
rules = [
    f"{subset_decode(r.premise, g2)} -> {subset_decode(r.conclusion, g2)}"
    for r in report.violated_implications
]
print(f"  verdict: {report.verdict} (violated: {'; '.join(rules)})")

print("\na knife-edge configuration refuses to certify either way:")
g3 = GroundSet(3)
touching = Configuration(
    g3, (Circle(0, 0, 1.0), Circle(5, 0, 1.0), Circle(10, 0, 1.0))
)
from circlegeom import induced_alignment

target = ConvexGeometry(g3, induced_alignment(touching))
report = verify_full(target, touching)
print(f"  verdict: {report.verdict} ({len(report.marginal_pairs)} marginal containment(s))")
