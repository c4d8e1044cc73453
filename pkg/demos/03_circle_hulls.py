"""The planar kernel: hull boundaries of disk unions, the three-circle
classification, and tolerance-aware containment."""

import math

from circlegeom import (
    Circle,
    Configuration,
    GroundSet,
    classify_triple,
    disk_in_hull,
    hull_boundary,
    induced_alignment,
    subset_decode,
)
from circlegeom.sets import subset_elements


def unit(x, y):
    return Circle(x, y, 1.0)


def describe(name, circles):
    b = hull_boundary(circles)
    arcs, segs = b.counts
    print(f"{name}: {arcs} arcs + {segs} tangent segments")


describe("one circle", [unit(0, 0)])
describe("two disjoint circles", [unit(0, 0), unit(4, 0)])
side = 10.0
describe(
    "equilateral triangle of circles",
    [unit(0, 0), unit(side, 0), unit(side / 2, side * math.sqrt(3) / 2)],
)

print("\nthree-circle configurations:")
print("  collinear, middle inside the ends' hull ->", classify_triple(unit(0, 0), unit(5, 0), unit(10, 0)))
print("  big circle bulging past both tangents  ->", classify_triple(unit(0, 0), Circle(5, 0, 3), unit(10, 0)))
print("  triangle arrangement                   ->", classify_triple(unit(0, 0), unit(side, 0), unit(side / 2, side * math.sqrt(3) / 2)))

print("\ncontainment is decided with a signed support margin:")
others = [unit(0, 0), unit(4, 0)]
for r in (0.5, 1.0, 1.1):
    c = disk_in_hull(Circle(2, 0, r), others)
    print(f"  disk r={r} between two unit disks: {c.state} (margin {c.margin:+.3f})")

print("\nclosure operator induced by circles on a line:")
g3 = GroundSet(3)
conf = Configuration(g3, (unit(0, 0), Circle(5, 0, 0.8), unit(10, 0)))
family = induced_alignment(conf)
members = [subset_decode(m, g3) or "{}" for m in subset_elements(family)]
print(f"  closed sets: {' '.join(members)}")
