"""Scan catalogs for the two tight-implication patterns that rule out any
representation by circles.

The wedge pattern is three tight implications abc -> e, abd -> e, acd -> e;
the cascade pattern is abc -> d, acd -> e, bcd -> e.  Either forces the
center of a conclusion circle into two disjoint triangle interiors at once,
which is impossible.  Pass --full to scan all 672 five-element geometries
(takes a little while to enumerate).
"""

import sys

from circlegeom import GroundSet, build_catalog, detect_obstructions, subset_decode

print("four-element catalog:")
catalog4 = build_catalog(GroundSet(4))
flagged4 = [rec for rec in catalog4 if rec.status == "impossible"]
print(f"  {len(flagged4)} of {len(catalog4)} geometries carry a certificate")

if "--full" in sys.argv[1:]:
    print("\nfive-element catalog (enumerating 672 classes)...")
    catalog5 = build_catalog(GroundSet(5))
    flagged5 = [rec for rec in catalog5 if rec.status == "impossible"]
    print(f"  {len(flagged5)} of {len(catalog5)} geometries carry a certificate:")
    for rec in flagged5:
        ground = rec.ground
        certs = detect_obstructions(rec.geometry)
        patterns = sorted({c.pattern for c in certs})
        first = certs[0]
        rules = ", ".join(
            f"{subset_decode(p, ground)} -> {ground.label(u)}"
            for p, u in first.implications
        )
        print(f"  {rec.id} (cdim {rec.cdim}, {'/'.join(patterns)}): {rules}")
else:
    print("\n(re-run with --full for the five-element scan)")
