"""Verification of circle configurations against target geometries, the
triangle/centers-hull constraints on tight implications, the two obstruction
patterns that prove a geometry impossible to represent by circles, and
heuristics deriving 5-element candidate configurations from 4-element ones."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from circlegeom.dimension import meet_irreducibles
from circlegeom.implications import (
    Implication,
    ImplicationBasis,
    alignment_from_implications,
    generate_basis,
)
from circlegeom.disks import (
    Circle,
    Configuration,
    DegenerateGeometryError,
    MarginalPair,
    SUPPORT_EPS,
    ch_c,
    ch_c_detailed,
    induced_alignment_detailed,
    orient2d,
    span,
)
from circlegeom.sets import (
    ConvexGeometry,
    GroundSet,
    _check_subset,
    closure_table,
    subset_elements,
)

VERIFIED = "verified"
FAILED = "failed"
MARGINAL_VERDICT = "marginal"

WEDGE = "wedge"
CASCADE = "cascade"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of matching a configuration against a target geometry.

    verified requires the induced family to equal the target exactly with no
    containment query in the tolerance band; marginal refuses to certify a
    knife-edge configuration either way."""

    verdict: str
    induced: int
    violated_implications: list[Implication] = field(default_factory=list)
    non_closed_meet_irreducibles: list[int] = field(default_factory=list)
    marginal_pairs: list[MarginalPair] = field(default_factory=list)


@dataclass(frozen=True)
class ObstructionCertificate:
    """Three tight implications in one of the two patterns that no circle
    configuration can satisfy.

    wedge: (a b c -> e), (a b d -> e), (a c d -> e)
    cascade: (a b c -> d), (a c d -> e), (b c d -> e)
    """

    pattern: str
    elements: tuple[int, int, int, int, int]
    implications: tuple[tuple[int, int], ...]


def _verdict(induced_ok: bool, flagged: list[MarginalPair]) -> str:
    if flagged:
        return MARGINAL_VERDICT
    return VERIFIED if induced_ok else FAILED


def verify_full(g: ConvexGeometry, conf: Configuration) -> VerificationReport:
    """Compare the configuration's full induced alignment with the target
    family under the identity labeling."""
    if conf.ground != g.ground:
        raise ValueError("configuration and geometry ground sets differ")
    induced, flagged = induced_alignment_detailed(conf)
    basis = generate_basis(g)
    violated = [
        rule
        for rule in basis.rules
        if rule.conclusion & ch_c(conf, rule.premise) != rule.conclusion
    ]
    non_closed = [m for m in meet_irreducibles(g) if ch_c(conf, m) != m]
    return VerificationReport(
        verdict=_verdict(induced == g.family, flagged),
        induced=induced,
        violated_implications=violated,
        non_closed_meet_irreducibles=non_closed,
        marginal_pairs=flagged,
    )


def verify_by_propositions(
    g: ConvexGeometry, basis: ImplicationBasis, conf: Configuration
) -> VerificationReport:
    """Verify through the two practical checks: every basis rule must hold
    under the circle closure (induced family inside the target) and every
    meet-irreducible of the target must be circle-closed (target inside the
    induced family).  Produces the same verdict as verify_full."""
    if conf.ground != g.ground:
        raise ValueError("configuration and geometry ground sets differ")
    if alignment_from_implications(basis) != g.family:
        raise ValueError("basis does not generate the target geometry")
    violated = [
        rule
        for rule in basis.rules
        if rule.conclusion & ch_c(conf, rule.premise) != rule.conclusion
    ]
    non_closed = [m for m in meet_irreducibles(g) if ch_c(conf, m) != m]
    induced, flagged = induced_alignment_detailed(conf)
    return VerificationReport(
        verdict=_verdict(not violated and not non_closed, flagged),
        induced=induced,
        violated_implications=violated,
        non_closed_meet_irreducibles=non_closed,
        marginal_pairs=flagged,
    )


def _tight_in_configuration(conf: Configuration, premise: int, u: int) -> bool:
    """Tightness of premise -> u under the circle closure."""
    bu = 1 << u
    if not ch_c(conf, premise) & bu:
        return False
    rest = premise
    while rest:
        low = rest & -rest
        if ch_c(conf, premise ^ low) & bu:
            return False
        rest ^= low
    return True


def triangle_property_check(conf: Configuration, premise: int, u: int) -> bool:
    """For a tight 3-element implication premise -> u in the configuration's
    induced geometry, test that the center of u's circle lies strictly inside
    the triangle of the premise centers (sign tests with the span-normalized
    tolerance).  Collinear premise centers are reported as degenerate since
    tightness rules them out."""
    _check_subset(premise, conf.ground)
    if premise.bit_count() != 3:
        raise ValueError("premise must have exactly 3 elements")
    if premise >> u & 1:
        raise ValueError("conclusion element must lie outside the premise")
    if not _tight_in_configuration(conf, premise, u):
        raise ValueError("implication is not tight in the induced geometry")
    pts = [
        (conf.circles[i].x, conf.circles[i].y) for i in subset_elements(premise)
    ]
    e = conf.circles[u]
    s = span(conf.circles)
    area_tol = SUPPORT_EPS * s * s
    (ax, ay), (bx, by), (cx, cy) = pts
    base = orient2d(ax, ay, bx, by, cx, cy)
    if abs(base) <= area_tol:
        raise DegenerateGeometryError(
            "premise centers are collinear although the implication is tight"
        )
    sign = 1.0 if base > 0 else -1.0
    for (px, py), (qx, qy) in ((pts[0], pts[1]), (pts[1], pts[2]), (pts[2], pts[0])):
        side = orient2d(px, py, qx, qy, e.x, e.y) * sign
        if side <= area_tol:
            return False
    return True


def centers_hull_check(conf: Configuration, premise: int, u: int) -> bool:
    """For a tight implication with premise of size > 2, test that the center
    of u's circle lies in the closed convex hull of the premise centers."""
    _check_subset(premise, conf.ground)
    if premise.bit_count() <= 2:
        raise ValueError("premise must have more than 2 elements")
    if premise >> u & 1:
        raise ValueError("conclusion element must lie outside the premise")
    if not _tight_in_configuration(conf, premise, u):
        raise ValueError("implication is not tight in the induced geometry")
    pts = [
        (conf.circles[i].x, conf.circles[i].y) for i in subset_elements(premise)
    ]
    e = conf.circles[u]
    s = span(conf.circles)
    area_tol = SUPPORT_EPS * s * s
    hull = _convex_hull(pts)
    if len(hull) == 1:
        (px, py) = hull[0]
        return math.hypot(e.x - px, e.y - py) <= SUPPORT_EPS * s
    if len(hull) == 2:
        return _on_segment(hull[0], hull[1], (e.x, e.y), area_tol, SUPPORT_EPS * s)
    for k in range(len(hull)):
        (px, py) = hull[k]
        (qx, qy) = hull[(k + 1) % len(hull)]
        if orient2d(px, py, qx, qy, e.x, e.y) < -area_tol:
            return False
    return True


def _convex_hull(pts: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Counterclockwise hull vertices by monotone chain; collinear inputs
    collapse to the extreme pair, coincident inputs to a single point."""
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts

    def half(points):
        chain: list[tuple[float, float]] = []
        for p in points:
            while (
                len(chain) >= 2
                and orient2d(*chain[-2], *chain[-1], *p) <= 0.0
            ):
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(list(reversed(pts)))
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) >= 2 else pts[:1]


def _on_segment(p, q, e, area_tol, dist_tol) -> bool:
    if abs(orient2d(p[0], p[1], q[0], q[1], e[0], e[1])) > area_tol:
        return False
    lo_x, hi_x = sorted((p[0], q[0]))
    lo_y, hi_y = sorted((p[1], q[1]))
    return (
        lo_x - dist_tol <= e[0] <= hi_x + dist_tol
        and lo_y - dist_tol <= e[1] <= hi_y + dist_tol
    )


def detect_obstructions(g: ConvexGeometry) -> list[ObstructionCertificate]:
    """Search all 5-tuples of distinct elements for the wedge and cascade
    patterns of three tight implications.  Any certificate proves the
    geometry cannot be represented by circles."""
    n = g.ground.n
    table = closure_table(g.family, n)

    def tight(premise: int, u: int) -> bool:
        bu = 1 << u
        if not table[premise] & ~premise & bu:
            return False
        rest = premise
        while rest:
            low = rest & -rest
            if table[premise ^ low] & bu:
                return False
            rest ^= low
        return True

    found: dict[tuple, ObstructionCertificate] = {}
    from itertools import permutations

    for a, b, c, d, e in permutations(range(n), 5):
        ba, bb, bc, bd = 1 << a, 1 << b, 1 << c, 1 << d
        if (
            tight(ba | bb | bc, e)
            and tight(ba | bb | bd, e)
            and tight(ba | bc | bd, e)
        ):
            trio = tuple(sorted((b, c, d)))
            key = (WEDGE, a, trio, e)
            if key not in found:
                t1, t2, t3 = trio
                found[key] = ObstructionCertificate(
                    pattern=WEDGE,
                    elements=(a, t1, t2, t3, e),
                    implications=(
                        (ba | 1 << t1 | 1 << t2, e),
                        (ba | 1 << t1 | 1 << t3, e),
                        (ba | 1 << t2 | 1 << t3, e),
                    ),
                )
        if (
            tight(ba | bb | bc, d)
            and tight(ba | bc | bd, e)
            and tight(bb | bc | bd, e)
        ):
            lo, hi = min(a, b), max(a, b)
            key = (CASCADE, (lo, hi), c, d, e)
            if key not in found:
                found[key] = ObstructionCertificate(
                    pattern=CASCADE,
                    elements=(lo, hi, c, d, e),
                    implications=(
                        (1 << lo | 1 << hi | bc, d),
                        (1 << lo | bc | bd, e),
                        (1 << hi | bc | bd, e),
                    ),
                )
    return sorted(found.values(), key=lambda cert: (cert.pattern, cert.elements))


def derive_representation(
    rep4: Configuration, target: ConvexGeometry, strategy: str
) -> Configuration:
    """Extend a 4-element configuration with a fifth circle by one of the
    strategies "atom", "coatom", "double:<el>", "nest:<el>".  The output is a
    candidate only; callers must verify it against the target.

    atom    - radius-0 circle at the deepest common point of the four disks
              (requires a common interior point).
    coatom  - circle around the centroid large enough to contain all disks,
              with 5% slack.
    double  - copy of the named circle offset by 5% of the span.
    nest    - concentric circle of half the named circle's radius.
    """
    if target.ground.n != rep4.ground.n + 1:
        raise ValueError("target geometry must have one more element")
    kind, _, arg = strategy.partition(":")
    circles = rep4.circles
    s = span(circles)
    if kind == "atom":
        new = Circle(*_deepest_point(circles), 0.0)
    elif kind == "coatom":
        cx = sum(c.x for c in circles) / len(circles)
        cy = sum(c.y for c in circles) / len(circles)
        radius = max(math.hypot(c.x - cx, c.y - cy) + c.r for c in circles)
        new = Circle(cx, cy, radius * 1.05)
    elif kind in ("double", "nest"):
        if not arg:
            raise ValueError(f"strategy {kind} needs an element, e.g. {kind}:a")
        base = circles[rep4.ground.index(arg)]
        if kind == "double":
            new = Circle(base.x + 0.05 * s, base.y, base.r)
        else:
            new = Circle(base.x, base.y, base.r / 2.0)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return Configuration(target.ground, (*circles, new))


def _deepest_point(circles: tuple[Circle, ...]) -> tuple[float, float]:
    """Point maximizing the minimum depth min_i (r_i - dist to center i),
    located by nested ternary search (the depth is concave); raises if the
    disks have no common interior point."""

    def depth(px: float, py: float) -> float:
        return min(c.r - math.hypot(px - c.x, py - c.y) for c in circles)

    x_lo = min(c.x - c.r for c in circles)
    x_hi = max(c.x + c.r for c in circles)
    y_lo = min(c.y - c.r for c in circles)
    y_hi = max(c.y + c.r for c in circles)

    def best_y(px: float) -> float:
        lo, hi = y_lo, y_hi
        for _ in range(90):
            m1 = lo + (hi - lo) / 3.0
            m2 = hi - (hi - lo) / 3.0
            if depth(px, m1) < depth(px, m2):
                lo = m1
            else:
                hi = m2
        return 0.5 * (lo + hi)

    lo, hi = x_lo, x_hi
    for _ in range(90):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if depth(m1, best_y(m1)) < depth(m2, best_y(m2)):
            lo = m1
        else:
            hi = m2
    px = 0.5 * (lo + hi)
    py = best_y(px)
    if depth(px, py) <= 0.0:
        raise ValueError("the four disks have no common interior point")
    return px, py


def relabel_configuration(conf: Configuration, perm: tuple[int, ...]) -> Configuration:
    """Move each element's circle to its image under the permutation
    (element i becomes perm[i]), so the induced family transforms the same
    way as apply_permutation."""
    if sorted(perm) != list(range(conf.ground.n)):
        raise ValueError(f"{perm!r} is not a permutation of 0..{conf.ground.n - 1}")
    circles: list[Circle | None] = [None] * conf.ground.n
    for i, c in enumerate(conf.circles):
        circles[perm[i]] = c
    return Configuration(conf.ground, tuple(circles))
