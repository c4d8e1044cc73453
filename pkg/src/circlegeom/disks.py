"""Planar geometry of circles: support functions, hull boundaries made of
arcs and tangent segments, disk-in-hull containment with an explicit
tolerance band, the circle closure operator, and the three-circle
configuration classifier.

Tolerance policy: distances are measured against the configuration's span
(the maximum pairwise center distance, 1.0 when degenerate).  A containment
decision whose support margin is within SUPPORT_EPS * span of zero is
reported as marginal instead of being silently rounded either way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from circlegeom.sets import GroundSet, _check_subset, subset_elements

TWO_PI = 2.0 * math.pi

# Margin band (relative to the configuration span) in which a containment
# decision is reported as marginal.
SUPPORT_EPS = 1e-9
# Boundary features thinner than this make a three-circle classification
# ambiguous under perturbation.
ANGLE_TOL = 1e-7
# Sweep breakpoints closer than this are treated as one direction.
_BREAK_TOL = 1e-12

INSIDE = "inside"
OUTSIDE = "outside"
MARGINAL = "marginal"


class MarginalGeometryError(ValueError):
    """A geometric decision fell inside the tolerance band; carries diagnostics."""

    def __init__(self, message: str, diagnostics: dict | None = None) -> None:
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class DegenerateGeometryError(ValueError):
    """Input violates a non-degeneracy assumption (e.g. collinear centers
    where a tight implication forbids them)."""


@dataclass(frozen=True)
class Circle:
    """A circle (disk) with center (x, y) and radius r >= 0; r = 0 is a point."""

    x: float
    y: float
    r: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.r)):
            raise ValueError("circle coordinates must be finite")
        if self.r < 0:
            raise ValueError("circle radius must be nonnegative")


@dataclass(frozen=True)
class Configuration:
    """One circle per ground-set element, in label order."""

    ground: GroundSet
    circles: tuple[Circle, ...]

    def __post_init__(self) -> None:
        if len(self.circles) != self.ground.n:
            raise ValueError(
                f"expected {self.ground.n} circles, got {len(self.circles)}"
            )

    def circle(self, element: int) -> Circle:
        return self.circles[element]


@dataclass(frozen=True)
class Arc:
    """Boundary arc of circle `circle` between directions start..end (radians,
    counterclockwise, end > start; end may exceed 2*pi when the arc wraps)."""

    circle: int
    start: float
    end: float

    @property
    def sweep(self) -> float:
        return self.end - self.start


@dataclass(frozen=True)
class Segment:
    """Tangent segment between two boundary points."""

    p1: tuple[float, float]
    p2: tuple[float, float]

    @property
    def length(self) -> float:
        return math.hypot(self.p2[0] - self.p1[0], self.p2[1] - self.p1[1])


@dataclass(frozen=True)
class HullBoundary:
    """Closed convex boundary as a cyclic alternating sequence of arcs and segments."""

    features: tuple[Arc | Segment, ...]

    @property
    def arcs(self) -> list[Arc]:
        return [f for f in self.features if isinstance(f, Arc)]

    @property
    def segments(self) -> list[Segment]:
        return [f for f in self.features if isinstance(f, Segment)]

    @property
    def counts(self) -> tuple[int, int]:
        """(arc count, segment count)."""
        return len(self.arcs), len(self.segments)


@dataclass(frozen=True)
class Containment:
    """Tri-state containment verdict with its signed support margin.

    The margin is the minimum over all directions of (hull support - disk
    support) in input units; the inside/outside/marginal split applies
    SUPPORT_EPS to the margin normalized by the configuration span."""

    state: str
    margin: float


@dataclass(frozen=True)
class MarginalPair:
    """A containment query (element vs. subset) that fell in the tolerance band."""

    element: int
    subset: int
    margin: float


def support_value(c: Circle, theta: float) -> float:
    """Support function of the disk: c . u(theta) + r."""
    return c.x * math.cos(theta) + c.y * math.sin(theta) + c.r


def span(circles: Iterable[Circle]) -> float:
    """Maximum pairwise center distance; 1.0 when there is no positive spread."""
    pts = [(c.x, c.y) for c in circles]
    best = 0.0
    for i, (x1, y1) in enumerate(pts):
        for x2, y2 in pts[i + 1 :]:
            d = math.hypot(x2 - x1, y2 - y1)
            if d > best:
                best = d
    return best if best > 0.0 else 1.0


def point_on(c: Circle, theta: float) -> tuple[float, float]:
    """Boundary point of the disk in direction theta (its center when r = 0)."""
    return (c.x + c.r * math.cos(theta), c.y + c.r * math.sin(theta))


def orient2d(ax: float, ay: float, bx: float, by: float, cx: float, cy: float) -> float:
    """Twice the signed area of triangle abc (positive for counterclockwise)."""
    return (ax - cx) * (by - cy) - (ay - cy) * (bx - cx)


def _switch_angles(a: Circle, b: Circle) -> tuple[float, ...]:
    """Directions where the support functions of a and b are equal.

    Solves (ca - cb) . u(theta) = rb - ra; empty for concentric circles or
    when one support function dominates everywhere."""
    dx = a.x - b.x
    dy = a.y - b.y
    rr = math.hypot(dx, dy)
    if rr <= 0.0:
        return ()
    v = (b.r - a.r) / rr
    if v > 1.0 or v < -1.0:
        return ()
    phi = math.atan2(dy, dx)
    d = math.acos(min(1.0, max(-1.0, v)))
    return ((phi - d) % TWO_PI, (phi + d) % TWO_PI)


def _argmax_support(circles: Sequence[Circle], theta: float) -> int:
    best = 0
    best_v = support_value(circles[0], theta)
    for i in range(1, len(circles)):
        v = support_value(circles[i], theta)
        if v > best_v:
            best = i
            best_v = v
    return best


def hull_boundary(circles: Sequence[Circle]) -> HullBoundary:
    """Boundary of the convex hull of a union of disks by a support sweep.

    Pairwise support-equality directions cut the circle of directions into
    intervals with a constant dominating disk; each maximal run of one
    dominating disk contributes an arc and each change of dominance a
    tangent segment.  Disks strictly inside the hull of the others dominate
    nowhere and contribute nothing.  A single dominating disk yields one
    full arc and no segments.
    """
    if not circles:
        raise ValueError("hull_boundary needs at least one circle")
    raw: list[float] = []
    for i, a in enumerate(circles):
        for b in circles[i + 1 :]:
            raw.extend(_switch_angles(a, b))
    raw.sort()
    angles: list[float] = []
    for t in raw:
        if not angles or t - angles[-1] > _BREAK_TOL:
            angles.append(t)
    if len(angles) > 1 and angles[0] + TWO_PI - angles[-1] <= _BREAK_TOL:
        angles.pop()
    if not angles:
        return HullBoundary((Arc(_argmax_support(circles, 0.0), 0.0, TWO_PI),))

    m = len(angles)
    winners = []
    for i in range(m):
        t0 = angles[i]
        t1 = angles[i + 1] if i + 1 < m else angles[0] + TWO_PI
        winners.append(_argmax_support(circles, 0.5 * (t0 + t1)))

    start = next((i for i in range(m) if winners[i] != winners[i - 1]), None)
    if start is None:
        return HullBoundary((Arc(winners[0], 0.0, TWO_PI),))

    runs: list[tuple[int, float]] = []
    for k in range(m):
        i = (start + k) % m
        if runs and runs[-1][0] == winners[i]:
            continue
        runs.append((winners[i], angles[i]))

    features: list[Arc | Segment] = []
    nruns = len(runs)
    for r in range(nruns):
        w, a0 = runs[r]
        w_next, a1 = runs[(r + 1) % nruns]
        end = a1 if a1 > a0 else a1 + TWO_PI
        features.append(Arc(w, a0, end))
        theta = end % TWO_PI
        features.append(Segment(point_on(circles[w], theta), point_on(circles[w_next], theta)))
    return HullBoundary(tuple(features))


def disk_in_hull(e: Circle, others: Sequence[Circle]) -> Containment:
    """Decide whether disk e lies in the convex hull of the other disks.

    e is contained iff its support function never exceeds the maximum of the
    others'.  The margin min_theta (max_i h_i - h_e) is evaluated exactly on
    the finite set of candidate directions where the minimum can occur:
    pairwise support-equality directions and the stationary directions of
    each difference h_i - h_e.
    """
    if not others:
        raise ValueError("disk_in_hull needs at least one other circle")
    candidates = {0.0}
    for i, a in enumerate(others):
        dx = a.x - e.x
        dy = a.y - e.y
        if dx * dx + dy * dy > 0.0:
            phi = math.atan2(dy, dx)
            candidates.add(phi % TWO_PI)
            candidates.add((phi + math.pi) % TWO_PI)
        candidates.update(_switch_angles(a, e))
        for b in others[i + 1 :]:
            candidates.update(_switch_angles(a, b))
    margin = math.inf
    for theta in candidates:
        ct = math.cos(theta)
        st = math.sin(theta)
        envelope = max(c.x * ct + c.y * st + c.r for c in others)
        gap = envelope - (e.x * ct + e.y * st + e.r)
        if gap < margin:
            margin = gap
    tol = SUPPORT_EPS * span([e, *others])
    if margin > tol:
        state = INSIDE
    elif margin < -tol:
        state = OUTSIDE
    else:
        state = MARGINAL
    return Containment(state, margin)


def classify_triple(a: Circle, b: Circle, c: Circle) -> str:
    """Classify three circles, none inside another, by hull boundary shape:
    "I" when one disk contributes no arc (2 arcs + 2 segments), "II" for
    4 arcs + 4 segments, "III" for 3 arcs + 3 segments.

    Raises ValueError when one input disk contains another and
    MarginalGeometryError when the classification is ambiguous within
    tolerance (near containment or a vanishingly thin boundary feature).
    """
    circles = (a, b, c)
    tol = SUPPORT_EPS * span(circles)
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            d = math.hypot(circles[j].x - circles[i].x, circles[j].y - circles[i].y)
            inclusion = circles[j].r - circles[i].r - d  # >= 0: disk i inside disk j
            if inclusion > tol:
                raise ValueError(f"disk {i} is contained in disk {j}")
            if inclusion > -tol:
                raise MarginalGeometryError(
                    "near containment between input disks",
                    {"pair": (i, j), "margin": inclusion},
                )
    boundary = hull_boundary(circles)
    thin = [f for f in boundary.arcs if f.sweep < ANGLE_TOL]
    short = [f for f in boundary.segments if f.length < tol]
    if thin or short:
        raise MarginalGeometryError(
            "boundary feature vanishes within tolerance",
            {"thin_arcs": thin, "short_segments": short, "counts": boundary.counts},
        )
    counts = boundary.counts
    if counts == (2, 2):
        return "I"
    if counts == (4, 4):
        return "II"
    if counts == (3, 3):
        return "III"
    raise MarginalGeometryError(
        f"unexpected boundary structure {counts}", {"counts": counts}
    )


def ch_c_detailed(conf: Configuration, y: int) -> tuple[int, list[MarginalPair]]:
    """Circle closure of subset y plus the containment queries that fell in
    the tolerance band.  Membership itself is non-strict: a margin of exactly
    zero counts as contained (and is reported as marginal)."""
    _check_subset(y, conf.ground)
    if y == 0:
        return 0, []
    inside = y
    flagged: list[MarginalPair] = []
    y_circles = [conf.circles[i] for i in subset_elements(y)]
    for x in range(conf.ground.n):
        bx = 1 << x
        if y & bx:
            continue
        cont = disk_in_hull(conf.circles[x], y_circles)
        if cont.state == MARGINAL:
            flagged.append(MarginalPair(x, y, cont.margin))
        if cont.margin >= 0.0:
            inside |= bx
    return inside, flagged


def ch_c(conf: Configuration, y: int) -> int:
    """Circle closure: the elements whose disks lie in the convex hull of the
    disks of y (extensive; empty input maps to the empty set)."""
    return ch_c_detailed(conf, y)[0]


def induced_alignment_detailed(conf: Configuration) -> tuple[int, list[MarginalPair]]:
    """Family of all subsets fixed by the circle closure, plus every marginal
    containment met while scanning."""
    family = 0
    flagged: list[MarginalPair] = []
    for w in range(1 << conf.ground.n):
        closed, pairs = ch_c_detailed(conf, w)
        flagged.extend(pairs)
        if closed == w:
            family |= 1 << w
    return family, flagged


def induced_alignment(conf: Configuration) -> int:
    """Family of all subsets fixed by the circle closure."""
    return induced_alignment_detailed(conf)[0]
