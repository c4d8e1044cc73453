"""Independent oracles and generators shared by the test modules.

Everything here deliberately avoids the library's bitmask and sweep code
paths: families are manipulated as sets of frozensets and geometric margins
are estimated by dense direction sampling, so agreement with the library is
meaningful evidence.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from circlegeom import Circle, Configuration, GroundSet

LABELS = "abcde"


def family_to_sets(family_mask: int, n: int) -> set[frozenset[str]]:
    """Decode a family mask into a set of label frozensets (independent decode)."""
    out = set()
    for k in range(1 << n):
        if family_mask >> k & 1:
            out.add(frozenset(LABELS[i] for i in range(n) if k >> i & 1))
    return out


def sets_to_family(members: set[frozenset[str]], n: int) -> int:
    mask = 0
    for m in members:
        k = 0
        for lab in m:
            k |= 1 << LABELS.index(lab)
        mask |= 1 << k
    return mask


def naive_is_convex_geometry(family_mask: int, n: int) -> bool:
    """Axiom check written on frozensets: empty and full members, pairwise
    intersections inside, and a one-element extension for proper members."""
    members = family_to_sets(family_mask, n)
    full = frozenset(LABELS[:n])
    if frozenset() not in members or full not in members:
        return False
    for y in members:
        for z in members:
            if y & z not in members:
                return False
    for y in members:
        if y == full:
            continue
        if not any(y | {x} in members for x in full - y):
            return False
    return True


def naive_closure(family_mask: int, n: int, subset: frozenset[str]) -> frozenset[str]:
    members = family_to_sets(family_mask, n)
    acc = frozenset(LABELS[:n])
    for m in members:
        if subset <= m:
            acc &= m
    return acc


def naive_canonical(family_mask: int, n: int) -> tuple:
    """Permutation-minimal encoding of a family as a sorted tuple of sorted
    member tuples; independent of the library's canonical_form."""
    members = family_to_sets(family_mask, n)
    labels = LABELS[:n]
    best = None
    for perm in itertools.permutations(labels):
        relabel = dict(zip(labels, perm))
        encoded = tuple(
            sorted(tuple(sorted(relabel[x] for x in m)) for m in members)
        )
        if best is None or encoded < best:
            best = encoded
    return best


def naive_geometry_classes(n: int) -> set[tuple]:
    """All isomorphism classes of convex geometries by scanning every family."""
    out = set()
    for fam in range(1 << (1 << n)):
        if naive_is_convex_geometry(fam, n):
            out.add(naive_canonical(fam, n))
    return out


def sampled_margin(e: Circle, others: list[Circle], k: int = 4096) -> float:
    """Dense-sampling estimate of min over directions of (hull support - e's
    support), refined by ternary search around every sampled local minimum."""
    theta = np.linspace(0.0, 2.0 * math.pi, k, endpoint=False)
    ct, st = np.cos(theta), np.sin(theta)
    env = np.full(k, -np.inf)
    for c in others:
        np.maximum(env, c.x * ct + c.y * st + c.r, out=env)
    gap = env - (e.x * ct + e.y * st + e.r)

    def g(t: float) -> float:
        return max(
            c.x * math.cos(t) + c.y * math.sin(t) + c.r for c in others
        ) - (e.x * math.cos(t) + e.y * math.sin(t) + e.r)

    local_min = np.flatnonzero(
        (gap <= np.roll(gap, 1)) & (gap <= np.roll(gap, -1))
    )
    step = 2.0 * math.pi / k
    best = float(np.min(gap))
    for i in local_min:
        lo, hi = theta[i] - step, theta[i] + step
        for _ in range(70):
            m1 = lo + (hi - lo) / 3.0
            m2 = hi - (hi - lo) / 3.0
            if g(m1) > g(m2):
                lo = m1
            else:
                hi = m2
        best = min(best, g(0.5 * (lo + hi)))
    return best


def random_circle(rng: np.random.Generator, r_lo: float = 0.1, r_hi: float = 2.0) -> Circle:
    x, y = rng.uniform(-5.0, 5.0, size=2)
    return Circle(round(float(x), 3), round(float(y), 3), round(float(rng.uniform(r_lo, r_hi)), 3))


def random_configuration(rng: np.random.Generator, n: int) -> Configuration:
    return Configuration(GroundSet(n), tuple(random_circle(rng) for _ in range(n)))


def contains_disk(a: Circle, b: Circle, slack: float = 0.0) -> bool:
    """Disk a inside disk b, with optional tolerance slack."""
    return math.hypot(a.x - b.x, a.y - b.y) + a.r <= b.r + slack
