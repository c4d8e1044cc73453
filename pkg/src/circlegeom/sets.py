"""Bitmask encodings of subsets and subset families, convex-geometry axioms,
and exhaustive enumeration of non-isomorphic convex geometries.

A subset of the ground set is an n-bit integer: bit i is set iff element i
belongs to the subset, with labels a..e mapped to bits 0..4.  A family of
subsets is a 2^n-bit integer: bit k is set iff the subset whose mask is k
belongs to the family.  For n <= 5 a family therefore fits in 32 bits.

All values are immutable and every operation is a pure function.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator

LABELS = "abcde"
MAX_N = 5


@dataclass(frozen=True)
class GroundSet:
    """Ground set of n elements with the fixed labeling a=0, b=1, c=2, d=3, e=4."""

    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"ground set size must be in 1..{MAX_N}, got {self.n}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def labels(self) -> str:
        return LABELS[: self.n]

    def index(self, label: str) -> int:
        i = LABELS.find(label)
        if i < 0 or i >= self.n:
            raise ValueError(f"unknown element label {label!r} for n={self.n}")
        return i

    def label(self, index: int) -> str:
        if not 0 <= index < self.n:
            raise ValueError(f"element index {index} out of range for n={self.n}")
        return LABELS[index]


def subset_encode(labels: Iterable[str], ground: GroundSet) -> int:
    """Encode a collection of element labels (e.g. "ab" or {"a","b"}) as a subset mask."""
    mask = 0
    for lab in labels:
        mask |= 1 << ground.index(lab)
    return mask


def subset_decode(mask: int, ground: GroundSet) -> str:
    """Decode a subset mask to its label string in alphabetical order ("" for the empty set)."""
    _check_subset(mask, ground)
    return "".join(LABELS[i] for i in range(ground.n) if mask >> i & 1)


def subset_elements(mask: int) -> Iterator[int]:
    """Iterate the element indices contained in a subset mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def family_encode(subsets: Iterable[int], ground: GroundSet) -> int:
    """Encode a collection of subset masks as a family mask (duplicates collapse)."""
    family = 0
    for s in subsets:
        _check_subset(s, ground)
        family |= 1 << s
    return family


def family_decode(family: int, ground: GroundSet) -> list[int]:
    """Decode a family mask to the sorted list of its member subset masks."""
    _check_family(family, ground)
    return list(subset_elements(family))


def family_size(family: int) -> int:
    """Number of subsets in a family mask."""
    return family.bit_count()


def _check_subset(mask: int, ground: GroundSet) -> None:
    if mask < 0 or mask > ground.full_mask:
        raise ValueError(f"subset mask {mask} out of range for n={ground.n}")


def _check_family(family: int, ground: GroundSet) -> None:
    if family < 0 or family >= 1 << (1 << ground.n):
        raise ValueError(f"family mask {family} out of range for n={ground.n}")


def closure_table(family: int, n: int) -> list[int]:
    """For every subset s, the intersection of all family members containing s.

    Entries for subsets contained in no member come out as the full set's
    intersection with nothing, i.e. (1 << n) - 1 only when the full set is a
    member; callers that need a true closure operator must pass a family
    containing the full set.
    """
    full = (1 << n) - 1
    table = [full] * (1 << n)
    for m in subset_elements(family):
        for s in range(1 << n):
            if s & m == s:
                table[s] &= m
    return table


@dataclass(frozen=True)
class ConvexGeometry:
    """A convex geometry: a family containing the empty and full sets, closed
    under intersection, in which every proper member has a one-element
    extension inside the family.  Validated on construction."""

    ground: GroundSet
    family: int

    def __post_init__(self) -> None:
        if not is_convex_geometry(self.family, self.ground):
            raise ValueError(
                f"family mask {self.family} is not a convex geometry on n={self.ground.n}"
            )

    @property
    def members(self) -> list[int]:
        return family_decode(self.family, self.ground)

    def contains(self, subset: int) -> bool:
        _check_subset(subset, self.ground)
        return bool(self.family >> subset & 1)


def closure(g: ConvexGeometry, y: int) -> int:
    """Closure of y: the intersection of all members of g containing y."""
    _check_subset(y, g.ground)
    acc = g.ground.full_mask
    for m in subset_elements(g.family):
        if y & m == y:
            acc &= m
    return acc


def is_convex_geometry(family: int, ground: GroundSet) -> bool:
    """Check the alignment axioms: empty and full sets present, intersection
    closure, and a one-element extension for every proper member."""
    _check_family(family, ground)
    full = ground.full_mask
    if not family & 1 or not family >> full & 1:
        return False
    members = list(subset_elements(family))
    for i, y in enumerate(members):
        for z in members[i + 1 :]:
            if not family >> (y & z) & 1:
                return False
    for y in members:
        if y == full:
            continue
        for i in range(ground.n):
            b = 1 << i
            if not y & b and family >> (y | b) & 1:
                break
        else:
            return False
    return True


def anti_exchange_holds(family: int, ground: GroundSet) -> bool:
    """Check the anti-exchange property of the closure operator of `family`.

    Requires an intersection-closed family containing the full set (raises
    ValueError otherwise).  Returns True iff the closure of the empty set is
    empty and for every closed Y and distinct x, y outside Y, x in cl(Y+{y})
    forbids y in cl(Y+{x}).
    """
    _check_family(family, ground)
    n = ground.n
    full = ground.full_mask
    if not family >> full & 1:
        raise ValueError("family does not contain the full set")
    members = list(subset_elements(family))
    for i, y in enumerate(members):
        for z in members[i + 1 :]:
            if not family >> (y & z) & 1:
                raise ValueError("family is not intersection-closed")
    table = closure_table(family, n)
    if table[0] != 0:
        return False
    for y in members:
        outside = full & ~y
        for x in subset_elements(outside):
            bx = 1 << x
            for z in subset_elements(outside & ~(bx | (bx - 1))):
                bz = 1 << z
                if table[y | bz] & bx and table[y | bx] & bz:
                    return False
    return True


def is_antimatroid(family: int, ground: GroundSet) -> bool:
    """Check the antimatroid axioms: empty and full sets present, union
    closure, and one-element accessibility of every nonempty member."""
    _check_family(family, ground)
    full = ground.full_mask
    if not family & 1 or not family >> full & 1:
        return False
    members = list(subset_elements(family))
    for i, y in enumerate(members):
        for z in members[i + 1 :]:
            if not family >> (y | z) & 1:
                return False
    for y in members:
        if y == 0:
            continue
        for i in subset_elements(y):
            if family >> (y & ~(1 << i)) & 1:
                break
        else:
            return False
    return True


def complement_family(family: int, ground: GroundSet) -> int:
    """Replace every member by its complement.  An involution that maps
    convex geometries to antimatroids and back."""
    _check_family(family, ground)
    full = ground.full_mask
    out = 0
    for m in subset_elements(family):
        out |= 1 << (m ^ full)
    return out


@functools.lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[tuple[int, ...], ...]:
    """All subset-index permutation tables induced by element permutations.

    For an element permutation p, subset s maps to the subset whose bit p[i]
    equals bit i of s."""
    tables = []
    for perm in permutations(range(n)):
        t = [0] * (1 << n)
        for s in range(1 << n):
            v = 0
            ss = s
            while ss:
                low = ss & -ss
                v |= 1 << perm[low.bit_length() - 1]
                ss ^= low
            t[s] = v
        tables.append(tuple(t))
    return tuple(tables)


def apply_permutation(family: int, perm: tuple[int, ...], ground: GroundSet) -> int:
    """Relabel a family mask along an element permutation (element i becomes perm[i])."""
    _check_family(family, ground)
    if sorted(perm) != list(range(ground.n)):
        raise ValueError(f"{perm!r} is not a permutation of 0..{ground.n - 1}")
    out = 0
    for m in subset_elements(family):
        v = 0
        for i in subset_elements(m):
            v |= 1 << perm[i]
        out |= 1 << v
    return out


def canonical_form(family: int, ground: GroundSet) -> int:
    """Minimum family-mask value over all relabelings of the ground set.

    Two families are isomorphic iff their canonical forms are equal."""
    _check_family(family, ground)
    members = list(subset_elements(family))
    best = None
    for table in _perm_tables(ground.n):
        v = 0
        for m in members:
            v |= 1 << table[m]
        if best is None or v < best:
            best = v
    return best if best is not None else 0


def canonical_permutation(family: int, ground: GroundSet) -> tuple[int, ...]:
    """An element permutation whose relabeling of `family` attains the canonical form."""
    _check_family(family, ground)
    members = list(subset_elements(family))
    best = None
    best_perm = tuple(range(ground.n))
    for perm, table in zip(permutations(range(ground.n)), _perm_tables(ground.n)):
        v = 0
        for m in members:
            v |= 1 << table[m]
        if best is None or v < best:
            best = v
            best_perm = perm
    return best_perm


@functools.lru_cache(maxsize=None)
def _cover_masks(n: int) -> tuple[int, ...]:
    """For each subset s, the family mask of its one-element extensions."""
    out = []
    for s in range(1 << n):
        m = 0
        for i in range(n):
            b = 1 << i
            if not s & b:
                m |= 1 << (s | b)
        out.append(m)
    return tuple(out)


def labeled_geometries(ground: GroundSet) -> Iterator[int]:
    """Yield the family mask of every labeled convex geometry on the ground set.

    Families are built one cardinality layer at a time, from size n-1 down to
    the empty set.  A subset may be chosen only when one of its one-element
    extensions is already chosen (the extension axiom, checked as the layers
    descend), and every pairwise intersection of chosen sets becomes an
    obligation that must be chosen when its own layer is reached (intersection
    closure).  Obligations are always strictly smaller than the sets creating
    them, so each is still open when its layer comes up; a branch dies when an
    obligated set has no chosen extension left.  Each labeled geometry is
    produced exactly once.
    """
    n = ground.n
    cover = _cover_masks(n)
    layers: list[list[int]] = [[] for _ in range(n + 1)]
    for s in range(1 << n):
        layers[s.bit_count()].append(s)

    def members_of(family: int) -> list[int]:
        out = []
        while family:
            low = family & -family
            out.append(low.bit_length() - 1)
            family ^= low
        return out

    def descend(k: int, family: int, need: int) -> Iterator[int]:
        if k == 0:
            # the empty set is forced by the axioms and needs a chosen singleton
            if family & cover[0]:
                yield family | 1
            return
        forced = []
        free = []
        for s in layers[k]:
            if family & cover[s]:
                if need >> s & 1:
                    forced.append(s)
                else:
                    free.append(s)
            elif need >> s & 1:
                return  # an obligated set lost every possible extension
        base_members = members_of(family)
        base_family = family
        base_need = need
        for s in forced:
            for t in base_members:
                base_need |= 1 << (s & t)
            base_members.append(s)
            base_family |= 1 << s
        f = len(free)
        fams = [0] * (1 << f)
        needs = [0] * (1 << f)
        fams[0] = base_family
        needs[0] = base_need
        with_base = []
        for s in free:
            m = 0
            for t in base_members:
                m |= 1 << (s & t)
            with_base.append(m)
        pair = [[0] * f for _ in range(f)]
        for i in range(f):
            for j in range(i):
                pair[i][j] = pair[j][i] = 1 << (free[i] & free[j])
        for c in range(1 << f):
            if c:
                low = c & -c
                i = low.bit_length() - 1
                rest = c ^ low
                nd = needs[rest] | with_base[i]
                prow = pair[i]
                rr = rest
                while rr:
                    lo2 = rr & -rr
                    nd |= prow[lo2.bit_length() - 1]
                    rr ^= lo2
                fams[c] = fams[rest] | (1 << free[i])
                needs[c] = nd
            yield from descend(k - 1, fams[c], needs[c])

    yield from descend(n - 1, 1 << ground.full_mask, 0)


def enumerate_geometries(ground: GroundSet) -> list[int]:
    """One canonical representative per isomorphism class of convex geometries,
    sorted by (member count, canonical mask value)."""
    seen: set[int] = set()
    for fam in labeled_geometries(ground):
        seen.add(canonical_form(fam, ground))
    return sorted(seen, key=lambda f: (f.bit_count(), f))
