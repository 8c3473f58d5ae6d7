"""Brute-force laboratory for filters and ultrafilters on finite ground sets.

A family of subsets of {0, ..., size-1} is stored as a set of bitmasks.
A filter is a nonempty family closed under pairwise intersection and
superset; it is proper when it omits the empty set, and an ultrafilter
when it is additionally proper and contains one of A, complement(A) for
every subset A.  Properness is part of "ultrafilter" here: the full
powerset satisfies the dichotomy but does not count.

On a finite ground set every proper ultrafilter is principal, and there
are exactly as many as there are elements; enumeration verifies this by
scanning every family (small sizes) or every dichotomy-consistent
candidate (size 5), with direct construction available up to size 8.

Families are immutable bitset values; all functions are pure and yield
deterministic, sorted results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

MAX_GROUND = 8
MAX_EXHAUSTIVE = 4  # full scan of all 2**(2**n) families
MAX_CANDIDATE = 5  # scan of dichotomy-consistent candidates


@dataclass(frozen=True)
class GroundSet:
    """The index set {0, ..., size-1}."""

    size: int

    def __post_init__(self):
        if not 1 <= self.size <= MAX_GROUND:
            raise ValueError(f"ground set size must be 1..{MAX_GROUND}")

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def subsets(self) -> range:
        return range(1 << self.size)


class SetFamily:
    """A deduplicated family of subsets of a finite ground set."""

    __slots__ = ("ground", "members")

    def __init__(self, ground: GroundSet | int, members: Iterable[int] = ()):
        g = ground if isinstance(ground, GroundSet) else GroundSet(ground)
        mask = g.full_mask
        mem = frozenset(int(m) for m in members)
        for m in mem:
            if m < 0 or m & ~mask:
                raise ValueError(f"member {m:b} is not a subset of the ground set")
        object.__setattr__(self, "ground", g)
        object.__setattr__(self, "members", mem)

    def __setattr__(self, name, value):
        raise AttributeError("SetFamily values are immutable")

    @classmethod
    def from_sets(cls, size: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        members = []
        for s in sets:
            m = 0
            for element in s:
                m |= 1 << int(element)
            members.append(m)
        return cls(GroundSet(size), members)

    def to_sets(self) -> list[list[int]]:
        """Members as sorted lists of sorted elements (the JSON rendering)."""
        out = [_mask_to_list(m) for m in self.members]
        out.sort()
        return out

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return (
            isinstance(other, SetFamily)
            and self.ground == other.ground
            and self.members == other.members
        )

    def __hash__(self):
        return hash((self.ground, self.members))

    def __repr__(self):
        return f"SetFamily({self.ground.size}, {self.to_sets()})"


def _mask_to_list(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


@dataclass(frozen=True)
class FamilyClassification:
    is_filter: bool
    is_proper: bool
    is_ultrafilter: bool
    principal_generator: int | None


def classify_family(family: SetFamily) -> FamilyClassification:
    """Exhaustively check the filter, properness and dichotomy axioms."""
    g = family.ground
    members = family.members
    full = g.full_mask

    is_filter = bool(members)
    if is_filter:
        for a in members:
            for b in members:
                if a & b not in members:
                    is_filter = False
                    break
            if not is_filter:
                break
    if is_filter:
        for a in members:
            for s in g.subsets():
                if a & s == a and s not in members:
                    is_filter = False
                    break
            if not is_filter:
                break

    is_proper = 0 not in members
    dichotomy = all(s in members or (full ^ s) in members for s in g.subsets())
    is_ultra = is_filter and is_proper and dichotomy

    generator = None
    for i in range(g.size):
        if members == frozenset(s for s in g.subsets() if s >> i & 1):
            generator = i
            break
    return FamilyClassification(is_filter, is_proper, is_ultra, generator)


def generate_filter(seed: SetFamily) -> SetFamily:
    """Smallest filter containing the seed: intersection then superset closure.

    The empty seed generates {I}; a seed with disjoint members generates a
    family containing the empty set, which makes the result improper (the
    whole powerset).
    """
    g = seed.ground
    current = set(seed.members)
    current.add(g.full_mask)
    worklist = list(current)
    while worklist:
        a = worklist.pop()
        for b in list(current):
            c = a & b
            if c not in current:
                current.add(c)
                worklist.append(c)
    closed = set(current)
    for m in current:
        for s in g.subsets():
            if m & s == m:
                closed.add(s)
    return SetFamily(g, closed)


def principal_ultrafilter(size: int, element: int) -> SetFamily:
    """{S : element in S} on {0, ..., size-1}."""
    g = GroundSet(size)
    if not 0 <= element < size:
        raise ValueError("generator outside the ground set")
    return SetFamily(g, (s for s in g.subsets() if s >> element & 1))


def powerset_family(size: int) -> SetFamily:
    g = GroundSet(size)
    return SetFamily(g, g.subsets())


def trivial_filter(size: int) -> SetFamily:
    """{I}, the smallest filter on the ground set."""
    g = GroundSet(size)
    return SetFamily(g, (g.full_mask,))


def cofinite_family(size: int) -> SetFamily:
    """Sets with finite complement; on a finite ground set, every set."""
    return powerset_family(size)


def enumerate_ultrafilters(ground: GroundSet | int, mode: str = "auto") -> list[SetFamily]:
    """All proper ultrafilters on the ground set.

    mode "exhaustive" scans every family (size <= 4: 2**(2**n) candidates);
    size 5 scans the families that pick exactly one set out of each
    complementary pair, which every proper ultrafilter must do, so the scan
    still covers all of them.  mode "principal" constructs the size many
    principal ultrafilters directly (any size up to 8).  "auto" picks the
    scan for size <= 5 and the construction above that.
    """
    g = ground if isinstance(ground, GroundSet) else GroundSet(ground)
    if mode == "auto":
        mode = "exhaustive" if g.size <= MAX_CANDIDATE else "principal"
    if mode == "principal":
        return [principal_ultrafilter(g.size, i) for i in range(g.size)]
    if mode != "exhaustive":
        raise ValueError(f"unknown mode {mode!r}")
    if g.size <= MAX_EXHAUSTIVE:
        masks = _scan_all_families(g)
    elif g.size <= MAX_CANDIDATE:
        masks = _scan_dichotomy_candidates(g)
    else:
        raise ValueError(f"exhaustive enumeration is capped at size {MAX_CANDIDATE}")
    return [SetFamily(g, (s for s in g.subsets() if fm >> s & 1)) for fm in sorted(masks)]


def _complement_pairs(g: GroundSet) -> list[tuple[int, int]]:
    full = g.full_mask
    return [(s, full ^ s) for s in g.subsets() if s < (full ^ s)]


def _superset_masks(g: GroundSet) -> list[int]:
    masks = []
    for s in g.subsets():
        acc = 0
        for t in g.subsets():
            if s & t == s:
                acc |= 1 << t
        masks.append(acc)
    return masks


def _closure_ok(fm: int, g: GroundSet, sup_masks: list[int]) -> bool:
    members = [s for s in g.subsets() if fm >> s & 1]
    if not members:
        return False
    for m in members:
        if fm & sup_masks[m] != sup_masks[m]:
            return False
    for a in members:
        for b in members:
            if not fm >> (a & b) & 1:
                return False
    return True


def _scan_all_families(g: GroundSet) -> list[int]:
    pairs = _complement_pairs(g)
    sup_masks = _superset_masks(g)
    found = []
    for fm in range(1 << (1 << g.size)):
        if fm & 1:  # contains the empty set: improper
            continue
        if any(not (fm >> a & 1) and not (fm >> b & 1) for a, b in pairs):
            continue
        if _closure_ok(fm, g, sup_masks):
            found.append(fm)
    return found


def _scan_dichotomy_candidates(g: GroundSet) -> list[int]:
    # A proper ultrafilter holds exactly one of each complementary pair:
    # at least one by dichotomy, never both or the empty intersection would
    # be a member.  Scanning the 2**(2**(n-1)) choice vectors therefore
    # covers every proper ultrafilter.
    pairs = _complement_pairs(g)
    sup_masks = _superset_masks(g)
    found = []
    for choice in range(1 << len(pairs)):
        fm = 0
        for k, (a, b) in enumerate(pairs):
            fm |= 1 << (b if choice >> k & 1 else a)
        if fm & 1:
            continue
        if _closure_ok(fm, g, sup_masks):
            found.append(fm)
    return found
