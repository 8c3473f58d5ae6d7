#!/usr/bin/env python3
"""The finite filter laboratory: axioms, closures, enumeration."""

import sys
from pathlib import Path

_SRC = Path(__file__).resolve().parents[1] / "src"
if _SRC.is_dir() and str(_SRC) not in sys.path:
    sys.path.insert(0, str(_SRC))

import json

from hyperreal.filters import (
    SetFamily,
    classify_family,
    enumerate_ultrafilters,
    generate_filter,
    powerset_family,
    trivial_filter,
)

print("Classifying candidate families on the ground set {0, 1, 2}:")
for label, family in [
    ("powerset", powerset_family(3)),
    ("{I}", trivial_filter(3)),
    ("{S : 0 in S}", SetFamily.from_sets(3, [[0], [0, 1], [0, 2], [0, 1, 2]])),
]:
    tag = classify_family(family)
    print(
        f"  {label:14s} filter={tag.is_filter} proper={tag.is_proper} "
        f"ultra={tag.is_ultrafilter} generator={tag.principal_generator}"
    )

print("\nClosing a seed under intersections and supersets:")
print("  seed {{0,1}}  ->", generate_filter(SetFamily.from_sets(3, [[0, 1]])).to_sets())
print("  seed {}       ->", generate_filter(SetFamily.from_sets(3, [])).to_sets())
improper = generate_filter(SetFamily.from_sets(3, [[0], [1]]))
print("  seed {{0},{1}} -> proper?", classify_family(improper).is_proper, "(disjoint seeds collapse)")

print("\nExhaustive enumeration finds exactly |I| ultrafilters, all principal:")
for size in (1, 2, 3, 4):
    found = enumerate_ultrafilters(size, mode="exhaustive")
    print(f"  |I| = {size}: {len(found)} ultrafilters")
print("  on |I| = 3 they are:")
for fam in enumerate_ultrafilters(3):
    print("   ", json.dumps(fam.to_sets()))
