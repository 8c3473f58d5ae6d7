#!/usr/bin/env python3
"""Vectors over hypercomplex scalars: lengths, halos, standard parts."""

import sys
from pathlib import Path

_SRC = Path(__file__).resolve().parents[1] / "src"
if _SRC.is_dir() and str(_SRC) not in sys.path:
    sys.path.insert(0, str(_SRC))

from hyperreal import EPS, OMEGA, parse_hvector
from hyperreal.hilbert import inner, norm_sq, standard_part_vec, vec_classify

print("Inner products can come out infinitesimal or unlimited:")
for text in ("[1, 0]", "[eps, eps]", "[w, 0]", "[1 + 2*i, eps]"):
    v = parse_hvector(text)
    print(f"  {text:14s} norm^2 = {norm_sq(v)}")

print("\nClassification against the standard vectors:")
for text in ("[1, 2 + 3*i]", "[1 + eps, 2 - eps^2]", "[eps, eps]", "[w + 1, w + 1]"):
    v = parse_hvector(text)
    tag = vec_classify(v)
    line = f"  {text:20s} -> {tag.value}"
    if tag.value != "remote":
        line += "  standard part " + str([str(c) for c in standard_part_vec(v)])
    print(line)

print("\nScaling moves vectors between the classes:")
v = parse_hvector("[1, 1]")
print("  [1, 1] is", vec_classify(v).value)
print("  eps*[1, 1] is", vec_classify(EPS * v).value)
print("  w*(1+eps)*[1, 1] is", vec_classify(OMEGA * (1 + EPS) * v).value)

print("\nOrthogonality and conjugate symmetry:")
a, b = parse_hvector("[1, 0]"), parse_hvector("[0, 1]")
print("  <e1, e2> =", inner(a, b))
x, y = parse_hvector("[1 + 2*i, eps]"), parse_hvector("[3, 1 - i]")
print("  <x, y>   =", inner(x, y))
print("  <y, x>   =", inner(y, x), " (the conjugate)")
