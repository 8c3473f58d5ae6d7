#!/usr/bin/env python3
"""Tour of the basic arithmetic: infinitesimals, unlimited numbers, classes."""

import sys
from pathlib import Path

_SRC = Path(__file__).resolve().parents[1] / "src"
if _SRC.is_dir() and str(_SRC) not in sys.path:
    sys.path.insert(0, str(_SRC))

from hyperreal import EPS, OMEGA, HyperReal

print("eps is a positive infinitesimal, w = eps^-1 a positive unlimited:")
print("  eps        =", EPS, "  ->", EPS.classify().value)
print("  w          =", OMEGA, " ->", OMEGA.classify().value)
print("  eps * w    =", EPS * OMEGA)
print("  w + 5      =", OMEGA + 5, " ->", (OMEGA + 5).classify().value)

print("\nOrder decisions are exact, even against huge constants:")
print("  w > 10^100 ?", OMEGA > HyperReal.from_rational(10**100))
print("  eps < 1/10^100 ?", EPS < HyperReal.from_rational(1) / 10**100)

print("\nInverses expand as truncated series (relative order 8 here):")
x = 1 + EPS
print("  1/(1+eps)  =", x.inv(8))
print("  check      : (1+eps) * inv =", x * x.inv(8))

print("\nRoots keep the class of their argument:")
print("  root(eps, 2) =", EPS.root(2), " ->", EPS.root(2).classify().value)
print("  root(4, 2)   =", HyperReal.from_rational(4).root(2))
print("  root(1+eps,2)=", (1 + EPS).root(2, 5))

print("\nThe indeterminate forms really are indeterminate:")
eps2 = EPS * EPS
print("  eps/eps^2 ->", (EPS / eps2).classify().value)
print("  eps^2/eps ->", (eps2 / EPS).classify().value)
print("  eps * w   ->", (EPS * OMEGA).classify().value)
print("  eps * w^2 ->", (EPS * OMEGA * OMEGA).classify().value)
