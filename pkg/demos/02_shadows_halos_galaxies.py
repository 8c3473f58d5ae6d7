#!/usr/bin/env python3
"""Shadows (standard parts), halos and the galaxy-block order."""

import sys
from pathlib import Path

_SRC = Path(__file__).resolve().parents[1] / "src"
if _SRC.is_dir() and str(_SRC) not in sys.path:
    sys.path.insert(0, str(_SRC))

from fractions import Fraction

from hyperreal import EPS, OMEGA, HyperReal, galaxy_compare, galaxy_equiv, halo_equiv

x = 3 + 2 * EPS + EPS * EPS
print("Every limited element is infinitesimally close to exactly one real:")
print("  x          =", x)
print("  shadow(x)  =", x.shadow())
print("  x ~ 3      ?", halo_equiv(x, HyperReal.from_rational(3)))
print("  x ~ 3.001  ?", halo_equiv(x, HyperReal.from_rational(Fraction(3001, 1000))))

print("\nShadows respect the arithmetic:")
y = HyperReal.from_rational(Fraction(1, 2)) - EPS
print("  shadow(x*y) =", (x * y).shadow(), " = shadow(x)*shadow(y) =", x.shadow() * y.shadow())

print("\nGalaxies: being a limited distance apart.")
print("  w ~galaxy~ w+5  ?", galaxy_equiv(OMEGA, OMEGA + 5))
print("  w ~galaxy~ 2w   ?", galaxy_equiv(OMEGA, OMEGA + OMEGA))

print("\nGalaxy blocks are ordered, with no largest block and dense gaps:")
omega_sq = OMEGA * OMEGA
mid = (OMEGA + omega_sq) * HyperReal.from_rational(Fraction(1, 2))
print("  galaxy(w)  vs galaxy(2w)  :", galaxy_compare(OMEGA, OMEGA + OMEGA).value)
print("  galaxy(w)  vs galaxy(mid) :", galaxy_compare(OMEGA, mid).value)
print("  galaxy(mid) vs galaxy(w^2):", galaxy_compare(mid, omega_sq).value)
