#!/usr/bin/env python3
"""Derivatives, limits and continuity as plain infinitesimal arithmetic."""

import sys
from pathlib import Path

_SRC = Path(__file__).resolve().parents[1] / "src"
if _SRC.is_dir() and str(_SRC) not in sys.path:
    sys.path.insert(0, str(_SRC))

from hyperreal import EPS, eval_hyper, newton_quotient
from hyperreal.calculus import continuity_at, derivative, limit_fun, limit_seq
from hyperreal.errors import NonDifferentiableError

print("A derivative is the shadow of a Newton quotient:")
print("  f = x^2 at x0 = 3")
print("  f(3 + eps)            =", eval_hyper("x^2", 3 + EPS))
print("  (f(3+eps) - f(3))/eps =", newton_quotient("x^2", 3, EPS))
print("  derivative            =", derivative("x^2", 3))

print("\nOne-sided quotients of |x| at 0 disagree, so no derivative exists:")
print("  quotient with +eps:", newton_quotient("abs(x)", 0, EPS))
print("  quotient with -eps:", newton_quotient("abs(x)", 0, -EPS))
try:
    derivative("abs(x)", 0)
except NonDifferentiableError as exc:
    print("  derivative -> non-differentiable,", list(exc.witnesses)[:2], "...")

print("\nSequence limits: evaluate at n = w and take the shadow.")
for text in ("1/n", "(2*n^2+1)/(n^2+3)", "n^2"):
    result = limit_seq(text)
    shown = result.value if result.kind == "finite" else result.kind
    print(f"  lim {text:18s} = {shown}")

print("\nFunction limits probe the halo of the point:")
print("  (x^2-1)/(x-1) at 1 :", limit_fun("(x^2 - 1)/(x - 1)", 1).value)
print("  1/x at 0+          :", limit_fun("1/x", 0, side="right").kind)
print("  1/x at 0 (both)    :", limit_fun("1/x", 0).kind)
print("  x^2 at +inf        :", limit_fun("x^2", "+inf").kind)

print("\nContinuity means mapping the halo of c into the halo of f(c):")
for text, at in (("x^2", 2), ("abs(x)", 0), ("1/x", 0), ("abs(x)/x", 0)):
    print(f"  {text:10s} at {at}: {continuity_at(text, at)}")
