#!/usr/bin/env python3
"""Sequences as rational functions of n, compared and embedded."""

import sys
from pathlib import Path

_SRC = Path(__file__).resolve().parents[1] / "src"
if _SRC.is_dir() and str(_SRC) not in sys.path:
    sys.path.insert(0, str(_SRC))

from hyperreal import OMEGA, RatSeq, embed, seq_compare

n = RatSeq.identity()              # 1, 2, 3, ...
eps_seq = n.reciprocal()           # 1, 1/2, 1/3, ...
print("Sequences compare by their eventual behavior:")
print("  1/n vs 0     :", seq_compare(eps_seq, RatSeq.constant(0)).value)
print("  n   vs n+1   :", seq_compare(n, n + 1).value)

r = RatSeq.parse("(n^2 - 5*n)/(n + 1)")
print("  (n^2-5n)/(n+1) vs n :", seq_compare(r, n).value)
print("  ... even though early terms disagree: r(1) =", r.value_at(1), ", r(10) =", r.value_at(10))

print("\nAgreement sets report how large the agreement region is:")
ag = r.agreement(n, "lt")
print("  [[r < n]] is", ag.verdict, "with no exceptions past index", ag.witness)

print("\nEmbedding sends n -> eps^-1; the identity sequence becomes w:")
print("  embed(n)      =", embed(n), "  (w?", embed(n) == OMEGA, ")")
print("  embed(1/n)    =", embed(eps_seq))
s = RatSeq.parse("(2*n^2+1)/(n^2+3)")
v = embed(s, 8)
print("  embed((2n^2+1)/(n^2+3)) =", v)
print("  its shadow is the limit  :", v.shadow())
print("  numeric check at n=10^6  :", float(s.value_at(10**6)))
