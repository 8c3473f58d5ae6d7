#!/usr/bin/env python3
"""Statement linting: what transfers, which direction, and why not."""

import sys
from pathlib import Path

_SRC = Path(__file__).resolve().parents[1] / "src"
if _SRC.is_dir() and str(_SRC) not in sys.path:
    sys.path.insert(0, str(_SRC))

from hyperreal.transfer import (
    check_statement,
    check_transferable,
    classify_text,
    naturals_structure,
    parse_formula,
    reals_structure,
    sequence_structure,
    star_transform,
)

N = naturals_structure()
R = reals_structure()

print("Classifying text against the language of a structure:")
for text, structure, label in [
    ("forall K subset N, empty in K", N, "N"),
    ("x in N", N, "N"),
    ("1 in N", N, "N"),
    ("forall x in N, x + 1 in N", N, "N"),
    ("forall n in N, exists r in R : n < r", R, "R"),
    ("forall n in N, exists r in R : n < r", N, "N"),
    ("forall c in C, c + 1 in R", R, "R"),
]:
    verdict = classify_text(text, structure)
    print(f"  [{label}] {text}")
    print(f"      -> {verdict.kind}" + (f" ({verdict.reason})" if verdict.reason else ""))

print("\nStar transform of a statement (symbols starred, built-ins bare):")
statement = parse_formula("forall x in N, x + 1 in N", N)
print("  ", statement.render(), " => ", star_transform(statement).render())

print("\nBackward transfer needs every symbol internal:")
star_seq = sequence_structure().star().with_constants("omega")
bounded = parse_formula("forall n in *N, |*s(n)| <= omega", star_seq)
verdict = check_transferable(bounded, "backward")
print("  ", bounded.render())
print("      statement?", check_statement(bounded).kind, "| backward:", verdict.kind,
      "| blockers:", list(verdict.external_symbols))
weakened = parse_formula("exists r in *R : forall n in *N, |*s(n)| <= r", star_seq)
print("  ", weakened.render())
print("      backward:", check_transferable(weakened, "backward").kind,
      "(the unlimited bound became a bound variable)")
