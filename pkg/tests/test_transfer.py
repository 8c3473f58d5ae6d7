"""Statement classification, star transforms and backward-transfer linting."""

import pytest

from hyperreal.errors import AlreadyStarredError, NotAStatementError, NotInLanguageError
from hyperreal.transfer import (
    check_statement,
    check_transferable,
    classify_text,
    complexes_structure,
    naturals_structure,
    parse_formula,
    reals_structure,
    sequence_structure,
    star_transform,
)

N = naturals_structure()
R = reals_structure()
C = complexes_structure()


# ---------------------------------------------------------------------------
# The six classification examples


def test_quantifying_over_subsets_is_not_in_language():
    verdict = classify_text("forall K subset N, empty in K", N)
    assert verdict.kind == "not-in-language"
    assert "powerset" in verdict.reason


def test_formula_with_free_variable_is_not_a_statement():
    verdict = classify_text("x in N", N)
    assert verdict.kind == "formula-not-statement"
    assert verdict.free_vars == ("x",)


def test_constant_membership_is_a_statement():
    assert classify_text("1 in N", N).kind == "statement"


def test_successor_closure_is_a_statement():
    assert classify_text("forall x in N, x + 1 in N", N).kind == "statement"


def test_archimedean_statement_depends_on_the_structure():
    text = "forall n in N, exists r in R : n < r"
    assert classify_text(text, R).kind == "statement"
    verdict = classify_text(text, N)
    assert verdict.kind == "not-in-language"
    assert "'R'" in verdict.reason


def test_complex_quantification_is_legitimate_in_the_reals():
    # C is registered as a product of the carrier, so ranging over it is fine.
    text = "forall c in C, c + 1 in R"
    assert classify_text(text, R).kind == "statement"
    assert classify_text(text, C).kind == "statement"


# ---------------------------------------------------------------------------
# Star transform


def test_star_transform_of_successor_closure():
    formula = parse_formula("forall x in N, x + 1 in N", N)
    assert star_transform(formula).render() == "forall x in *N, x + *1 in *N"


def test_star_transform_of_constant_statement():
    formula = parse_formula("1 in N", N)
    assert star_transform(formula).render() == "*1 in *N"


def test_star_transform_rejects_already_starred():
    starred = star_transform(parse_formula("forall x in N, x + 1 in N", N))
    with pytest.raises(AlreadyStarredError):
        star_transform(starred)


def test_star_transform_requires_a_statement():
    with pytest.raises(NotAStatementError):
        star_transform(parse_formula("x in N", N))


def test_star_transform_preserves_shape():
    texts = [
        "forall x in N, x + 1 in N",
        "forall x in N, (x in N and x + 1 in N) -> x + 1 + 1 in N",
        "exists x in N : not x = 1",
    ]
    for text in texts:
        formula = parse_formula(text, N)
        assert star_transform(formula).node_count() == formula.node_count()


def test_star_transform_roundtrip_is_backward_transferable():
    texts = [
        "forall x in N, x + 1 in N",
        "1 in N",
        "forall n in N, exists r in R : n < r",
    ]
    for text in texts:
        structure = N if "R" not in text else R
        starred = star_transform(parse_formula(text, structure))
        assert check_transferable(starred, "backward").kind == "transferable"


def test_starred_text_reparses_in_the_star_structure():
    starred = star_transform(parse_formula("forall x in N, x + 1 in N", N))
    reparsed = parse_formula(starred.render(), N.star())
    assert reparsed.render() == starred.render()


# ---------------------------------------------------------------------------
# Transferability linting


def star_seq():
    return sequence_structure().star().with_constants("omega")


def test_bounded_by_external_constant_blocks_backward_transfer():
    formula = parse_formula("forall n in *N, |*s(n)| <= omega", star_seq())
    assert check_statement(formula).kind == "statement"
    verdict = check_transferable(formula, "backward")
    assert verdict.kind == "not-transferable"
    assert verdict.external_symbols == ("omega",)


def test_existential_weakening_restores_backward_transfer():
    formula = parse_formula(
        "exists r in *R : forall n in *N, |*s(n)| <= r", star_seq()
    )
    verdict = check_transferable(formula, "backward")
    assert verdict.kind == "transferable"


def test_any_statement_is_forward_transferable():
    for text, structure in [
        ("forall x in N, x + 1 in N", N),
        ("1 in N", N),
        ("forall n in *N, |*s(n)| <= omega", star_seq()),
    ]:
        verdict = check_transferable(parse_formula(text, structure), "forward")
        assert verdict.kind == "transferable"


def test_free_variables_block_both_directions():
    formula = parse_formula("x in N", N)
    for direction in ("forward", "backward"):
        verdict = check_transferable(formula, direction)
        assert verdict.kind == "not-transferable"
        assert verdict.free_vars == ("x",)


# ---------------------------------------------------------------------------
# Language checks


def test_unregistered_function_symbol_rejected():
    with pytest.raises(NotInLanguageError):
        parse_formula("forall x in N, f(x) in N", N)


def test_starred_symbol_outside_star_structure_rejected():
    with pytest.raises(NotInLanguageError):
        parse_formula("forall x in *N, x + 1 in *N", N)


def test_membership_in_a_bound_variable_rejected():
    with pytest.raises(NotInLanguageError):
        parse_formula("forall x in N, 1 in x", N)


def test_connectives_and_negation_parse():
    formula = parse_formula(
        "forall x in N, (x = 1 or not x = 1) and (x in N -> x + 1 in N)", N
    )
    assert check_statement(formula).kind == "statement"


def test_registered_relations_and_functions():
    from hyperreal.transfer import Structure

    arith = Structure.build(
        "A", sets={"N": 1}, relations={"divides": 2}, functions={"succ": 1}
    )
    formula = parse_formula("forall x in N, divides(x, succ(x))", arith)
    assert check_statement(formula).kind == "statement"
    starred = star_transform(formula)
    assert starred.render() == "forall x in *N, *divides(x, *succ(x))"
    assert check_transferable(starred, "backward").kind == "transferable"
    reparsed = parse_formula(starred.render(), arith.star())
    assert reparsed.render() == starred.render()


def test_relation_arity_enforced():
    from hyperreal.transfer import Structure

    arith = Structure.build("A", sets={"N": 1}, relations={"divides": 2})
    with pytest.raises(NotInLanguageError):
        parse_formula("divides(1)", arith)


def test_standard_symbols_are_external_for_backward_transfer():
    formula = parse_formula("forall x in N, x + 1 in N", N)
    verdict = check_transferable(formula, "backward")
    assert verdict.kind == "not-transferable"
    assert verdict.external_symbols == ("N",)


def test_verdict_json_shape():
    verdict = classify_text("x in N", N)
    payload = verdict.to_json_dict()
    assert set(payload) == {
        "verdict",
        "free_vars",
        "external_symbols",
        "transformed_text",
        "reason",
        "direction",
    }
    assert payload["verdict"] == "formula-not-statement"
    assert payload["free_vars"] == ["x"]
