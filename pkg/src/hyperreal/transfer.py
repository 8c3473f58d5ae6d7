"""First-order statement checker, star-transformer and transfer linter.

The checker is purely syntactic: it decides whether text is a well-formed
formula in the language of a registered relational structure, whether it is
a statement (no free variables), what its star-transform looks like, and
whether it is in transferable form.  It never evaluates truth.

Surface syntax (ASCII):

    formula  := ('forall' | 'exists') var ('in' | 'subset') set (',' | ':') formula
              | iff
    iff      := implies ('<->' implies)*
    implies  := disj ['->' implies]
    disj     := conj ('or' conj)*
    conj     := unary ('and' unary)*
    unary    := 'not' unary | relation '(' term {',' term} ')' | atom
              | '(' formula ')'
    atom     := term (('in' set) | relop term)
    relop    := '<' | '<=' | '=' | '!=' | '>=' | '>'
    term     := part (('+' | '-') part)*
    part     := '|' term '|' | function '(' term {',' term} ')'
              | constant | variable | numeral | '(' term ')'

Quantifiers may only range over sets registered in the structure (subsets
of finite powers of the carrier); 'subset' bounds quantify over a powerset
and are rejected with NotInLanguage, as is any unregistered domain.
Unregistered bare identifiers are variables.  A '*' prefix attaches to the
following symbol (e.g. *N, *s, *1) and marks it internal.

The transfer rules are checked in form only: any statement is eligible in
the forward direction; the backward direction additionally requires every
set, relation, function and constant symbol to be internal, i.e. a starred
symbol or one declared internal.  The built-in symbols +, -, | |, =, <,
<=, >, >=, != and 'in' stay unstarred on both sides by convention.

Structures are immutable after construction (builder methods return new
instances) and parsing is pure, so everything here is thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

from .errors import (
    AlreadyStarredError,
    NotAStatementError,
    NotInLanguageError,
    ParseError,
)

SPECIAL_RELATIONS = ("=", "<", "<=", ">", ">=", "!=", "in")
SPECIAL_FUNCTIONS = ("+", "-", "abs")
KEYWORDS = ("forall", "exists", "in", "subset", "and", "or", "not")


# ---------------------------------------------------------------------------
# Structures


@dataclass(frozen=True)
class SymbolSpec:
    arity: int = 0
    internal: bool = False


@dataclass(frozen=True)
class Structure:
    """A named relational structure: sets, relations, functions, constants.

    ``sets`` maps a set name to its arity as a product of the carrier
    (e.g. a plane registered as carrier^2 has arity 2); quantification over
    any registered set is legitimate.  Symbols whose name starts with '*'
    or that are declared internal count as internal for backward transfer.
    """

    name: str
    sets: Mapping[str, SymbolSpec] = field(default_factory=dict)
    relations: Mapping[str, SymbolSpec] = field(default_factory=dict)
    functions: Mapping[str, SymbolSpec] = field(default_factory=dict)
    constants: Mapping[str, SymbolSpec] = field(default_factory=dict)
    is_star: bool = False

    @staticmethod
    def build(
        name: str,
        sets: Mapping[str, int] | Iterable[str] = (),
        relations: Mapping[str, int] = (),
        functions: Mapping[str, int] = (),
        constants: Iterable[str] = (),
        is_star: bool = False,
    ) -> "Structure":
        if not isinstance(sets, Mapping):
            sets = {s: 1 for s in sets}
        internal = is_star
        return Structure(
            name=name,
            sets={n: SymbolSpec(a, internal) for n, a in dict(sets).items()},
            relations={n: SymbolSpec(a, internal) for n, a in dict(relations).items()},
            functions={n: SymbolSpec(a, internal) for n, a in dict(functions).items()},
            constants={n: SymbolSpec(0, internal) for n in constants},
            is_star=is_star,
        )

    def star(self) -> "Structure":
        """The star structure: every symbol starred and tagged internal."""
        if self.is_star:
            raise AlreadyStarredError(f"{self.name} is already a star structure")
        starred = lambda table: {f"*{n}": replace(s, internal=True) for n, s in table.items()}
        return Structure(
            name=f"*{self.name}",
            sets=starred(self.sets),
            relations=starred(self.relations),
            functions=starred(self.functions),
            constants=starred(self.constants),
            is_star=True,
        )

    def with_constants(self, *names: str, internal: bool = False) -> "Structure":
        """A copy with extra constant symbols (external by default)."""
        constants = dict(self.constants)
        for n in names:
            constants[n] = SymbolSpec(0, internal)
        return replace(self, constants=constants)

    def is_internal_symbol(self, name: str) -> bool:
        if name.startswith("*"):
            return True
        for table in (self.sets, self.relations, self.functions, self.constants):
            if name in table:
                return table[name].internal
        return False


def naturals_structure() -> Structure:
    return Structure.build("N", sets={"N": 1})


def reals_structure() -> Structure:
    # C is registered as the arity-2 product encoding of the plane, which
    # legitimizes quantification over it; no complex semantics is attached.
    return Structure.build("R", sets={"N": 1, "R": 1, "C": 2})


def complexes_structure() -> Structure:
    return Structure.build("C", sets={"C": 1, "R": 1, "N": 1})


def sequence_structure() -> Structure:
    """Naturals, reals and one sequence symbol s : N -> R."""
    return Structure.build("Seq", sets={"N": 1, "R": 1}, functions={"s": 1})


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class VarTerm:
    name: str


@dataclass(frozen=True)
class ConstTerm:
    name: str
    numeral: bool = False


@dataclass(frozen=True)
class FuncTerm:
    name: str  # '+', '-', 'abs' or a registered function symbol
    args: tuple


@dataclass(frozen=True)
class Atom:
    relation: str  # special relop, 'in', or a registered relation symbol
    args: tuple


@dataclass(frozen=True)
class Not:
    inner: "Node"


@dataclass(frozen=True)
class Connective:
    op: str  # 'and' | 'or' | '->' | '<->'
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Quantified:
    kind: str  # 'forall' | 'exists'
    variable: str
    domain: str
    body: "Node"


Node = Atom | Not | Connective | Quantified
Term = VarTerm | ConstTerm | FuncTerm


@dataclass(frozen=True)
class Formula:
    """A parsed formula together with the structure it was parsed against."""

    root: Node
    structure: Structure

    def free_variables(self) -> tuple[str, ...]:
        found: list[str] = []
        _collect_free(self.root, set(), found)
        return tuple(found)

    def is_statement(self) -> bool:
        return not self.free_variables()

    def named_symbols(self) -> tuple[str, ...]:
        found: list[str] = []
        _collect_symbols(self.root, found)
        return tuple(found)

    def node_count(self) -> int:
        return _count(self.root)

    def render(self) -> str:
        return _render_node(self.root, self.structure, 0)

    def __str__(self):
        return self.render()


def _collect_free(node, bound: set, found: list):
    if isinstance(node, Quantified):
        _collect_free(node.body, bound | {node.variable}, found)
    elif isinstance(node, Not):
        _collect_free(node.inner, bound, found)
    elif isinstance(node, Connective):
        _collect_free(node.left, bound, found)
        _collect_free(node.right, bound, found)
    elif isinstance(node, Atom):
        for arg in node.args:
            _collect_free_term(arg, bound, found)


def _collect_free_term(term, bound: set, found: list):
    if isinstance(term, VarTerm):
        if term.name not in bound and term.name not in found:
            found.append(term.name)
    elif isinstance(term, FuncTerm):
        for arg in term.args:
            _collect_free_term(arg, bound, found)


def _collect_symbols(node, found: list):
    def note(name):
        if name not in found:
            found.append(name)

    if isinstance(node, Quantified):
        note(node.domain)
        _collect_symbols(node.body, found)
    elif isinstance(node, Not):
        _collect_symbols(node.inner, found)
    elif isinstance(node, Connective):
        _collect_symbols(node.left, found)
        _collect_symbols(node.right, found)
    elif isinstance(node, Atom):
        if node.relation not in SPECIAL_RELATIONS:
            note(node.relation)
        if node.relation == "in":
            _collect_term_symbols(node.args[0], found)
            note(node.args[1].name)  # the set
        else:
            for arg in node.args:
                _collect_term_symbols(arg, found)


def _collect_term_symbols(term, found: list):
    def note(name):
        if name not in found:
            found.append(name)

    if isinstance(term, ConstTerm):
        if not term.numeral:
            note(term.name)
    elif isinstance(term, FuncTerm):
        if term.name not in SPECIAL_FUNCTIONS:
            note(term.name)
        for arg in term.args:
            _collect_term_symbols(arg, found)


def _count(node) -> int:
    if isinstance(node, Quantified):
        return 1 + _count(node.body)
    if isinstance(node, Not):
        return 1 + _count(node.inner)
    if isinstance(node, Connective):
        return 1 + _count(node.left) + _count(node.right)
    if isinstance(node, Atom):
        return 1 + sum(_count_term(a) for a in node.args)
    return 1


def _count_term(term) -> int:
    if isinstance(term, FuncTerm):
        return 1 + sum(_count_term(a) for a in term.args)
    return 1


# ---------------------------------------------------------------------------
# Lexer


_MULTI = ("<->", "->", "<=", ">=", "!=")
_SINGLE = "()|,+-<>=:"


@dataclass(frozen=True)
class _Tok:
    kind: str  # WORD NUM SYM END
    text: str
    pos: int
    starred: bool = False


def _lex_formula(source: str) -> list[_Tok]:
    tokens = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        starred = False
        start = i
        if ch == "*":
            starred = True
            i += 1
            if i >= n or not (source[i].isalnum() or source[i] == "_"):
                raise ParseError("'*' must be attached to a symbol", start)
            ch = source[i]
        if ch.isdigit():
            while i < n and source[i].isdigit():
                i += 1
            tokens.append(_Tok("NUM", source[start + starred : i], start, starred))
            continue
        if ch.isalpha() or ch == "_":
            while i < n and (source[i].isalnum() or source[i] == "_"):
                i += 1
            tokens.append(_Tok("WORD", source[start + starred : i], start, starred))
            continue
        if starred:
            raise ParseError("'*' must be attached to a symbol", start)
        matched = next((m for m in _MULTI if source.startswith(m, i)), None)
        if matched:
            tokens.append(_Tok("SYM", matched, i))
            i += len(matched)
            continue
        if ch in _SINGLE:
            tokens.append(_Tok("SYM", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Tok("END", "", n))
    return tokens


# ---------------------------------------------------------------------------
# Parser


class _FormulaParser:
    def __init__(self, source: str, structure: Structure):
        self.tokens = _lex_formula(source)
        self.index = 0
        self.structure = structure
        self.scope: list[str] = []

    def peek(self) -> _Tok:
        return self.tokens[self.index]

    def advance(self) -> _Tok:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def at_sym(self, *texts: str) -> bool:
        tok = self.peek()
        return tok.kind == "SYM" and tok.text in texts and not tok.starred

    def at_word(self, *texts: str) -> bool:
        tok = self.peek()
        return tok.kind == "WORD" and tok.text in texts and not tok.starred

    def expect_sym(self, text: str) -> _Tok:
        if self.at_sym(text):
            return self.advance()
        tok = self.peek()
        raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.pos)

    def parse(self) -> Node:
        node = self.formula()
        tok = self.peek()
        if tok.kind != "END":
            raise ParseError(f"unexpected trailing input {tok.text!r}", tok.pos)
        return node

    def formula(self) -> Node:
        if self.at_word("forall", "exists"):
            kind = self.advance().text
            var_tok = self.peek()
            if var_tok.kind != "WORD" or var_tok.starred:
                raise ParseError("expected a variable name after the quantifier", var_tok.pos)
            self.advance()
            bound_tok = self.peek()
            if self.at_word("subset") or self.at_sym("subset"):
                raise NotInLanguageError(
                    f"quantification over subsets of a set ranges in the powerset "
                    f"and is not allowed in the language of {self.structure.name}"
                )
            if not self.at_word("in"):
                raise ParseError("expected 'in' or 'subset' after the variable", bound_tok.pos)
            self.advance()
            domain = self._set_symbol()
            if self.at_sym(",") or self.at_sym(":"):
                self.advance()
            else:
                tok = self.peek()
                raise ParseError("expected ',' or ':' after the quantifier bound", tok.pos)
            self.scope.append(var_tok.text)
            body = self.formula()
            self.scope.pop()
            return Quantified(kind, var_tok.text, domain, body)
        return self.iff()

    def _set_symbol(self) -> str:
        tok = self.peek()
        if tok.kind != "WORD":
            raise ParseError("expected a set name", tok.pos)
        name = ("*" if tok.starred else "") + tok.text
        if tok.starred and not self.structure.is_star:
            raise NotInLanguageError(
                f"starred symbol {name} does not belong to the language of "
                f"{self.structure.name}"
            )
        if name not in self.structure.sets:
            raise NotInLanguageError(
                f"'{name}' is not a set in the language of {self.structure.name}"
            )
        self.advance()
        return name

    def iff(self) -> Node:
        node = self.implies()
        while self.at_sym("<->"):
            self.advance()
            node = Connective("<->", node, self.implies())
        return node

    def implies(self) -> Node:
        node = self.disj()
        if self.at_sym("->"):
            self.advance()
            return Connective("->", node, self.implies())
        return node

    def disj(self) -> Node:
        node = self.conj()
        while self.at_word("or"):
            self.advance()
            node = Connective("or", node, self.conj())
        return node

    def conj(self) -> Node:
        node = self.unary()
        while self.at_word("and"):
            self.advance()
            node = Connective("and", node, self.unary())
        return node

    def unary(self) -> Node:
        if self.at_word("not"):
            self.advance()
            return Not(self.unary())
        tok = self.peek()
        if tok.kind == "WORD" and not tok.starred and tok.text in self.structure.relations:
            return self._relation_atom()
        if self.structure.is_star and tok.kind == "WORD" and tok.starred:
            if "*" + tok.text in self.structure.relations:
                return self._relation_atom()
        if self.at_sym("("):
            saved = self.index
            self.advance()
            try:
                inner = self.formula()
                self.expect_sym(")")
                return inner
            except NotInLanguageError:
                raise
            except ParseError:
                self.index = saved
        return self.atom()

    def _relation_atom(self) -> Node:
        tok = self.advance()
        name = ("*" if tok.starred else "") + tok.text
        spec = self.structure.relations[name]
        self.expect_sym("(")
        args = [self.term()]
        while self.at_sym(","):
            self.advance()
            args.append(self.term())
        self.expect_sym(")")
        if len(args) != spec.arity:
            raise NotInLanguageError(
                f"relation {name} takes {spec.arity} argument(s), got {len(args)}"
            )
        return Atom(name, tuple(args))

    def atom(self) -> Node:
        left = self.term()
        if self.at_word("in"):
            self.advance()
            tok = self.peek()
            if tok.kind == "WORD" and not tok.starred and tok.text in self.scope:
                raise NotInLanguageError(
                    f"membership in the variable '{tok.text}' ranges over a powerset "
                    f"and is not allowed"
                )
            domain = self._set_symbol()
            return Atom("in", (left, ConstTerm(domain)))
        for op in ("<=", ">=", "!=", "<", ">", "="):
            if self.at_sym(op):
                self.advance()
                return Atom(op, (left, self.term()))
        tok = self.peek()
        raise ParseError(
            f"expected a relation after the term, found {tok.text or 'end of input'!r}",
            tok.pos,
        )

    def term(self):
        node = self.part()
        while self.at_sym("+", "-"):
            op = self.advance().text
            node = FuncTerm(op, (node, self.part()))
        return node

    def part(self):
        tok = self.peek()
        if self.at_sym("|"):
            self.advance()
            inner = self.term()
            self.expect_sym("|")
            return FuncTerm("abs", (inner,))
        if self.at_sym("("):
            self.advance()
            inner = self.term()
            self.expect_sym(")")
            return inner
        if tok.kind == "NUM":
            self.advance()
            if tok.starred and not self.structure.is_star:
                raise NotInLanguageError(
                    f"starred constant *{tok.text} does not belong to the language of "
                    f"{self.structure.name}"
                )
            return ConstTerm(tok.text, numeral=True)
        if tok.kind == "WORD":
            self.advance()
            name = ("*" if tok.starred else "") + tok.text
            if tok.starred and not self.structure.is_star:
                raise NotInLanguageError(
                    f"starred symbol {name} does not belong to the language of "
                    f"{self.structure.name}"
                )
            if self.at_sym("("):
                if name not in self.structure.functions:
                    raise NotInLanguageError(
                        f"'{name}' is not a function symbol of {self.structure.name}"
                    )
                spec = self.structure.functions[name]
                self.advance()
                args = [self.term()]
                while self.at_sym(","):
                    self.advance()
                    args.append(self.term())
                self.expect_sym(")")
                if len(args) != spec.arity:
                    raise NotInLanguageError(
                        f"function {name} takes {spec.arity} argument(s), got {len(args)}"
                    )
                return FuncTerm(name, tuple(args))
            if name in self.structure.constants:
                return ConstTerm(name)
            if not tok.starred and tok.text in KEYWORDS:
                raise ParseError(f"keyword {tok.text!r} cannot be used as a term", tok.pos)
            if tok.starred:
                raise NotInLanguageError(
                    f"starred symbol {name} is not registered in {self.structure.name}"
                )
            return VarTerm(name)
        raise ParseError(f"expected a term, found {tok.text or 'end of input'!r}", tok.pos)


def parse_formula(source: str, structure: Structure) -> Formula:
    """Parse source text as a formula in the language of the structure."""
    return Formula(_FormulaParser(source, structure).parse(), structure)


# ---------------------------------------------------------------------------
# Verdicts


@dataclass(frozen=True)
class Verdict:
    kind: str  # statement | formula-not-statement | not-in-language |
    #            transferable | not-transferable
    free_vars: tuple[str, ...] = ()
    external_symbols: tuple[str, ...] = ()
    reason: str | None = None
    direction: str | None = None
    transformed_text: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.kind,
            "free_vars": list(self.free_vars),
            "external_symbols": list(self.external_symbols),
            "transformed_text": self.transformed_text,
            "reason": self.reason,
            "direction": self.direction,
        }


def check_statement(formula: Formula) -> Verdict:
    """Statement iff every variable is bound by a quantifier."""
    free = formula.free_variables()
    if free:
        return Verdict("formula-not-statement", free_vars=free)
    return Verdict("statement")


def classify_text(source: str, structure: Structure) -> Verdict:
    """Parse and classify in one step, turning language errors into verdicts."""
    try:
        formula = parse_formula(source, structure)
    except NotInLanguageError as exc:
        return Verdict("not-in-language", reason=exc.reason)
    return check_statement(formula)


def star_transform(formula: Formula) -> Formula:
    """Replace every set, relation, function and constant with its extension.

    The built-in symbols (+, -, | |, comparisons, 'in') are left bare, the
    way star transforms are customarily written.  The result lives in the
    star structure and is fully internal; transforming a formula that is
    already starred is rejected.
    """
    if formula.structure.is_star:
        raise AlreadyStarredError("formula is already fully starred")
    if not formula.is_statement():
        raise NotAStatementError(
            f"free variables {', '.join(formula.free_variables())} prevent transforming"
        )
    target = formula.structure.star()
    return Formula(_star_node(formula.root), target)


def _star_node(node) -> Node:
    if isinstance(node, Quantified):
        return Quantified(node.kind, node.variable, f"*{node.domain}", _star_node(node.body))
    if isinstance(node, Not):
        return Not(_star_node(node.inner))
    if isinstance(node, Connective):
        return Connective(node.op, _star_node(node.left), _star_node(node.right))
    if isinstance(node, Atom):
        if node.relation == "in":
            element, domain = node.args
            return Atom("in", (_star_term(element), ConstTerm(f"*{domain.name}")))
        relation = node.relation if node.relation in SPECIAL_RELATIONS else f"*{node.relation}"
        return Atom(relation, tuple(_star_term(a) for a in node.args))
    raise TypeError(f"not a formula node: {node!r}")


def _star_term(term) -> Term:
    if isinstance(term, VarTerm):
        return term
    if isinstance(term, ConstTerm):
        # Numerals keep their name; the star shows up in rendering.
        return term if term.numeral else ConstTerm(f"*{term.name}")
    name = term.name if term.name in SPECIAL_FUNCTIONS else f"*{term.name}"
    return FuncTerm(name, tuple(_star_term(a) for a in term.args))


def check_transferable(formula: Formula, direction: str) -> Verdict:
    """Transfer-eligibility lint.

    Forward: being a statement suffices.  Backward: additionally every
    named symbol must be internal; external symbols are reported as
    witnesses.
    """
    if direction not in ("forward", "backward"):
        raise ValueError("direction must be 'forward' or 'backward'")
    free = formula.free_variables()
    if free:
        return Verdict(
            "not-transferable",
            free_vars=free,
            reason="not a statement: free variables remain",
            direction=direction,
        )
    if direction == "forward":
        return Verdict("transferable", direction=direction)
    external = tuple(
        name
        for name in formula.named_symbols()
        if not formula.structure.is_internal_symbol(name)
    )
    if external:
        return Verdict(
            "not-transferable",
            external_symbols=external,
            reason="external symbols block backward transfer",
            direction=direction,
        )
    return Verdict("transferable", direction=direction)


# ---------------------------------------------------------------------------
# Rendering


_CONN_PREC = {"<->": 1, "->": 2, "or": 3, "and": 4}


def _render_node(node, structure: Structure, parent_prec: int) -> str:
    if isinstance(node, Quantified):
        body = _render_node(node.body, structure, 0)
        text = f"{node.kind} {node.variable} in {node.domain}, {body}"
        return f"({text})" if parent_prec > 0 else text
    if isinstance(node, Not):
        return f"not {_render_node(node.inner, structure, 5)}"
    if isinstance(node, Connective):
        prec = _CONN_PREC[node.op]
        left = _render_node(node.left, structure, prec + 1)
        right = _render_node(node.right, structure, prec)
        text = f"{left} {node.op} {right}"
        return f"({text})" if prec < parent_prec else text
    if isinstance(node, Atom):
        if node.relation == "in":
            return f"{_render_term(node.args[0], structure)} in {node.args[1].name}"
        if node.relation in SPECIAL_RELATIONS:
            left, right = node.args
            return (
                f"{_render_term(left, structure)} {node.relation} "
                f"{_render_term(right, structure)}"
            )
        args = ", ".join(_render_term(a, structure) for a in node.args)
        return f"{node.relation}({args})"
    raise TypeError(f"not a formula node: {node!r}")


def _render_term(term, structure: Structure) -> str:
    if isinstance(term, VarTerm):
        return term.name
    if isinstance(term, ConstTerm):
        if term.numeral and structure.is_star:
            return f"*{term.name}"
        return term.name
    if term.name in ("+", "-"):
        left, right = term.args
        return f"{_render_term(left, structure)} {term.name} {_render_term(right, structure)}"
    if term.name == "abs":
        return f"|{_render_term(term.args[0], structure)}|"
    args = ", ".join(_render_term(a, structure) for a in term.args)
    return f"{term.name}({args})"
