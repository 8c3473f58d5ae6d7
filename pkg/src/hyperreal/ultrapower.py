"""Desk-scale model of the sequence-quotient construction.

A RatSeq is a rational function of n with exact rational coefficients,
standing for the sequence of its values at n = 1, 2, 3, ...  Within this
class any pointwise comparison is eventually constant, so the cofinite
sets decide it and every nonprincipal ultrafilter agrees: the quotient is
ultrafilter-independent by construction.  Oscillating sequences such as
(1, 0, 1, 0, ...) have no representation here and are rejected.

``embed`` substitutes n = eps^-1 and expands around eps = 0, giving the
order-preserving ring homomorphism into the truncated-series field that
sends the identity sequence (1, 2, 3, ...) to omega and constants to
constants.

Sequences are immutable and all operations pure (thread-safe).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .calculus import BinOp, Expr, Lit, Neg, Pow, Var, parse_expr
from .core import HyperReal, Ordering, Precision, as_fraction
from .errors import ExactZeroDivisionError, NotRationalSequenceError

Poly = tuple[Fraction, ...]  # coefficients, ascending powers of n


def _pstrip(coeffs) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _padd(a: Poly, b: Poly) -> Poly:
    size = max(len(a), len(b))
    return _pstrip(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
    )


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _pstrip(out)


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quotient = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    rest = list(a)
    while len(rest) >= len(b) and _pstrip(rest):
        rest = list(_pstrip(rest))
        if len(rest) < len(b):
            break
        shift = len(rest) - len(b)
        factor = rest[-1] / b[-1]
        quotient[shift] = factor
        for i, c in enumerate(b):
            rest[shift + i] -= factor * c
        rest = rest[:-1]
    return _pstrip(quotient), _pstrip(rest)


def _pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    return tuple(c / a[-1] for c in a)  # monic


def _peval(a: Poly, n: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * n + c
    return acc


def _cauchy_bound(a: Poly) -> int:
    """Integer strictly larger than every real root of the polynomial."""
    if len(a) <= 1:
        return 1
    lead = abs(a[-1])
    radius = 1 + max(abs(c) for c in a[:-1]) / lead
    bound = int(radius) + 1
    return max(bound, 1)


def _defined_from(den: Poly) -> int:
    """Least index from which the denominator is nonzero at every integer."""
    bound = _cauchy_bound(den)
    if bound > 1000:
        return bound
    last_zero = 0
    for k in range(1, bound + 1):
        if _peval(den, Fraction(k)) == 0:
            last_zero = k
    return max(1, last_zero + 1)


@dataclass(frozen=True)
class AgreementSet:
    """Eventual truth value of a pointwise predicate on two sequences.

    ``verdict`` is "cofinite" when the predicate holds from some index on
    and "finite" when it eventually fails everywhere; ``witness`` bounds
    the last exception either way.
    """

    verdict: str  # "cofinite" | "finite"
    witness: int


class RatSeq:
    """An eventually-defined rational function of n over exact rationals."""

    __slots__ = ("num", "den", "defined_from")

    def __init__(self, num, den=(Fraction(1),)):
        n = _pstrip(as_fraction(c) for c in num)
        d = _pstrip(as_fraction(c) for c in den)
        if not d:
            raise ZeroDivisionError("denominator polynomial is identically zero")
        if not n:
            d = (Fraction(1),)  # canonical zero
        else:
            g = _pgcd(n, d)
            if len(g) > 1:
                n = _pdivmod(n, g)[0]
                d = _pdivmod(d, g)[0]
            lead = d[-1]
            n = tuple(c / lead for c in n)
            d = tuple(c / lead for c in d)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)
        object.__setattr__(self, "defined_from", _defined_from(d))

    def __setattr__(self, name, value):
        raise AttributeError("RatSeq values are immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, value) -> "RatSeq":
        return cls((as_fraction(value),))

    @classmethod
    def identity(cls) -> "RatSeq":
        """The sequence 1, 2, 3, ..."""
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def parse(cls, source: str) -> "RatSeq":
        """Build from a rational-function expression in n, e.g. (2*n^2+1)/(n^2+3)."""
        return from_expr(parse_expr(source))

    # -- evaluation -------------------------------------------------------

    def value_at(self, n: int) -> Fraction:
        if n < self.defined_from:
            raise ValueError(f"sequence defined from index {self.defined_from}")
        point = Fraction(n)
        return _peval(self.num, point) / _peval(self.den, point)

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(value) -> "RatSeq | None":
        if isinstance(value, RatSeq):
            return value
        if isinstance(value, (int, Fraction)):
            return RatSeq.constant(value)
        return None

    def __add__(self, other) -> "RatSeq":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatSeq(
            _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
            _pmul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self) -> "RatSeq":
        return RatSeq(_pneg(self.num), self.den)

    def __sub__(self, other) -> "RatSeq":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatSeq":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "RatSeq":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatSeq(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def reciprocal(self) -> "RatSeq":
        """The sequence of pointwise inverses past the zeros of this one."""
        if not self.num:
            raise ExactZeroDivisionError("reciprocal of the zero sequence")
        return RatSeq(self.den, self.num)

    def __truediv__(self, other) -> "RatSeq":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    # -- comparison ----------------------------------------------------------

    def compare(self, other) -> Ordering:
        """Eventual ordering of two sequences (always decided in this class)."""
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare RatSeq with {type(other).__name__}")
        diff_num = _padd(_pmul(self.num, o.den), _pneg(_pmul(o.num, self.den)))
        if not diff_num:
            return Ordering.EQUAL
        # Denominators are monic, so their product is eventually positive.
        return Ordering.GREATER if diff_num[-1] > 0 else Ordering.LESS

    def agreement(self, other, relation: str = "eq") -> AgreementSet:
        """Largeness of {n : self(n) REL other(n)} for REL in eq/ne/le/lt/ge/gt."""
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare RatSeq with {type(other).__name__}")
        if relation not in ("eq", "ne", "le", "lt", "ge", "gt"):
            raise ValueError(f"unknown relation {relation!r}")
        diff_num = _padd(_pmul(self.num, o.den), _pneg(_pmul(o.num, self.den)))
        witness = max(
            self.defined_from,
            o.defined_from,
            _cauchy_bound(diff_num) if diff_num else 1,
        )
        if not diff_num:
            eventually = relation in ("eq", "le", "ge")
        else:
            sign = 1 if diff_num[-1] > 0 else -1
            eventually = {
                "eq": False,
                "ne": True,
                "le": sign < 0,
                "lt": sign < 0,
                "ge": sign > 0,
                "gt": sign > 0,
            }[relation]
        return AgreementSet("cofinite" if eventually else "finite", witness)

    # -- embedding ------------------------------------------------------------

    def embed(self, precision: Precision | int | None = None) -> HyperReal:
        """Image in the truncated-series field under n -> eps^-1."""
        num_h = _poly_at_omega(self.num)
        den_h = _poly_at_omega(self.den)
        if len(self.den) == 1:  # monic constant: division is exact
            return num_h
        return num_h * den_h.inv(precision)

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        num = _poly_text(self.num)
        if len(self.den) == 1:
            return num
        return f"({num})/({_poly_text(self.den)})"

    def __repr__(self):
        return f"RatSeq('{self}')"


def _poly_at_omega(poly: Poly) -> HyperReal:
    return HyperReal((Fraction(-k), c) for k, c in enumerate(poly) if c)


def _poly_text(poly: Poly) -> str:
    if not poly:
        return "0"
    pieces = []
    for k, c in enumerate(poly):
        if not c:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            power = "n" if k == 1 else f"n^{k}"
            body = power if abs(c) == 1 else f"{abs(c)}*{power}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


def from_expr(node: Expr) -> RatSeq:
    """Convert a rational-function AST in one variable to a RatSeq."""
    num, den = _to_ratfun(node)
    return RatSeq(num, den)


def _to_ratfun(node: Expr) -> tuple[Poly, Poly]:
    one: Poly = (Fraction(1),)
    if isinstance(node, Lit):
        return _pstrip((node.value,)), one
    if isinstance(node, Var):
        return (Fraction(0), Fraction(1)), one
    if isinstance(node, Neg):
        n, d = _to_ratfun(node.operand)
        return _pneg(n), d
    if isinstance(node, BinOp):
        ln, ld = _to_ratfun(node.left)
        rn, rd = _to_ratfun(node.right)
        if node.op == "+":
            return _padd(_pmul(ln, rd), _pmul(rn, ld)), _pmul(ld, rd)
        if node.op == "-":
            return _padd(_pmul(ln, rd), _pneg(_pmul(rn, ld))), _pmul(ld, rd)
        if node.op == "*":
            return _pmul(ln, rn), _pmul(ld, rd)
        if not rn:
            raise ExactZeroDivisionError("division by the zero sequence")
        return _pmul(ln, rd), _pmul(ld, rn)
    if isinstance(node, Pow):
        if node.exponent.denominator != 1:
            raise NotRationalSequenceError("fractional powers are not rational functions of n")
        n, d = _to_ratfun(node.base)
        k = node.exponent.numerator
        if k < 0:
            n, d = d, n
            k = -k
            if not d:
                raise ExactZeroDivisionError("negative power of the zero sequence")
        pn, pd = one, one
        for _ in range(k):
            pn = _pmul(pn, n)
            pd = _pmul(pd, d)
        return pn, pd
    raise NotRationalSequenceError(
        f"{type(node).__name__} nodes are not rational functions of n"
    )


# Operation-style aliases.

def seq_add(r: RatSeq, s: RatSeq) -> RatSeq:
    return r + s


def seq_mul(r: RatSeq, s: RatSeq) -> RatSeq:
    return r * s


def seq_compare(r: RatSeq, s: RatSeq) -> Ordering:
    return r.compare(s)


def embed(r: RatSeq, precision: Precision | int | None = None) -> HyperReal:
    return r.embed(precision)
