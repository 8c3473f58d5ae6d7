"""Finite-dimensional inner-product space over hypercomplex scalars.

Scalars are pairs of truncated-series elements (real and imaginary part);
vectors are finite tuples of scalars.  The inner product, conjugate-linear
in its second slot, can come out infinitesimal or unlimited, so vectors of
infinitesimal or unlimited length exist.  Vectors classify as:

* standard: every component an exact rational constant,
* infinitesimal: squared norm infinitesimal (display precedence over
  near-standard),
* near-standard: componentwise limited and infinitesimally close to its
  componentwise shadow,
* remote: everything else (no standard vector in its halo).

Norms are reported squared: taking the root of re^2 + im^2 generally has
no exact rational leading coefficient, and classification only ever needs
the square.  Values are immutable and operations pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

from .calculus import (
    Abs,
    BigO,
    BinOp,
    Const,
    Expr,
    Lit,
    Neg,
    Pow,
    Root,
    Var,
    parse_expr,
)
from .core import EPS, OMEGA, HyperReal, Precision, as_fraction
from .errors import (
    DimensionMismatchError,
    NotNearStandardError,
    ParseError,
)

Scalar = Union["HyperComplex", HyperReal, Fraction, int]


@dataclass(frozen=True)
class ComplexRational:
    """Exact complex rational a + b*i."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __add__(self, other: "ComplexRational") -> "ComplexRational":
        return ComplexRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexRational") -> "ComplexRational":
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other) -> "ComplexRational":
        if isinstance(other, ComplexRational):
            return ComplexRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        q = as_fraction(other)
        return ComplexRational(self.re * q, self.im * q)

    __rmul__ = __mul__

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re} {sign} {abs(self.im)}*i"


class HyperComplex:
    """A hypercomplex scalar: pair of truncated-series components."""

    __slots__ = ("re", "im")

    def __init__(self, re: HyperReal | Fraction | int = 0, im: HyperReal | Fraction | int = 0):
        re_h = re if isinstance(re, HyperReal) else HyperReal.from_rational(as_fraction(re))
        im_h = im if isinstance(im, HyperReal) else HyperReal.from_rational(as_fraction(im))
        object.__setattr__(self, "re", re_h)
        object.__setattr__(self, "im", im_h)

    def __setattr__(self, name, value):
        raise AttributeError("HyperComplex values are immutable")

    @staticmethod
    def _coerce(value) -> "HyperComplex | None":
        if isinstance(value, HyperComplex):
            return value
        if isinstance(value, (HyperReal, int, Fraction)):
            return HyperComplex(value)
        return None

    def __add__(self, other) -> "HyperComplex":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HyperComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "HyperComplex":
        return HyperComplex(-self.re, -self.im)

    def __sub__(self, other) -> "HyperComplex":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "HyperComplex":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "HyperComplex":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HyperComplex(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "HyperComplex":
        return HyperComplex(self.re, -self.im)

    def inv(self, precision: Precision | int | None = None) -> "HyperComplex":
        denom = (self.re * self.re + self.im * self.im).inv(precision)
        return HyperComplex(self.re * denom, -(self.im * denom))

    def __truediv__(self, other) -> "HyperComplex":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def modulus_sq(self) -> HyperReal:
        return self.re * self.re + self.im * self.im

    def is_exact_constant(self) -> bool:
        """Exact with only exponent-0 terms in both components."""
        return all(
            part.is_exact and all(e == 0 for e, _ in part.terms)
            for part in (self.re, self.im)
        )

    def is_limited(self) -> bool:
        return self.re.is_limited() and self.im.is_limited()

    def shadow(self) -> ComplexRational:
        return ComplexRational(self.re.shadow(), self.im.shadow())

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if self.im.is_exact_zero:
            return str(self.re)
        return f"({self.re}) + ({self.im})*i"

    def __repr__(self):
        return f"HyperComplex('{self}')"


class HVector:
    """Finite tuple of hypercomplex components."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Scalar]):
        entries = tuple(
            c if isinstance(c, HyperComplex) else HyperComplex(c) for c in components
        )
        if not entries:
            raise ValueError("vectors must have at least one component")
        object.__setattr__(self, "components", entries)

    def __setattr__(self, name, value):
        raise AttributeError("HVector values are immutable")

    @property
    def dim(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, index):
        return self.components[index]

    def __add__(self, other: "HVector") -> "HVector":
        if not isinstance(other, HVector):
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dimensions {self.dim} and {other.dim} differ")
        return HVector(a + b for a, b in zip(self.components, other.components))

    def __rmul__(self, scalar) -> "HVector":
        s = HyperComplex._coerce(scalar)
        if s is None:
            return NotImplemented
        return HVector(s * c for c in self.components)

    __mul__ = __rmul__

    def __eq__(self, other):
        return isinstance(other, HVector) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.components) + "]"

    def __repr__(self):
        return f"HVector('{self}')"


class VectorClass(Enum):
    STANDARD = "standard"
    NEAR_STANDARD = "near-standard"
    INFINITESIMAL_VECTOR = "infinitesimal-vector"
    REMOTE = "remote"


def inner(v: HVector, w: HVector) -> HyperComplex:
    """Sum of v_i * conj(w_i): linear in v, conjugate-symmetric."""
    if v.dim != w.dim:
        raise DimensionMismatchError(f"dimensions {v.dim} and {w.dim} differ")
    total = HyperComplex()
    for a, b in zip(v.components, w.components):
        total = total + a * b.conjugate()
    return total


def norm_sq(v: HVector) -> HyperReal:
    """Squared length; the imaginary part vanishes identically."""
    total = HyperReal()
    for c in v.components:
        total = total + c.modulus_sq()
    return total


def vec_classify(v: HVector) -> VectorClass:
    if all(c.is_exact_constant() for c in v.components):
        return VectorClass.STANDARD
    if norm_sq(v).is_infinitesimal():
        return VectorClass.INFINITESIMAL_VECTOR
    if all(c.is_limited() for c in v.components):
        shadows = [c.shadow() for c in v.components]
        offset = HVector(
            c - HyperComplex(s.re, s.im) for c, s in zip(v.components, shadows)
        )
        if norm_sq(offset).is_infinitesimal():
            return VectorClass.NEAR_STANDARD
    return VectorClass.REMOTE


def standard_part_vec(v: HVector) -> tuple[ComplexRational, ...]:
    """Componentwise shadow: the unique standard vector in the halo of v."""
    tag = vec_classify(v)
    if tag is VectorClass.REMOTE:
        raise NotNearStandardError("no standard vector in the halo of this vector")
    return tuple(c.shadow() for c in v.components)


# ---------------------------------------------------------------------------
# Vector literals


def parse_hvector(source: str, precision: Precision | int | None = None) -> HVector:
    """Parse a bracketed vector literal like ``[1 + eps, 2 - eps^2, 3*i]``.

    Each entry is an expression in the calculus grammar extended with the
    imaginary unit ``i``.
    """
    text = source.strip()
    if not text.startswith("[") or not text.endswith("]"):
        raise ParseError("vector literals are bracketed: [entry, entry, ...]")
    body = text[1:-1]
    entries = _split_top_level(body)
    if not entries:
        raise ParseError("empty vector literal")
    prec = Precision.of(precision)
    return HVector(_eval_complex(parse_expr(e), prec) for e in entries)


def _split_top_level(body: str) -> list[str]:
    parts = []
    depth = 0
    current = []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if current or parts:
        parts.append("".join(current))
    return [p.strip() for p in parts if p.strip()]


def _eval_complex(node: Expr, prec: Precision) -> HyperComplex:
    if isinstance(node, Lit):
        return HyperComplex(node.value)
    if isinstance(node, Var):
        if node.name == "i":
            return HyperComplex(0, 1)
        raise ParseError(f"unknown name {node.name!r} in a vector entry (only 'i' is allowed)")
    if isinstance(node, Const):
        return HyperComplex(EPS if node.name == "eps" else OMEGA)
    if isinstance(node, Neg):
        return -_eval_complex(node.operand, prec)
    if isinstance(node, BinOp):
        left = _eval_complex(node.left, prec)
        right = _eval_complex(node.right, prec)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return left * right.inv(prec)
    if isinstance(node, Pow):
        if node.exponent.denominator != 1:
            raise ParseError("fractional powers are not supported in vector entries")
        base = _eval_complex(node.base, prec)
        k = node.exponent.numerator
        result = HyperComplex(1)
        for _ in range(abs(k)):
            result = result * base
        return result.inv(prec) if k < 0 else result
    if isinstance(node, BigO):
        return HyperComplex(HyperReal((), node.exponent))
    if isinstance(node, (Abs, Root)):
        raise ParseError("abs() and root() are not supported in vector entries")
    raise TypeError(f"not an expression node: {node!r}")
