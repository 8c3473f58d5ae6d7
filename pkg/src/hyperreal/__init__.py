"""Exact hyperreal arithmetic and the nonstandard-analysis toolkit built on it.

Quick tour::

    from hyperreal import EPS, OMEGA, derivative, limit_seq, shadow

    x = 3 + EPS                 # a point infinitesimally close to 3
    (x * x).shadow()            # Fraction(9, 1)
    derivative("x^2", 3)        # Fraction(6, 1)
    limit_seq("(2*n^2+1)/(n^2+3)").value   # Fraction(2, 1)

The modules: ``core`` (truncated-series field, shadows, halos, galaxies),
``ultrapower`` (rational sequences and their embedding), ``filters``
(finite filter/ultrafilter laboratory), ``calculus`` (parser, limits,
derivatives, continuity), ``transfer`` (statement and transfer linting),
``hilbert`` (finite-dimensional vectors over hypercomplex scalars) and
``cli`` (the ``hyperreal`` command).
"""

from .core import (
    DEFAULT_PRECISION,
    EPS,
    OMEGA,
    ONE,
    ZERO,
    Classification,
    HyperReal,
    Ordering,
    Precision,
    as_fraction,
    classify,
    compare,
    galaxy_compare,
    galaxy_equiv,
    halo_equiv,
    shadow,
)
from .calculus import (
    Expr,
    LimitResult,
    continuity_at,
    derivative,
    eval_hyper,
    limit_fun,
    limit_seq,
    newton_quotient,
    parse_expr,
    to_text,
)
from .ultrapower import AgreementSet, RatSeq, embed, seq_add, seq_compare, seq_mul
from .filters import (
    FamilyClassification,
    GroundSet,
    SetFamily,
    classify_family,
    enumerate_ultrafilters,
    generate_filter,
    principal_ultrafilter,
)
from .transfer import (
    Formula,
    Structure,
    Verdict,
    check_statement,
    check_transferable,
    classify_text,
    parse_formula,
    star_transform,
)
from .hilbert import (
    ComplexRational,
    HVector,
    HyperComplex,
    VectorClass,
    inner,
    norm_sq,
    parse_hvector,
    standard_part_vec,
    vec_classify,
)
from . import errors

__all__ = [
    "AgreementSet",
    "Classification",
    "ComplexRational",
    "DEFAULT_PRECISION",
    "EPS",
    "Expr",
    "FamilyClassification",
    "Formula",
    "GroundSet",
    "HVector",
    "HyperComplex",
    "HyperReal",
    "LimitResult",
    "OMEGA",
    "ONE",
    "Ordering",
    "Precision",
    "RatSeq",
    "SetFamily",
    "Structure",
    "VectorClass",
    "Verdict",
    "ZERO",
    "as_fraction",
    "check_statement",
    "check_transferable",
    "classify",
    "classify_family",
    "classify_text",
    "compare",
    "continuity_at",
    "derivative",
    "embed",
    "enumerate_ultrafilters",
    "errors",
    "eval_hyper",
    "galaxy_compare",
    "galaxy_equiv",
    "generate_filter",
    "halo_equiv",
    "inner",
    "limit_fun",
    "limit_seq",
    "newton_quotient",
    "norm_sq",
    "parse_expr",
    "parse_formula",
    "parse_hvector",
    "principal_ultrafilter",
    "seq_add",
    "seq_compare",
    "seq_mul",
    "shadow",
    "standard_part_vec",
    "star_transform",
    "to_text",
    "vec_classify",
]
