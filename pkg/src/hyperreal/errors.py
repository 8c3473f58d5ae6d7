"""Exception hierarchy shared by all hyperreal modules.

Every domain failure raised by this package derives from HyperrealError,
so callers (and the command line front end) can catch one base class.
"""


class HyperrealError(Exception):
    """Base class for all domain errors raised by this package."""


class UnresolvedZeroError(HyperrealError):
    """A truncated value with no known terms had to be resolved.

    An element whose term list is empty but whose order bound is finite is
    only known to be O(eps^bound); questions that depend on its exact value
    (sign, classification, inversion) cannot be answered soundly.
    """


class ExactZeroDivisionError(HyperrealError, ZeroDivisionError):
    """Multiplicative inverse of an exact zero was requested."""


class UnlimitedShadowError(HyperrealError):
    """shadow() was applied to an unlimited element."""


class InsufficientPrecisionError(HyperrealError):
    """The order bound is too low to determine the requested quantity."""


class NegativeLeadingCoefficientError(HyperrealError):
    """Even-degree root of an element with negative leading coefficient."""


class RootNotExactError(HyperrealError):
    """The leading coefficient has no exact rational n-th root."""


class ParseError(HyperrealError):
    """Malformed source text. Carries the offending position when known."""

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


class UnknownIdentifierError(ParseError):
    """An identifier that the expression grammar cannot accept."""


class UnboundVariableError(HyperrealError):
    """Evaluation reached a free variable but no value was supplied."""


class NotRationalSequenceError(HyperrealError):
    """Expression is not a rational function of n (sequence operations only)."""


class NonDifferentiableError(HyperrealError):
    """Newton quotients fail to share a common limited shadow.

    ``witnesses`` lists (probe, outcome) pairs showing the disagreement.
    """

    def __init__(self, message, witnesses=()):
        super().__init__(message)
        self.witnesses = tuple(witnesses)


class DimensionMismatchError(HyperrealError):
    """Vector operands have different dimensions."""


class NotNearStandardError(HyperrealError):
    """standard_part_vec() applied to a vector with no standard vector in its halo."""


class NotInLanguageError(HyperrealError):
    """Formula text is outside the language of the given structure."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class NotAStatementError(HyperrealError):
    """A statement-only operation received a formula with free variables."""


class AlreadyStarredError(HyperrealError):
    """Star transform applied to a formula that is already fully internal."""
