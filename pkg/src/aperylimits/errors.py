"""Exception types shared across the package."""


class ExperimentError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ExperimentError):
    """An argument is outside the mathematical domain of an operation
    (negative radicand, non-positive logarithm argument, zero division
    in exact field arithmetic, and the like)."""


class SingularLeadingCoefficient(ExperimentError):
    """The leading coefficient of a recurrence vanishes at an index where
    forward iteration needs to divide by it."""


class InsufficientTerms(ExperimentError):
    """Too few sequence terms to set up the requested computation."""


class NotFound(ExperimentError):
    """A bounded search (recurrence sweep) exhausted its caps without a hit."""


class DivisionByZeroSolution(ExperimentError):
    """The denominator solution A(n) vanishes at an index the ratio needs."""


class ZeroDenominator(DomainError):
    """A ratio was requested with denominator zero."""


class NonpositiveDelta(DomainError):
    """An irrationality measure was requested for a non-positive delta."""


class NonInvertibleDenominator(DomainError):
    """A field-element division hit a zero denominator element."""


class PrecisionExhausted(ExperimentError):
    """A numeric search collapsed to its noise floor without producing a
    certifiable answer at the working precision."""


class MultipleRealRoots(ExperimentError):
    """A cubic expected to have a single real root has three."""


class InitialConditionsUnsolvable(ExperimentError):
    """No consistent assignment of the free initial values exists."""


class InputFormatError(ExperimentError):
    """A sequence or recurrence file does not match the documented format."""
