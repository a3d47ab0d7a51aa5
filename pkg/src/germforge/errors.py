"""Exception types shared across the engine.

Every failure that a caller can provoke through legal API use raises a
subclass of :class:`GermForgeError`; plain ``ValueError``/``TypeError`` are
reserved for programming mistakes (bad argument types and the like).
"""


class GermForgeError(Exception):
    """Base class for all domain errors raised by this package."""


class DivisionByZero(GermForgeError):
    """Division by the zero scalar."""


class NotAMultiple(GermForgeError):
    """Conductor lift requested to a non-multiple of the current conductor."""


class ConductorCapExceeded(GermForgeError):
    """A computation would need a cyclotomic field above the configured cap."""


class NonUnitConstantTerm(GermForgeError):
    """Series reciprocal requires a nonzero constant term."""


class NonzeroConstantTerm(GermForgeError):
    """Series composition requires the inner series to vanish at 0."""


class NotInvertible(GermForgeError):
    """Compositional inverse requires a nonzero linear coefficient."""


class NotAGerm(GermForgeError):
    """Series is not an invertible germ (needs f(0)=0 and f'(0) != 0)."""


class NotPeriodic(GermForgeError):
    """Germ is not of the claimed finite order up to its truncation."""


class InsufficientPrecision(GermForgeError):
    """Truncation order too small to certify the requested computation."""


class IdentityToTruncation(GermForgeError):
    """Operation undefined for germs equal to the identity up to truncation."""


class WrongMultiplier(GermForgeError):
    """Operation requires a specific multiplier (usually 1)."""


class NotReversible(GermForgeError):
    """Reverser construction requested for a germ that is not reversible."""


class ScalarRootUnavailable(GermForgeError):
    """The exact scalar field cannot express a required n-th root.

    Callers may pre-conjugate by a linear map of their choosing to move the
    leading coefficient into root-friendly territory.
    """


class UnrealizableOrder(GermForgeError):
    """Requested reverser order is outside the realizable order set."""


class NotAReverser(GermForgeError):
    """Factorization requested for a pair that fails the reverser check."""


class BadParameters(GermForgeError):
    """Structurally invalid parameters for a family or check."""


class NonUnitDivision(GermForgeError):
    """Series division whose denominator cannot be cancelled or inverted."""


class ParseError(GermForgeError):
    """Syntax error in a series expression, with source position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
