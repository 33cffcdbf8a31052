"""Exception types shared across the package."""


class PetrieError(Exception):
    """Base class for all package-specific errors."""


class ParseError(PetrieError, ValueError):
    """Malformed permutation text (bad tokens, duplicates, bad cycles)."""


class DegreeMismatchError(PetrieError, ValueError):
    """Operands act on sets of different sizes."""


class AdmissibilityError(PetrieError, ValueError):
    """A map takes the same value at two consecutive points.

    Such maps induce no transition matrix, and compositions that hit this
    are rejected so the composition-law preconditions stay checkable.
    """


class SingularMatrixError(PetrieError, ValueError):
    """Exact linear solve against a matrix that is singular over the rationals."""


class EigenvalueOneError(PetrieError, ValueError):
    """Witness lifting requires (M - I) invertible; here 1 is an eigenvalue."""


class SpecError(PetrieError, ValueError):
    """Malformed extension specification (bad filler, slot out of range)."""


class ClauseViolationError(PetrieError, ValueError):
    """Inputs violate a structural clause of a certificate family."""


class VerificationError(PetrieError, RuntimeError):
    """A constructed witness failed its own verification.

    The certificate constructions are proof-backed, so this is an internal
    bug, never an expected runtime condition.
    """
