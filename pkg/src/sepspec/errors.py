"""Exception hierarchy.

Every error raised by the library derives from :class:`SepspecError`, which is
itself a ``ValueError`` so callers that only care about bad input can catch the
builtin.
"""


class SepspecError(ValueError):
    """Base class for all library errors."""


class NonSquare(SepspecError):
    pass


class NotHermitian(SepspecError):
    pass


class NotPSD(SepspecError):
    pass


class NotUnitTrace(SepspecError):
    pass


class DimensionMismatch(SepspecError):
    pass


class WrongDimension(SepspecError):
    """A two-qubit-only operation received a state with d != 4."""


class LengthMismatch(SepspecError):
    pass


class DomainError(SepspecError):
    pass


class SpectrumMismatch(SepspecError):
    pass


class DegenerateTau(SepspecError):
    """The state is (numerically) the maximally mixed state."""


class OracleUnavailable(SepspecError):
    pass


class RejectionTimeout(SepspecError):
    pass


class MalformedInput(SepspecError):
    pass


class ValidationFailure(SepspecError):
    """A parsed matrix failed density-matrix validation."""
