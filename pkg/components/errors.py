"""
Exception hierarchy for the galconf components.

Errors that describe bad input also derive from ValueError so callers that
only know about the built-in hierarchy still catch them.
"""


class GalconfError(Exception):
    """Base class for every error raised by galconf."""


class ZeroToNegativePower(GalconfError, ZeroDivisionError):
    """Zero raised to a negative exponent."""


class ScalarFormatError(GalconfError, ValueError):
    """A scalar string is not of the form a/b+c/d*i."""


class SingularMatrix(GalconfError, ValueError):
    """A linear system has no unique solution."""


class InvalidTranslation(GalconfError, ValueError):
    """A translation element is not supported on the I/J span."""


class InvalidSpec(GalconfError, ValueError):
    """An Omega module description violates its invariants."""


class DerivedAlgebraViolation(GalconfError, ValueError):
    """A Whittaker value is nonzero where the derived algebra forces zero."""


class OutOfSubalgebra(GalconfError, ValueError):
    """A Whittaker value is assigned to a generator outside the subalgebra."""


class LengthMismatch(GalconfError, ValueError):
    """Exponent vectors of different block lengths were compared."""


class UnsupportedMonomial(GalconfError, ValueError):
    """A vector has factors outside the requested monomial block."""


class ZeroVector(GalconfError, ValueError):
    """The degree of the zero vector was requested."""


class PreconditionViolated(GalconfError, ValueError):
    """An operation was called outside the hypotheses it relies on."""


class DegenerateSystem(GalconfError, ValueError):
    """An extraction system does not match its declared degree."""


class Inconclusive(GalconfError):
    """A probe produced mixed evidence."""


class ConfigError(GalconfError, ValueError):
    """A campaign configuration could not be loaded or validated."""


class AssertionFailure(GalconfError):
    """A verification campaign recorded a failed check."""
