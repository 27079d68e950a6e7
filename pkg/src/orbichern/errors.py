"""Exception types shared across the package."""


class OrbichernError(Exception):
    """Base class for all package-specific errors."""


class ZeroInversion(OrbichernError):
    """Attempted to invert zero in an exact field."""


class FieldMismatch(OrbichernError):
    """Arithmetic mixed scalars from different fields (conductor or radicand)."""


class InvalidLabel(OrbichernError):
    """ADE label outside the admissible range."""


class BoundExceeded(OrbichernError):
    """Multiplicative closure grew past the requested bound."""


class IdentityFailure(OrbichernError):
    """An identity that must hold exactly did not; message carries both sides."""


class NonRationalTotal(OrbichernError):
    """A sum that must collapse to a rational number did not."""


class TraceTwoNonIdentity(OrbichernError):
    """A nontrivial group element or class reported trace 2."""


class DescriptionError(OrbichernError):
    """A surface description failed strict validation."""
