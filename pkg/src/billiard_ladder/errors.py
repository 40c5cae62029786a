"""Exception and warning types.

Every error carries a short machine-readable ``code`` so the command line
front end can map failures onto exit statuses without string matching.
"""


class BilliardError(ValueError):
    code = "BILLIARD_ERROR"


class InvalidQuantumNumbers(BilliardError):
    """Quantum numbers violate ``m > n >= 1`` or are not integers."""

    code = "INVALID_QN"


class ZeroFunctionError(BilliardError):
    """The requested labels describe the identically zero function."""

    code = "ZERO_FUNCTION"


class FamilyMismatch(BilliardError):
    code = "FAMILY_MISMATCH"


class EmptyClass(BilliardError):
    code = "EMPTY_CLASS"


class StencilExitsDomain(BilliardError):
    """No sample point has all of its finite-difference neighbours inside."""

    code = "STENCIL_EXITS_DOMAIN"


class ResolutionSuspect(UserWarning):
    """A nodal domain is only a handful of pixels wide; the raster is too coarse."""

    code = "RESOLUTION_SUSPECT"
