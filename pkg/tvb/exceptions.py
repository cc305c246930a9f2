class TvbError(Exception):
    """Base class for every error raised by the library."""


class PreconditionError(TvbError):
    """Raise when the inputs of an operation violate its preconditions."""


class ConfigurationError(PreconditionError):
    """Raise when an error occurs parsing configuration or command-line options."""


class DimensionMismatch(PreconditionError):
    """Raise when vectors or matrices have incompatible shapes."""


class InvalidFlag(PreconditionError):
    """Raise when a chain of subsets is not an admissible flag."""


class NonLinearGenerator(PreconditionError):
    """Raise when a linear ideal is given a generator that is not a linear form."""


class ResourceCapExceeded(PreconditionError):
    """Raise when a brute-force enumeration would exceed its configured cap."""


class NonMonomialBundle(PreconditionError):
    """Raise when an initial ideal at a facet is not generated by variables."""


class VerificationError(TvbError):
    """Raise when a computed object fails a check that must hold."""
