"""Exception types shared across the package."""


class GekError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(GekError, ValueError):
    """A family parameter violates its admissibility constraints."""


class DomainError(GekError, ValueError):
    """An argument lies outside the domain of the requested function."""


class RangeError(GekError, ValueError):
    """A target value lies outside the range of the function being inverted."""


class ConvergenceError(GekError, RuntimeError):
    """A numerical inversion failed to bracket or converge."""


class NormalizationError(GekError, ValueError):
    """A series does not carry the normalization required by the operation."""


class CompositionDomainError(GekError, ValueError):
    """The inner series of a composition has a nonzero constant term."""


class InputError(GekError, ValueError):
    """Malformed user-facing input (files, matrices, distributions, CLI values)."""
