"""Exceptions for the orbitkit library."""


class OrbitKitException(Exception):
    """Base exception for orbitkit errors."""

    pass


class UnsupportedRank(OrbitKitException):
    """Root system family/rank combination is not supported."""

    pass


class ForeignRoot(OrbitKitException):
    """Root does not belong to the root system it was used with."""

    pass


class NotARoot(OrbitKitException):
    """Vector failed the catalog lookup where a root was required."""

    pass


class NotOrthogonal(OrbitKitException):
    """Subset of roots is not pairwise orthogonal."""

    pass


class DomainError(OrbitKitException):
    """Argument outside the domain of a numeric function."""

    pass


class FieldTooSmall(OrbitKitException):
    """Prime is below the Coxeter number of the active root system."""

    pass


class NotIsotropic(OrbitKitException):
    """Coordinate subspace is not isotropic for the form."""

    pass


class TooLarge(OrbitKitException):
    """Root system is too large for an exhaustive search."""

    pass


class WrongSystem(OrbitKitException):
    """Operation is only defined for a specific root system."""

    pass


class RootParseError(OrbitKitException):
    """Root expression could not be parsed."""

    pass


class NotReduced(UserWarning):
    """Orthogonal subset was not reduced; singular reduction was applied."""

    pass
