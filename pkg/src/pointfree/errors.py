"""Exception types shared across the package."""


class PointfreeError(Exception):
    """Base class for every error raised by this package."""


class InvalidStructure(PointfreeError, ValueError):
    """Raised when input data violates an order-theoretic axiom at construction."""


class UnsupportedFamily(PointfreeError):
    """A symbolic family has no evaluator for the given frame kind."""


class UnsupportedRepresentation(PointfreeError):
    """A filter representation cannot be handled on the given frame."""


class NotPrime(PointfreeError, ValueError):
    pass


class NotT0(PointfreeError, ValueError):
    pass


class SizeCapExceeded(PointfreeError):
    pass


class UndecidableMembership(PointfreeError):
    """Membership of a filter in a class cannot be decided on this instance."""
