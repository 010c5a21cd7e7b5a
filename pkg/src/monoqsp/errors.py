"""Exception types raised across the package."""


class InvalidOrderError(ValueError):
    """Order of a root of unity (or group) is not a positive integer."""


class OrderMismatchError(ValueError):
    """Operands live over different orders n."""


class UnsupportedOrderError(ValueError):
    """The requested construction is not defined for this order."""


class EvenDegreeError(ValueError):
    """Closed-form phases exist only for odd degrees."""


class DomainError(ValueError):
    """Signal value outside the admissible interval [-1, 1]."""


class PreconditionError(ValueError):
    """Input does not satisfy the documented precondition."""
