class AbacusError(Exception):
    """Base class for every error raised by the library."""
    pass


class MalformedInput(AbacusError, ValueError):
    """Raised when a textual argument cannot be parsed."""
    pass


class NotWeaklyDecreasing(AbacusError, ValueError):
    """Raised when a sequence of parts increases somewhere."""
    pass


class InvalidHookPosition(AbacusError):
    """Raised when a position does not hold a bead with a space above it."""
    pass


class InvalidTree(AbacusError):
    """Raised when a labelled binary tree does not encode a partition."""
    pass


class LimitExceeded(AbacusError):
    """Raised when a request exceeds a configured size guard."""
    pass


class IndexOutOfRange(AbacusError):
    """Raised when a sample point falls outside a computed table."""
    pass


class NoConvergence(AbacusError):
    """Raised when a numerical search cannot bracket its target."""
    pass


class DomainError(AbacusError):
    """Raised when a numerical parameter violates an operation's precondition."""
    pass
