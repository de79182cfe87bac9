"""Exception types shared across the package."""


class GoodIntError(Exception):
    """Base class for all errors raised by goodint."""


class DomainError(GoodIntError, ValueError):
    """Input violates a mathematical precondition (non-coprime, non-prime, ...)."""


class SizeError(GoodIntError, ValueError):
    """Input exceeds a configured size guard."""


class ConsistencyError(GoodIntError, RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""
