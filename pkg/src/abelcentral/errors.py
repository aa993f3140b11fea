"""Exception types shared across the package."""


class ModulusError(ValueError):
    """Invalid or mismatched modulus."""


class DimensionError(ValueError):
    """Shape mismatch between matrices/vectors."""


class HypothesisError(ValueError):
    """A required arithmetic hypothesis fails (e.g. missing roots of unity)."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class TheoremViolationError(RuntimeError):
    """A checked identity that must hold unconditionally failed.

    Raising this is always a bug (in this package or in the inputs claimed
    to satisfy the preconditions), never a recoverable condition.
    """
