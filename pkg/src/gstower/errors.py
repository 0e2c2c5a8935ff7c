class DomainError(ValueError):
    """An argument lies outside the domain where a formula or procedure applies."""


class ConsistencyError(ArithmeticError):
    """An exact identity that must hold did not (integrality, divisibility)."""
