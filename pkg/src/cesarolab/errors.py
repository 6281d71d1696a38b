"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter is outside the mathematical domain of an operation."""


class QuadratureError(RuntimeError):
    """A quadrature failed its self-certification; carries diagnostics in args."""
