"""Exception types shared across the toolkit."""


class DegenerateGeometryError(ValueError):
    """Engagement geometry is degenerate (e.g. coincident missile and target)."""


class DomainError(ValueError):
    """Input lies outside the reachable/valid domain of a closed-form relation."""


class InsufficientEnergyError(ValueError):
    """Requested path length is unreachable before the speed profile hits zero."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance.

    Carries the best value and achieved error estimate so callers can decide
    whether the partial result is still usable.
    """

    def __init__(self, message: str, value: float, error_estimate: float):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


class SimulationError(RuntimeError):
    """Numerical integration produced a non-finite state."""


class ConfigError(ValueError):
    """Scenario configuration is malformed or fails validation."""
