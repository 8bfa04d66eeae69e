from typing import Optional


class VdwServiceException(Exception):
    exit_code: int = 2
    message: str = "vdW service error"

    def __init__(self, message: str = None):
        if message:
            self.message = message
        super().__init__(self.message)


class ConfigError(VdwServiceException):
    exit_code = 1
    message = "Invalid scenario configuration"


class DomainError(VdwServiceException, ValueError):
    exit_code = 1
    message = "Input outside the physical domain"


class SingularityError(DomainError):
    message = "Coincident points: tensor is singular"


class RegimeError(DomainError):
    message = "Geometry outside the asymptotic regime"


class NumericalError(VdwServiceException):
    exit_code = 2
    message = "Numerical failure"


class QuadratureConvergenceError(NumericalError):
    message = "Quadrature did not converge"

    def __init__(
        self,
        message: str = None,
        best_estimate: float = float("nan"),
        error_estimate: float = float("inf"),
        axis: Optional[str] = None,
    ):
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate
        self.axis = axis
        if message and axis:
            message = f"{message} (axis: {axis})"
        super().__init__(message)


class RootNotBracketedError(NumericalError):
    message = "Root not bracketed"


class ValidationFailedError(VdwServiceException):
    exit_code = 3
    message = "Validation suite reported failures"
