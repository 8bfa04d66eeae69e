from dataclasses import dataclass, replace
from enum import Enum
from typing import Union

import numpy as np

from src.utils.exceptions import DomainError


class Transform(str, Enum):
    EXP_DECAY = "exp-decay"
    ALGEBRAIC = "algebraic"


@dataclass(frozen=True)
class QuadSpec:
    rel_tol: float = 1e-8
    abs_tol: float = 1e-14
    max_subdivisions: int = 200
    transform: Transform = Transform.EXP_DECAY

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be at least 1")

    def tightened(self, factor: float) -> "QuadSpec":
        """Spec for an inner axis of a nested integral."""
        return replace(self, rel_tol=self.rel_tol / factor, abs_tol=self.abs_tol / factor)

    def with_transform(self, transform: Transform) -> "QuadSpec":
        return replace(self, transform=transform)


@dataclass(frozen=True)
class QuadResult:
    value: Union[float, np.ndarray]
    abs_error_estimate: float
    evaluations: int

    def __post_init__(self):
        if self.abs_error_estimate < 0:
            raise DomainError("error estimate must be non-negative")
        if self.evaluations < 1:
            raise DomainError("a quadrature result needs at least one evaluation")
