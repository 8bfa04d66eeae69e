from abc import ABC, abstractmethod
from typing import Callable, Sequence

import numpy as np

from src.domain.entities.quadrature import QuadResult, QuadSpec


class IIntegrator(ABC):
    """Numerical integration port used by the domain services."""

    @abstractmethod
    def integrate_semiinf(
        self, f: Callable[[float], float], spec: QuadSpec, scale: float = 1.0,
        axis: str = "x", offset: float = 0.0,
    ) -> QuadResult:
        pass

    @abstractmethod
    def integrate_semiinf_vec(
        self, f: Callable[[float], np.ndarray], spec: QuadSpec, scale: float = 1.0,
        axis: str = "x", offset: float = 0.0,
    ) -> QuadResult:
        pass

    @abstractmethod
    def integrate_finite(
        self, f: Callable[[float], float], a: float, b: float, spec: QuadSpec, axis: str = "x"
    ) -> QuadResult:
        pass

    @abstractmethod
    def integrate_2d(
        self, f: Callable[[float, float], float], spec: QuadSpec,
        scales: Sequence[float] = (1.0, 1.0), offsets: Sequence[float] = (0.0, 0.0),
    ) -> QuadResult:
        pass

    @abstractmethod
    def integrate_3d(
        self, f: Callable[[float, float, float], float], spec: QuadSpec,
        scales: Sequence[float] = (1.0, 1.0, 1.0), offsets: Sequence[float] = (0.0, 0.0, 0.0),
    ) -> QuadResult:
        pass

    @abstractmethod
    def integrate_panels(
        self, f: Callable[[np.ndarray], np.ndarray], spec: QuadSpec,
        feature: float, decay_length: float, frequency: float = 0.0, axis: str = "q",
    ) -> QuadResult:
        pass
