from dataclasses import dataclass, field
from typing import Optional

import numpy as np


@dataclass(frozen=True)
class PotentialBreakdown:
    u0: float
    u1: float
    u2: float
    error_estimate: Optional[float] = None

    @property
    def total(self) -> float:
        return self.u0 + self.u1 + self.u2

    @property
    def ratio(self) -> float:
        return self.total / self.u0

    def as_dict(self) -> dict:
        return {
            "U0": self.u0,
            "U1": self.u1,
            "U2": self.u2,
            "U": self.total,
            "ratio": self.ratio,
        }


@dataclass(frozen=True)
class AsymptoticCoefficients:
    c6: float
    c7_ee: float
    c7_em: float
    c4: float


@dataclass(frozen=True)
class ForcePair:
    """Forces in the (x, y, z) frame of the surface, z along the normal."""

    f_on_a: np.ndarray = field(default_factory=lambda: np.zeros(3))
    f_on_b: np.ndarray = field(default_factory=lambda: np.zeros(3))

    @property
    def asymmetry(self) -> float:
        return float(np.linalg.norm(self.f_on_a + self.f_on_b))

    def as_dict(self) -> dict:
        return {
            "F_on_A_x": float(self.f_on_a[0]),
            "F_on_A_z": float(self.f_on_a[2]),
            "F_on_B_x": float(self.f_on_b[0]),
            "F_on_B_z": float(self.f_on_b[2]),
        }


@dataclass(frozen=True)
class HalfSpaceCoefficients:
    """Frequency integrals weighting the quasi-static half-space terms:
    d, e from (eps-1)/(eps+1), f from (mu-1)(mu-3)/(mu+1)."""

    d: float
    e: float
    f: float
