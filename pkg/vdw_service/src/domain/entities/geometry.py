import math
from dataclasses import dataclass, replace

from src.utils.exceptions import DomainError


@dataclass(frozen=True)
class PlanarGeometry:
    """Two atoms in the xz plane above a surface at z = 0."""

    x_a: float
    z_a: float
    x_b: float
    z_b: float

    def __post_init__(self):
        if not (self.z_a > 0 and self.z_b > 0):
            raise DomainError(
                f"both atoms must sit above the surface, got z_A={self.z_a}, z_B={self.z_b}"
            )
        if not self.l > 0:
            raise DomainError("atoms must not coincide")

    @property
    def X(self) -> float:
        return self.x_b - self.x_a

    @property
    def Z(self) -> float:
        return self.z_b - self.z_a

    @property
    def z_plus(self) -> float:
        return self.z_a + self.z_b

    @property
    def l(self) -> float:
        return math.hypot(self.X, self.Z)

    @property
    def l_plus(self) -> float:
        return math.hypot(self.X, self.z_plus)

    @property
    def min_length(self) -> float:
        return min(self.l, self.z_a, self.z_b)

    def swapped(self) -> "PlanarGeometry":
        return PlanarGeometry(self.x_b, self.z_b, self.x_a, self.z_a)

    def shifted(self, atom: str, dx: float = 0.0, dz: float = 0.0) -> "PlanarGeometry":
        if atom == "a":
            return replace(self, x_a=self.x_a + dx, z_a=self.z_a + dz)
        if atom == "b":
            return replace(self, x_b=self.x_b + dx, z_b=self.z_b + dz)
        raise DomainError(f"unknown atom label {atom!r}")

    @classmethod
    def parallel(cls, l: float, z: float) -> "PlanarGeometry":
        return cls(0.0, z, l, z)

    @classmethod
    def vertical(cls, z_a: float, l: float) -> "PlanarGeometry":
        return cls(0.0, z_a, 0.0, z_a + l)
