from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GreenComponents:
    """Nonzero elements of an in-plane scattering Green tensor at imaginary
    frequency; xy, yx, yz, zy vanish identically."""

    gxx: float
    gyy: float
    gxz: float
    gzx: float
    gzz: float

    def as_matrix(self) -> np.ndarray:
        return np.array([
            [self.gxx, 0.0, self.gxz],
            [0.0, self.gyy, 0.0],
            [self.gzx, 0.0, self.gzz],
        ])

    def squared_sum(self) -> float:
        # Tr[G . G^T]
        return self.gxx ** 2 + self.gyy ** 2 + self.gzz ** 2 + self.gxz ** 2 + self.gzx ** 2

    def max_abs(self) -> float:
        return max(abs(self.gxx), abs(self.gyy), abs(self.gxz), abs(self.gzx), abs(self.gzz))

    @classmethod
    def zero(cls) -> "GreenComponents":
        return cls(0.0, 0.0, 0.0, 0.0, 0.0)

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "GreenComponents":
        return cls(float(m[0, 0]), float(m[1, 1]), float(m[0, 2]), float(m[2, 0]), float(m[2, 2]))
