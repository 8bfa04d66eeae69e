from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.utils.exceptions import DomainError


class MediumKind(str, Enum):
    ELECTRIC = "electric"
    MAGNETIC = "magnetic"
    VACUUM = "vacuum"


class PlateKind(str, Enum):
    CONDUCTING = "conducting"
    PERMEABLE = "permeable"


@dataclass(frozen=True)
class LorentzMedium:
    omega_p: float = 0.0
    omega_t: float = 1.0
    gamma: float = 0.0
    kind: MediumKind = MediumKind.ELECTRIC

    def __post_init__(self):
        if not self.omega_t > 0:
            raise DomainError(f"omega_t must be positive, got {self.omega_t}")
        if self.gamma < 0:
            raise DomainError(f"gamma must be non-negative, got {self.gamma}")
        if self.omega_p < 0:
            raise DomainError(f"omega_p must be non-negative, got {self.omega_p}")
        if self.kind == MediumKind.VACUUM and self.omega_p != 0:
            raise DomainError("vacuum medium requires omega_p = 0")

    @property
    def static_value(self) -> float:
        return 1.0 + (self.omega_p / self.omega_t) ** 2

    @classmethod
    def vacuum(cls) -> "LorentzMedium":
        return cls(omega_p=0.0, omega_t=1.0, gamma=0.0, kind=MediumKind.VACUUM)


@dataclass(frozen=True)
class HalfSpaceMedium:
    """Either a finite-response magneto-electric half space (eps, mu) or a
    perfect reflector; never both."""

    eps: Optional[LorentzMedium] = None
    mu: Optional[LorentzMedium] = None
    perfect: Optional[PlateKind] = None

    def __post_init__(self):
        finite = self.eps is not None or self.mu is not None
        if finite and self.perfect is not None:
            raise DomainError("a half space is either finite-response or perfect, not both")
        if self.eps is not None and self.eps.kind == MediumKind.MAGNETIC:
            raise DomainError("eps must be an electric or vacuum Lorentz medium")
        if self.mu is not None and self.mu.kind == MediumKind.ELECTRIC:
            raise DomainError("mu must be a magnetic or vacuum Lorentz medium")

    @property
    def is_perfect(self) -> bool:
        return self.perfect is not None

    @property
    def is_vacuum(self) -> bool:
        if self.is_perfect:
            return False
        return (self.eps is None or self.eps.omega_p == 0) and (
            self.mu is None or self.mu.omega_p == 0
        )

    @property
    def eps_medium(self) -> LorentzMedium:
        return self.eps if self.eps is not None else LorentzMedium.vacuum()

    @property
    def mu_medium(self) -> LorentzMedium:
        return self.mu if self.mu is not None else LorentzMedium.vacuum()

    @property
    def static_eps(self) -> float:
        return self.eps_medium.static_value

    @property
    def static_mu(self) -> float:
        return self.mu_medium.static_value

    @property
    def static_index(self) -> float:
        """sqrt(eps(0) mu(0)); 1 for perfect plates."""
        if self.is_perfect:
            return 1.0
        return (self.static_eps * self.static_mu) ** 0.5

    @classmethod
    def perfect_plate(cls, kind: PlateKind = PlateKind.CONDUCTING) -> "HalfSpaceMedium":
        return cls(perfect=PlateKind(kind))

    @classmethod
    def dielectric(cls, omega_p: float, omega_t: float = 1.0, gamma: float = 0.0) -> "HalfSpaceMedium":
        return cls(eps=LorentzMedium(omega_p, omega_t, gamma, MediumKind.ELECTRIC))

    @classmethod
    def magnetic(cls, omega_p: float, omega_t: float = 1.0, gamma: float = 0.0) -> "HalfSpaceMedium":
        return cls(mu=LorentzMedium(omega_p, omega_t, gamma, MediumKind.MAGNETIC))

    @classmethod
    def vacuum(cls) -> "HalfSpaceMedium":
        return cls(eps=LorentzMedium.vacuum(), mu=LorentzMedium.vacuum())
