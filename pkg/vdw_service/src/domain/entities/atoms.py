from dataclasses import dataclass
from enum import Enum

from src.utils.exceptions import DomainError


class AtomKind(str, Enum):
    ELECTRIC = "electric"
    MAGNETIC = "magnetic"


@dataclass(frozen=True)
class ResonanceAtom:
    """Single-resonance atom; alpha0 is the static polarizability (or
    magnetizability for magnetic atoms) in length^3."""

    omega10: float = 1.0
    alpha0: float = 1.0
    kind: AtomKind = AtomKind.ELECTRIC

    def __post_init__(self):
        if not self.omega10 > 0:
            raise DomainError(f"omega10 must be positive, got {self.omega10}")
        if not self.alpha0 > 0:
            raise DomainError(f"alpha0 must be positive, got {self.alpha0}")

    def is_electric(self) -> bool:
        return self.kind == AtomKind.ELECTRIC

    def is_magnetic(self) -> bool:
        return self.kind == AtomKind.MAGNETIC


@dataclass(frozen=True)
class AtomPair:
    a: ResonanceAtom
    b: ResonanceAtom

    @property
    def omega_min(self) -> float:
        return min(self.a.omega10, self.b.omega10)

    @property
    def omega_max(self) -> float:
        return max(self.a.omega10, self.b.omega10)

    def is_electric_pair(self) -> bool:
        return self.a.is_electric() and self.b.is_electric()

    def is_mixed_pair(self) -> bool:
        return self.a.is_electric() and self.b.is_magnetic()

    def require_electric(self, operation: str) -> None:
        if not self.is_electric_pair():
            raise DomainError(f"{operation} requires two electric atoms")

    @classmethod
    def identical(cls, omega10: float = 1.0, alpha0: float = 1.0) -> "AtomPair":
        atom = ResonanceAtom(omega10=omega10, alpha0=alpha0)
        return cls(atom, atom)
