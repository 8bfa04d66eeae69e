from dataclasses import dataclass
from enum import Enum

from src.utils.exceptions import DomainError


class IntegralFamily(str, Enum):
    A_PLUS = "A-plus"
    A_MINUS = "A-minus"
    B = "B"
    M = "M"


_ALLOWED_ORDERS = {
    IntegralFamily.A_PLUS: (3, 4, 5),
    IntegralFamily.A_MINUS: (3, 4, 5),
    IntegralFamily.B: (3, 4, 5),
    IntegralFamily.M: (0, 1, 2),
}


@dataclass(frozen=True)
class WeightedIntegralKey:
    family: IntegralFamily
    order: int

    def __post_init__(self):
        if self.order not in _ALLOWED_ORDERS[IntegralFamily(self.family)]:
            raise DomainError(f"order {self.order} not available for family {self.family}")

    @classmethod
    def parse(cls, name: str) -> "WeightedIntegralKey":
        """'A3+', 'A5-', 'B4', 'M0' -> key."""
        name = name.strip()
        try:
            if name.startswith("A") and name[-1] in "+-":
                family = IntegralFamily.A_PLUS if name[-1] == "+" else IntegralFamily.A_MINUS
                return cls(family, int(name[1:-1]))
            if name[0] in "BM":
                return cls(IntegralFamily(name[0]), int(name[1:]))
        except ValueError:
            pass
        raise DomainError(f"cannot parse weighted-integral key {name!r}")
