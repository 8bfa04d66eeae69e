from dataclasses import dataclass
from enum import Enum

from src.domain.entities.media import PlateKind


class Alignment(str, Enum):
    PARALLEL = "parallel"
    VERTICAL = "vertical"


@dataclass(frozen=True)
class ImageCase:
    plate: PlateKind
    alignment: Alignment

    @classmethod
    def all_cases(cls) -> list:
        return [cls(p, a) for p in PlateKind for a in Alignment]
