"""Closed-form limits, thresholds and image-picture signs as one table."""
from typing import Callable, Dict, List

import pandas as pd

from src.api.schemas.scenario_schema import ScenarioConfig
from src.domain.entities.geometry import PlanarGeometry
from src.domain.entities.imaging import ImageCase
from src.domain.entities.media import PlateKind
from src.domain.entities.thresholds import ThresholdCase
from src.domain.services.closed_forms import ClosedFormService
from src.domain.services.imaging import explain, predict_u1_sign
from src.domain.services.thresholds import ThresholdService
from src.utils.exceptions import ConfigError
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

COLUMNS = ["case", "value", "reference", "detail"]

PERMEABLE_THRESHOLD = 1.0 + 2.0 / (1.5 ** (1.0 / 3.0) - 1.0)

# X << Z+ with z_A/z_B ~ 1e-14 (retarded) and z << l (nonretarded)
_RETARDED_SURFACE = PlanarGeometry.vertical(z_a=1e-12, l=100.0)
_NONRETARDED_SURFACE = PlanarGeometry.parallel(l=1e-3, z=1e-16)


def _row(case: str, value: float, reference: float = float("nan"), detail: str = "") -> dict:
    return {"case": case, "value": value, "reference": reference, "detail": detail}


def limit_cases(closed_forms: ClosedFormService, thresholds: ThresholdService,
                config: ScenarioConfig) -> Dict[str, Callable[[], List[dict]]]:
    pair = config.pair()

    def retarded(plate: PlateKind, reference: float):
        def rows():
            res = closed_forms.perfect_retarded_closed(_RETARDED_SURFACE, pair, plate)
            return [_row(f"retarded-{plate.value}", res.ratio, reference, "on-surface U/U0, vertical")]
        return rows

    def nonretarded(plate: PlateKind, reference: float):
        def rows():
            res = closed_forms.perfect_nonretarded_closed(_NONRETARDED_SURFACE, pair, plate)
            return [_row(f"nonretarded-parallel-{plate.value}", res.ratio, reference, "on-surface U/U0, parallel")]
        return rows

    def threshold(case: ThresholdCase, reference: float):
        def rows():
            return [_row(f"threshold-{case.value}", thresholds.threshold(case), reference, "z_B/z_A")]
        return rows

    def images():
        return [_row(f"image-sign-{c.plate.value}-{c.alignment.value}", float(predict_u1_sign(c)),
                     detail=explain(c)) for c in ImageCase.all_cases()]

    def coefficients():
        medium = config.medium.to_entity()
        if medium is None or medium.is_perfect:
            raise ConfigError("coefficients need a halfspace medium in the config")
        coeffs = closed_forms.d_e_f_coefficients(pair, medium)
        return [_row("coefficient-D", coeffs.d), _row("coefficient-E", coeffs.e), _row("coefficient-F", coeffs.f)]

    return {
        "retarded-conducting": retarded(PlateKind.CONDUCTING, 40.0 / 23.0),
        "retarded-permeable": retarded(PlateKind.PERMEABLE, 52.0 / 23.0),
        "nonretarded-parallel-conducting": nonretarded(PlateKind.CONDUCTING, 2.0 / 3.0),
        "nonretarded-parallel-permeable": nonretarded(PlateKind.PERMEABLE, 10.0 / 3.0),
        "threshold-vertical-conducting": threshold(ThresholdCase.RETARDED_CONDUCTING_VERTICAL, 4.90),
        "threshold-vertical-permeable": threshold(ThresholdCase.NONRETARDED_PERMEABLE_VERTICAL, PERMEABLE_THRESHOLD),
        "image-signs": images,
        "coefficients": coefficients,
    }


def limits(case: str, config: ScenarioConfig, closed_forms: ClosedFormService,
           thresholds: ThresholdService) -> pd.DataFrame:
    cases = limit_cases(closed_forms, thresholds, config)
    if case == "all":
        selected = [name for name in cases if name != "coefficients" or config.medium.type == "halfspace"]
    elif case in cases:
        selected = [case]
    else:
        raise ConfigError(f"unknown limit case {case!r}; expected 'all' or one of {sorted(cases)}")

    rows = [row for name in selected for row in cases[name]()]
    logger.info({"command": "limits", "case": case, "rows": len(rows)})
    return pd.DataFrame(rows, columns=COLUMNS)
