import numpy as np
import pandas as pd

from src.api.commands.limits import PERMEABLE_THRESHOLD
from src.domain.entities.thresholds import ThresholdCase
from src.domain.services.thresholds import ThresholdService
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

COLUMNS = ["case", "threshold", "analytic"]
SCAN_COLUMNS = ["case", "ratio", "correction"]

_ANALYTIC = {
    ThresholdCase.RETARDED_CONDUCTING_VERTICAL: np.nan,
    ThresholdCase.NONRETARDED_PERMEABLE_VERTICAL: PERMEABLE_THRESHOLD,
}


def thresholds(service: ThresholdService, scan_points: int = None) -> pd.DataFrame:
    """Sign-change ratios z_B/z_A; with `scan_points` the scanned
    correction (U1 + U2)/|U0| is returned instead."""
    if scan_points:
        frames = []
        for case in ThresholdCase:
            ratios, values = service.threshold_scan(case, points=scan_points)
            frames.append(pd.DataFrame({"case": case.value, "ratio": ratios, "correction": values}))
        frame = pd.concat(frames, ignore_index=True)[SCAN_COLUMNS]
    else:
        frame = pd.DataFrame(
            [{"case": case.value, "threshold": service.threshold(case), "analytic": _ANALYTIC[case]}
             for case in ThresholdCase],
            columns=COLUMNS,
        )
    logger.info({"command": "thresholds", "rows": len(frame), "scan": bool(scan_points)})
    return frame
