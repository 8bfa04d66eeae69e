import numpy as np
from scipy import optimize

from src.domain.entities.atoms import AtomPair
from src.domain.entities.geometry import PlanarGeometry
from src.domain.entities.media import PlateKind
from src.domain.entities.thresholds import ThresholdCase
from src.domain.services.closed_forms import ClosedFormService
from src.utils.exceptions import RootNotBracketedError
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

# (lower, upper) bounds of z_B/z_A searched for each case
BRACKETS = {
    ThresholdCase.RETARDED_CONDUCTING_VERTICAL: (1.5, 20.0),
    ThresholdCase.NONRETARDED_PERMEABLE_VERTICAL: (1.5, 100.0),
}


class ThresholdService:
    """Ratio z_B/z_A at which the surface correction U1 + U2 changes sign
    for two atoms stacked vertically above a perfect plate."""

    def __init__(self, closed_forms: ClosedFormService, xtol: float = 1e-6, scan_points: int = 200):
        self.closed_forms = closed_forms
        self.xtol = xtol
        self.scan_points = scan_points
        self.pair = AtomPair.identical()

    def correction(self, case: ThresholdCase, ratio: float) -> float:
        """(U1 + U2)/|U0| on the vertical family z_A = 1, z_B = ratio."""
        geom = PlanarGeometry.vertical(z_a=1.0, l=ratio - 1.0)
        case = ThresholdCase(case)
        if case == ThresholdCase.RETARDED_CONDUCTING_VERTICAL:
            res = self.closed_forms.perfect_retarded_closed(
                geom, self.pair, PlateKind.CONDUCTING, enforce_regime=False)
        else:
            res = self.closed_forms.perfect_nonretarded_closed(
                geom, self.pair, PlateKind.PERMEABLE, enforce_regime=False)
        return (res.u1 + res.u2) / abs(res.u0)

    def threshold_scan(self, case: ThresholdCase, lower: float = None, upper: float = None,
                       points: int = None) -> tuple:
        lo, hi = BRACKETS[ThresholdCase(case)]
        ratios = np.geomspace(lower or lo, upper or hi, points or self.scan_points)
        values = np.array([self.correction(case, r) for r in ratios])
        return ratios, values

    def threshold(self, case: ThresholdCase) -> float:
        ratios, values = self.threshold_scan(case)
        signs = np.sign(values)
        changes = np.flatnonzero(signs[:-1] * signs[1:] < 0)
        if changes.size != 1:
            raise RootNotBracketedError(
                f"expected one sign change of U1 + U2 for {ThresholdCase(case).value}, found {changes.size}"
            )
        i = int(changes[0])
        root = optimize.brentq(lambda r: self.correction(case, r), ratios[i], ratios[i + 1], xtol=self.xtol)
        logger.debug({"case": ThresholdCase(case).value, "root": root})
        return float(root)
