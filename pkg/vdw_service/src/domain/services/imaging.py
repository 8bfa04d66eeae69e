import numpy as np

from src.domain.entities.atoms import AtomPair
from src.domain.entities.geometry import PlanarGeometry
from src.domain.entities.imaging import Alignment, ImageCase
from src.domain.entities.media import PlateKind
from src.domain.entities.validation import CheckResult, ValidationReport
from src.domain.services.closed_forms import ClosedFormService

_SIGNS = {
    ImageCase(PlateKind.CONDUCTING, Alignment.PARALLEL): 1,
    ImageCase(PlateKind.CONDUCTING, Alignment.VERTICAL): -1,
    ImageCase(PlateKind.PERMEABLE, Alignment.PARALLEL): -1,
    ImageCase(PlateKind.PERMEABLE, Alignment.VERTICAL): 1,
}

_IMAGES = {
    PlateKind.CONDUCTING: "the image of a dipole in a conducting plate keeps its normal "
                          "component and reverses its tangential ones",
    PlateKind.PERMEABLE: "the image of a dipole in a permeable plate reverses its normal "
                         "component and keeps its tangential ones",
}

_ARRANGEMENTS = {
    Alignment.PARALLEL: "side by side at equal height, so each atom sees the other's image "
                        "below and beside it",
    Alignment.VERTICAL: "stacked on the surface normal, so each atom sees the other's image "
                        "straight below it",
}


def predict_u1_sign(case: ImageCase) -> int:
    """Sign of the quasi-static cross term U1 from the image-dipole picture."""
    return _SIGNS[ImageCase(PlateKind(case.plate), Alignment(case.alignment))]


def explain(case: ImageCase) -> str:
    sign = predict_u1_sign(case)
    effect = "reduces" if sign > 0 else "enhances"
    return (
        f"{PlateKind(case.plate).value} plate, {Alignment(case.alignment).value} atoms: "
        f"{_IMAGES[PlateKind(case.plate)]}; with the atoms {_ARRANGEMENTS[Alignment(case.alignment)]}, "
        f"U1 {'>' if sign > 0 else '<'} 0 and the plate {effect} the attraction."
    )


class ImagingService:
    def __init__(self, closed_forms: ClosedFormService, seed: int = 7):
        self.closed_forms = closed_forms
        self.seed = seed
        self.pair = AtomPair.identical()

    def _random_geometry(self, rng: np.random.Generator, alignment: Alignment) -> PlanarGeometry:
        # quasi-static lengths: everything well below 1e-2 / omega
        l = 10.0 ** rng.uniform(-5.0, -3.0)
        z = 10.0 ** rng.uniform(-5.0, -3.0)
        if alignment == Alignment.PARALLEL:
            return PlanarGeometry.parallel(l=l, z=z)
        return PlanarGeometry.vertical(z_a=z, l=l)

    def verify_against_closed_forms(self, samples: int = 10) -> ValidationReport:
        """Compare the predicted U1 sign with the quasi-static perfect-plate
        closed form at random geometries of every plate/alignment case."""
        rng = np.random.default_rng(self.seed)
        report = ValidationReport()
        for case in ImageCase.all_cases():
            expected = predict_u1_sign(case)
            mismatches = []
            for _ in range(samples):
                geom = self._random_geometry(rng, case.alignment)
                u1 = self.closed_forms.perfect_nonretarded_closed(geom, self.pair, case.plate).u1
                if int(np.sign(u1)) != expected:
                    mismatches.append(geom)
            report.add(CheckResult(
                name=f"image-sign-{case.plate.value}-{case.alignment.value}",
                passed=not mismatches,
                detail=f"{samples - len(mismatches)}/{samples} geometries agree",
                value=float(samples - len(mismatches)),
                expected=float(samples),
            ))
        return report
