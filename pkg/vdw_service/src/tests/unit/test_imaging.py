import pytest

from src.domain.entities.imaging import Alignment, ImageCase
from src.domain.entities.media import PlateKind
from src.domain.services.imaging import ImagingService, explain, predict_u1_sign


@pytest.mark.parametrize("plate, alignment, sign", [
    (PlateKind.CONDUCTING, Alignment.PARALLEL, 1),
    (PlateKind.CONDUCTING, Alignment.VERTICAL, -1),
    (PlateKind.PERMEABLE, Alignment.PARALLEL, -1),
    (PlateKind.PERMEABLE, Alignment.VERTICAL, 1),
])
def test_predicted_u1_sign(plate, alignment, sign):
    assert predict_u1_sign(ImageCase(plate, alignment)) == sign


def test_explanation_names_effect():
    reduces = explain(ImageCase(PlateKind.CONDUCTING, Alignment.PARALLEL))
    enhances = explain(ImageCase(PlateKind.CONDUCTING, Alignment.VERTICAL))

    assert "reduces" in reduces
    assert "U1 > 0" in reduces
    assert "enhances" in enhances
    assert enhances.startswith("conducting plate, vertical atoms")


def test_all_cases_cover_plates_and_alignments():
    cases = ImageCase.all_cases()

    assert len(cases) == 4
    assert len(set(cases)) == 4


def test_signs_agree_with_closed_forms(closed_forms):
    report = ImagingService(closed_forms, seed=3).verify_against_closed_forms(samples=5)

    assert report.passed
    assert len(report.checks) == 4
    assert all(check.value == 5.0 for check in report.checks)
    assert report.checks[0].name == "image-sign-conducting-parallel"
