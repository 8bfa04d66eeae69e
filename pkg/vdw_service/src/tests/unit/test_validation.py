import pytest

from src.domain.entities.validation import CheckResult
from src.domain.services.imaging import ImagingService
from src.domain.services.thresholds import ThresholdService
from src.domain.services.validation import ValidationService
from src.utils.exceptions import QuadratureConvergenceError


@pytest.fixture
def validation_service(potentials, closed_forms, integrator):
    return ValidationService(
        potentials, closed_forms, ThresholdService(closed_forms), ImagingService(closed_forms), integrator
    )


def test_quick_suite_passes(validation_service):
    report = validation_service.run(quick=True)

    assert report.passed, [f"{c.name}: {c.detail}" for c in report.failures]
    names = {check.name for check in report.checks}
    assert "retarded-on-surface-closed-conducting" in names
    assert "threshold-nonretarded-permeable" in names
    assert "weighted-integrals" in names


def test_failing_group_becomes_failed_check(validation_service, monkeypatch):
    def check_broken():
        raise QuadratureConvergenceError("stuck", axis="u")

    def check_fine():
        return [CheckResult(name="fine", passed=True)]

    monkeypatch.setattr(validation_service, "quick_checks", lambda: [check_broken, check_fine])

    report = validation_service.run(quick=True)

    assert not report.passed
    assert [c.name for c in report.checks] == ["check_broken", "fine"]
    assert "QuadratureConvergenceError" in report.failures[0].detail


def test_full_suite_includes_quadrature_groups(validation_service):
    quick = validation_service.quick_checks()
    full = validation_service.full_checks()

    assert len(quick) == 7
    assert validation_service.check_trace_oracle.__name__ in [group.__name__ for group in full]


@pytest.mark.parametrize("group", [
    "check_sommerfeld_limits",
    "check_trace_oracle",
    "check_far_plate",
    "check_nonretarded_media",
    "check_ratio_shapes",
])
def test_full_group_passes(validation_service, group):
    results = getattr(validation_service, group)()

    failures = [f"{c.name}: {c.detail}" for c in results if not c.passed]
    assert results
    assert not failures, failures


def test_full_groups_are_all_exercised(validation_service):
    names = {group.__name__ for group in validation_service.full_checks()}

    assert names == {
        "check_sommerfeld_limits",
        "check_trace_oracle",
        "check_far_plate",
        "check_nonretarded_media",
        "check_ratio_shapes",
    }
