import pytest

from src.domain.services.sweep import SweepService, evaluate_point
from src.utils.exceptions import DomainError, QuadratureConvergenceError


def square_row(point: float) -> dict:
    if point < 0:
        raise QuadratureConvergenceError("no convergence", axis="u")
    return {"l": point, "U": point * point}


def rejecting_row(point: float) -> dict:
    raise DomainError("outside the domain")


def test_evaluate_point_marks_clean_rows():
    row = evaluate_point((square_row, 2.0, "l"))

    assert row == {"l": 2.0, "U": 4.0, "error": ""}


def test_evaluate_point_records_numerical_failure():
    row = evaluate_point((square_row, -1.0, "z_A"))

    assert row["z_A"] == -1.0
    assert "no convergence" in row["error"]
    assert "U" not in row


def test_domain_errors_are_not_swallowed():
    with pytest.raises(DomainError, match="outside the domain"):
        SweepService().run(rejecting_row, [1.0])


def test_sweep_keeps_input_order():
    rows = SweepService().run(square_row, [3.0, -1.0, 1.0])

    assert [r["l"] for r in rows] == [3.0, -1.0, 1.0]
    assert [bool(r["error"]) for r in rows] == [False, True, False]


def test_parallel_sweep_matches_serial():
    points = [0.5, 1.0, 1.5, 2.0, -2.0]

    serial = SweepService(max_workers=1).run(square_row, points)
    parallel = SweepService(max_workers=2).run(square_row, points)

    assert parallel == serial


def test_worker_count_floor():
    assert SweepService(max_workers=0).max_workers == 1
