import json
from pathlib import Path
from unittest.mock import MagicMock

import pandas as pd
import pytest

import src.main as cli
from src.api.commands.half_space import COLUMNS as HALF_SPACE_COLUMNS
from src.api.schemas.scenario_schema import load_scenario
from src.domain.entities.validation import CheckResult, ValidationReport
from src.infrastructure.output.writers import build_frame, read_config_header

SCENARIOS = Path(__file__).resolve().parents[3] / "scenarios"


def read_csv(path) -> pd.DataFrame:
    return pd.read_csv(path, comment="#", keep_default_na=False, na_values=[""])


@pytest.fixture
def free_config(tmp_path):
    path = tmp_path / "free.json"
    path.write_text(json.dumps({
        "medium": {"type": "free"},
        "sweep": {"variable": "l", "start": 0.01, "stop": 10.0, "points": 9},
    }))
    return str(path)


@pytest.fixture
def validation_service(monkeypatch):
    service = MagicMock()
    monkeypatch.setattr(cli, "get_validation_service", lambda rel_tol=None: service)
    return service


def test_limits_writes_closed_form_ratio(tmp_path):
    out = tmp_path / "limits.csv"

    code = cli.main(["limits", "retarded-conducting", "--output", str(out)])

    assert code == 0
    frame = read_csv(out)
    assert frame.loc[0, "case"] == "retarded-conducting"
    assert frame.loc[0, "value"] == pytest.approx(40.0 / 23.0, rel=1e-11)


def test_unknown_limit_case_is_config_error():
    assert cli.main(["limits", "no-such-case"]) == 1


@pytest.mark.parametrize("argv", [
    ["free-space", "--bogus"],
    ["no-such-command"],
    [],
    ["free-space", "--log", "--linear"],
])
def test_usage_errors_exit_one(argv):
    assert cli.main(argv) == 1


def test_invalid_config_exits_one(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"method": "bogus"}))

    assert cli.main(["free-space", "--config", str(path)]) == 1


def test_free_space_em_is_repulsive(tmp_path):
    config = tmp_path / "em.json"
    config.write_text(json.dumps({
        "atoms": [{"kind": "electric"}, {"kind": "magnetic"}],
        "medium": {"type": "free"},
    }))
    out = tmp_path / "em.json.out"

    code = cli.main(["free-space", "--config", str(config), "--points", "3", "--format", "json",
                     "--output", str(out)])

    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["meta"]["command"] == "free-space"
    assert len(payload["rows"]) == 3
    assert all(row["U"] > 0 and row["force"] > 0 for row in payload["rows"])
    assert all(row["error"] == "" for row in payload["rows"])


def test_free_space_to_stdout(free_config, capsys):
    code = cli.main(["free-space", "--config", free_config, "--points", "4"])

    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("# format_version: 1")
    assert "l,U,U_retarded_asymptote,U_nonretarded_asymptote,force,slope,error" in out


def test_rerun_from_recorded_config(free_config, tmp_path):
    first = tmp_path / "first.csv"
    second = tmp_path / "second.csv"
    assert cli.main(["free-space", "--config", free_config, "--points", "5", "--output", str(first)]) == 0

    recorded = read_config_header(str(first))
    recorded["output"]["path"] = str(second)
    replay = tmp_path / "replay.json"
    replay.write_text(json.dumps(recorded))

    assert cli.main(["free-space", "--config", str(replay)]) == 0
    pd.testing.assert_frame_equal(read_csv(first), read_csv(second))


def test_half_space_error_rows_exit_two(monkeypatch, tmp_path):
    failed = build_frame([{"l": 1.0, "error": "Quadrature did not converge"}], HALF_SPACE_COLUMNS)
    monkeypatch.setattr(cli, "half_space", lambda *args, **kwargs: failed)

    code = cli.main(["half-space", "--output", str(tmp_path / "hs.csv")])

    assert code == 2
    assert read_csv(tmp_path / "hs.csv").loc[0, "error"] == "Quadrature did not converge"


def test_half_space_rejects_free_medium(free_config):
    assert cli.main(["half-space", "--config", free_config]) == 1


def test_validate_failures_exit_three(validation_service, tmp_path):
    report = ValidationReport()
    report.add(CheckResult(name="c6-unit-atoms", passed=True))
    report.add(CheckResult(name="threshold-retarded-conducting", passed=False, detail="off"))
    validation_service.run.return_value = report

    code = cli.main(["validate", "--quick", "--output", str(tmp_path / "v.csv")])

    assert code == 3
    validation_service.run.assert_called_once_with(quick=True)
    frame = read_csv(tmp_path / "v.csv")
    assert frame["passed"].tolist() == [True, False]


def test_validate_success_exits_zero(validation_service, tmp_path):
    report = ValidationReport()
    report.add(CheckResult(name="c6-unit-atoms", passed=True))
    validation_service.run.return_value = report

    assert cli.main(["validate", "--output", str(tmp_path / "v.csv")]) == 0
    validation_service.run.assert_called_once_with(quick=False)


def test_thresholds_scan(tmp_path):
    out = tmp_path / "scan.csv"

    code = cli.main(["thresholds", "--scan", "5", "--output", str(out)])

    assert code == 0
    frame = read_csv(out)
    assert list(frame.columns) == ["case", "ratio", "correction"]
    assert len(frame) == 10


def test_thresholds_roots(tmp_path):
    out = tmp_path / "roots.csv"

    assert cli.main(["thresholds", "--output", str(out)]) == 0
    frame = read_csv(out).set_index("case")
    assert frame.loc["retarded-conducting-vertical", "threshold"] == pytest.approx(4.90, abs=0.01)
    assert frame.loc["nonretarded-permeable-vertical", "threshold"] == pytest.approx(
        frame.loc["nonretarded-permeable-vertical", "analytic"], abs=0.01
    )


@pytest.mark.parametrize("path", sorted(SCENARIOS.glob("*.json")), ids=lambda p: p.stem)
def test_reference_scenarios_load(path):
    config = load_scenario(str(path))

    assert config.sweep.points > 1


def test_magnetic_parallel_heights():
    heights = sorted(load_scenario(str(path)).geometry.z for path in SCENARIOS.glob("magnetic_parallel*.json"))

    assert heights == [0.01, 0.2, 1.0]


def test_magnetic_parallel_sweep_has_no_error_rows(tmp_path):
    scenario = json.loads((SCENARIOS / "magnetic_parallel.json").read_text())
    scenario["sweep"].update({"start": 0.1, "stop": 1.0, "points": 2})
    config = tmp_path / "magnetic.json"
    config.write_text(json.dumps(scenario))
    out = tmp_path / "magnetic.csv"

    code = cli.main(["half-space", "--config", str(config), "--no-forces", "--output", str(out)])

    assert code == 0
    frame = read_csv(out)
    assert frame["error"].isna().all()
    assert (frame["ratio"] > 1.0).all()
