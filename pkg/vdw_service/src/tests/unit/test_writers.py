import json

import pandas as pd
import pytest

from src.infrastructure.output.writers import (
    FORMAT_VERSION,
    build_frame,
    read_config_header,
    write_rows,
)
from src.utils.exceptions import ConfigError

META = {"command": "free-space", "rel_tol": 1e-8, "config": {"sweep": {"points": 2}}}


@pytest.fixture
def frame():
    rows = [
        {"l": 0.5, "U": -1.25, "error": ""},
        {"l": 1.0, "error": "Quadrature did not converge"},
    ]
    return build_frame(rows, ["l", "U", "force"])


def test_build_frame_orders_columns(frame):
    assert list(frame.columns) == ["l", "U", "force", "error"]
    assert pd.isna(frame.loc[0, "force"])
    assert pd.isna(frame.loc[1, "U"])


def test_build_frame_fills_missing_error_column():
    built = build_frame([{"l": 1.0, "U": 2.0}], ["l", "U"])

    assert built.loc[0, "error"] == ""


def test_csv_carries_header(frame, tmp_path):
    path = tmp_path / "out.csv"

    write_rows(frame, META, "csv", str(path))

    lines = path.read_text().splitlines()
    assert lines[0] == f"# format_version: {FORMAT_VERSION}"
    assert lines[2] == "# command: free-space"
    assert lines[5] == "l,U,force,error"
    assert lines[6].startswith("5.000000000000e-01,-1.250000000000e+00")
    assert read_config_header(str(path)) == {"sweep": {"points": 2}}


def test_json_replaces_nan_with_null(frame, tmp_path):
    path = tmp_path / "out.json"

    write_rows(frame, META, "json", str(path))

    payload = json.loads(path.read_text())
    assert payload["meta"]["format_version"] == FORMAT_VERSION
    assert payload["meta"]["command"] == "free-space"
    assert payload["rows"][0]["force"] is None
    assert payload["rows"][1]["U"] is None
    assert payload["rows"][1]["error"] == "Quadrature did not converge"


def test_writes_to_stdout_without_path(frame, capsys):
    write_rows(frame, META, "csv")

    out = capsys.readouterr().out
    assert out.startswith("# format_version")
    assert "l,U,force,error" in out


def test_unknown_format(frame):
    with pytest.raises(ConfigError):
        write_rows(frame, META, "xml")


def test_config_header_missing(tmp_path):
    path = tmp_path / "plain.csv"
    path.write_text("l,U\n1.0,2.0\n")

    with pytest.raises(ConfigError):
        read_config_header(str(path))
