import json
import sys
from typing import List, Optional

import pandas as pd

from src.utils.exceptions import ConfigError
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

FORMAT_VERSION = 1
UNITS = "hbar = c = eps0 = mu0 = 1; lengths in c/omega_10 of the reference atom"


def build_frame(rows: List[dict], columns: List[str]) -> pd.DataFrame:
    """Fixed column order; the error marker column goes last."""
    frame = pd.DataFrame(rows)
    for column in columns + ["error"]:
        if column not in frame.columns:
            frame[column] = float("nan") if column != "error" else ""
    return frame[columns + ["error"]]


def header_lines(meta: dict) -> List[str]:
    return [
        f"# format_version: {FORMAT_VERSION}",
        f"# units: {UNITS}",
        f"# command: {meta.get('command', '')}",
        f"# rel_tol: {meta.get('rel_tol', '')}",
        f"# config: {json.dumps(meta.get('config', {}), sort_keys=True)}",
    ]


def write_rows(frame: pd.DataFrame, meta: dict, fmt: str = "csv", path: Optional[str] = None) -> None:
    if fmt == "csv":
        text = "\n".join(header_lines(meta)) + "\n" + frame.to_csv(index=False, float_format="%.12e")
    elif fmt == "json":
        records = frame.astype(object).where(pd.notnull(frame), None).to_dict(orient="records")
        text = json.dumps(
            {"meta": {"format_version": FORMAT_VERSION, "units": UNITS, **meta}, "rows": records},
            indent=2,
        ) + "\n"
    else:
        raise ConfigError(f"unknown output format {fmt!r}")

    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as handle:
            handle.write(text)
    logger.info({"operation": "write_rows", "rows": len(frame), "format": fmt, "path": path or "stdout"})


def read_config_header(path: str) -> dict:
    """Effective config recorded in the header of a CSV written by write_rows."""
    with open(path) as handle:
        for line in handle:
            if line.startswith("# config: "):
                return json.loads(line[len("# config: "):])
            if not line.startswith("#"):
                break
    raise ConfigError(f"{path} carries no effective-config header")
