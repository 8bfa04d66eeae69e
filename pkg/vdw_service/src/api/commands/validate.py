import pandas as pd

from src.domain.entities.validation import ValidationReport
from src.domain.services.validation import ValidationService
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

COLUMNS = ["name", "passed", "value", "expected", "detail"]


def report_frame(report: ValidationReport) -> pd.DataFrame:
    return pd.DataFrame(
        [{"name": c.name, "passed": c.passed, "value": c.value, "expected": c.expected, "detail": c.detail}
         for c in report.checks],
        columns=COLUMNS,
    )


def validate(service: ValidationService, quick: bool = False) -> tuple:
    """Run the check suite; returns the report table and the report."""
    report = service.run(quick=quick)
    logger.info({"command": "validate", "checks": len(report.checks), "failures": len(report.failures),
                 "quick": quick})
    return report_frame(report), report
