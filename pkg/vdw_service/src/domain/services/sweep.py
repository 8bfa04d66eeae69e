from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List

from src.utils.exceptions import NumericalError
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


def evaluate_point(task: tuple) -> dict:
    """Evaluate one sweep point; numerical failures become an error marker
    instead of aborting the sweep."""
    fn, point, key = task
    try:
        row = fn(point)
        row["error"] = ""
        return row
    except NumericalError as exc:
        logger.warning({"type": type(exc).__name__, "error": exc.message, "point": point})
        return {key: point, "error": exc.message}


class SweepService:
    def __init__(self, max_workers: int = 1):
        self.max_workers = max(int(max_workers), 1)

    def run(self, fn: Callable[[float], dict], points: Iterable[float], key: str = "l") -> List[dict]:
        """Rows come back in input order whatever the completion order."""
        tasks = [(fn, p, key) for p in points]
        if self.max_workers == 1 or len(tasks) < 2:
            rows = [evaluate_point(t) for t in tasks]
        else:
            with ProcessPoolExecutor(max_workers=self.max_workers) as pool:
                rows = list(pool.map(evaluate_point, tasks))
        logger.debug({"operation": "sweep", "points": len(tasks), "failures": sum(bool(r["error"]) for r in rows)})
        return rows
