import os
import uuid
from contextlib import contextmanager
from contextvars import ContextVar

_run_id: ContextVar[str] = ContextVar("run_id", default="N/A")


def get_run_id() -> str:
    return _run_id.get()


@contextmanager
def run_context(run_id: str = None):
    """Bind a run id to every log record emitted inside the block.

    Caller-provided id first, then VDW_RUN_ID from the environment, else a
    fresh uuid4.
    """
    run_id = run_id or os.environ.get("VDW_RUN_ID") or str(uuid.uuid4())
    token = _run_id.set(run_id)
    try:
        yield run_id
    finally:
        _run_id.reset(token)
