import traceback
from typing import Callable

from src.utils.exceptions import VdwServiceException
from src.utils.logger import setup_logger
from src.utils.middleware.run_context import get_run_id

logger = setup_logger("error-guard")


def command_guard(command: str, handler: Callable[[], int]) -> int:
    """Run a command handler and translate failures into exit codes."""
    try:
        return handler()

    except VdwServiceException as exc:
        logger.error({
            "type": type(exc).__name__,
            "error": exc.message,
            "exit_code": exc.exit_code,
            "run_id": get_run_id(),
            "command": command,
        })
        return exc.exit_code

    except Exception as exc:
        logger.error({
            "type": type(exc).__name__,
            "error": str(exc),
            "run_id": get_run_id(),
            "command": command,
            "trace": traceback.format_exc(),
        })
        return VdwServiceException.exit_code
