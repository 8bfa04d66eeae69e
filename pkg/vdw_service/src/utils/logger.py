import logging

from src.utils.middleware.run_context import get_run_id


class RunIdFilter(logging.Filter):
    def filter(self, record):
        if not hasattr(record, "run_id"):
            record.run_id = get_run_id()
        return True


def setup_logger(name: str, level: str = None):
    logger = logging.getLogger(name)

    if level is None:
        from src.config.settings import get_settings
        level = get_settings().LOG_LEVEL
    logger.setLevel(level)

    handler = logging.StreamHandler()

    formatter = logging.Formatter(
        "%(asctime)s - [RUN: %(run_id)s] - %(levelname)s - %(message)s"
    )

    handler.setFormatter(formatter)
    handler.addFilter(RunIdFilter())

    if not logger.handlers:
        logger.addHandler(handler)

    return logger
