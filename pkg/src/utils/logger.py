import logging
import os

ROOT_LOGGER = "spinnet"
LOG_FORMAT = "%(name)s - %(levelname)s - %(message)s"


def _root() -> logging.Logger:
    root = logging.getLogger(ROOT_LOGGER)
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
        root.propagate = False
    return root


def set_debug(enabled: bool) -> None:
    """Switch every spinnet logger between DEBUG and WARNING at once."""
    _root().setLevel(logging.DEBUG if enabled else logging.WARNING)


def logger_name(module: str) -> str:
    # src.tl.oracle -> spinnet.tl.oracle
    short = module[len("src."):] if module.startswith("src.") else module
    return f"{ROOT_LOGGER}.{short}"


def get_logger(name: str) -> logging.Logger:
    logger = logging.getLogger(logger_name(name))
    logger.setLevel(logging.NOTSET)
    set_debug(bool(os.environ.get("SPINNET_DEBUG")))
    return logger
