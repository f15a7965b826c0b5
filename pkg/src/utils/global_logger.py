import logging
from typing import Optional

from src.config import ERROR_LOG_DIR

from .error_logger import FailureLogger

# Global logger instances
_failure_logger: Optional[FailureLogger] = None


def get_failure_logger() -> FailureLogger:
    """Get the global failure logger instance.

    Returns:
        FailureLogger: The global failure logger instance
    """
    global _failure_logger
    if _failure_logger is None:
        _failure_logger = FailureLogger(ERROR_LOG_DIR)
    return _failure_logger


def initialize_loggers(error_log_dir: str = ERROR_LOG_DIR) -> None:
    """Initialize all global loggers."""
    global _failure_logger
    _failure_logger = FailureLogger(error_log_dir)
    logging.info("Global loggers initialized")
