import logging
import logging.handlers
import sys
from datetime import datetime
from pathlib import Path

from src.config import APP_NAME, LOG_DIR

FILE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
CONSOLE_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
MAX_LOG_BYTES = 20 * 1024 * 1024
LOG_BACKUPS = 10

# Libraries whose DEBUG output drowns the reduction traces
QUIET_LIBRARIES = ('sympy', 'networkx')


def log_file_path(log_dir: str, app_name: str) -> Path:
    """Dated log file for one day of runs, creating the directory if needed."""
    log_path = Path(log_dir)
    log_path.mkdir(parents=True, exist_ok=True)
    return log_path / f"{app_name}_{datetime.now().strftime('%Y%m%d')}.log"


def _file_handler(log_file: Path, log_level: int) -> logging.Handler:
    handler = logging.handlers.RotatingFileHandler(filename=log_file, maxBytes=MAX_LOG_BYTES, backupCount=LOG_BACKUPS, encoding='utf-8')
    handler.setFormatter(logging.Formatter(FILE_FORMAT))
    handler.setLevel(log_level)
    return handler


def _console_handler(log_level: int) -> logging.Handler:
    # stdout carries reports
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
    handler.setLevel(log_level)
    return handler


def setup_logging(log_level: int = logging.INFO, log_dir: str = LOG_DIR, app_name: str = APP_NAME) -> None:
    """
    Configure application-wide logging

    Replaces any handlers already on the root logger.

    Args:
        log_level: level for both handlers and the root logger
        log_dir: directory for the rotating log files
        app_name: prefix of the log file name
    """
    log_file = log_file_path(log_dir, app_name)

    root_logger = logging.getLogger()
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
    root_logger.setLevel(log_level)
    root_logger.addHandler(_file_handler(log_file, log_level))
    root_logger.addHandler(_console_handler(log_level))

    for name in QUIET_LIBRARIES:
        logging.getLogger(name).setLevel(logging.WARNING)

    logging.getLogger(__name__).info(f"Logging initialized. Log file: {log_file}")
