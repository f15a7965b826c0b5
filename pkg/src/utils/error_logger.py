import json
import logging
import os
import traceback
from datetime import datetime
from enum import Enum
from typing import Any, Dict, Optional

from sympy import Poly

logger = logging.getLogger(__name__)


class CustomJSONEncoder(json.JSONEncoder):
    """Serializes enums by value, datetimes as ISO strings and ring elements as their text form."""

    def default(self, obj):
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, datetime):
            return obj.isoformat()
        if isinstance(obj, Poly):
            return str(obj.as_expr()).replace('**', '^')
        return str(obj)


class FailureLogger:
    def __init__(self, error_log_dir: str = 'logs/errors'):
        """Initialize the failure logger.

        Args:
            error_log_dir: Directory to store failure logs
        """
        self.error_log_dir = error_log_dir
        os.makedirs(error_log_dir, exist_ok=True)
        self.current_log_file = self._get_log_file_path()
        logger.debug(f"Failure logger initialized. Log file: {self.current_log_file}")

    def _get_log_file_path(self) -> str:
        date_str = datetime.now().strftime('%Y%m%d')
        return os.path.join(self.error_log_dir, f'failures_{date_str}.json')

    def _format_entry(self, command: str, source: Optional[str], error_type: str, error_message: str, additional_data: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        return {'timestamp': datetime.now().isoformat(), 'command': command, 'input': source, 'error_type': error_type, 'error_message': error_message,
                'additional_data': additional_data or {}, 'stack_trace': traceback.format_exc()}

    def log_failure(self, command: str, source: Optional[str], error_type: str, error_message: str, additional_data: Optional[Dict[str, Any]] = None) -> None:
        """Append a structured failure record for one CLI command.

        Args:
            command: Subcommand that failed (e.g. 'homology', 'mv')
            source: Input file the command was run on
            error_type: Exception class name
            error_message: Detailed error message
            additional_data: Exception context such as offending simplices or indices
        """
        try:
            entry = self._format_entry(command, source, error_type, error_message, additional_data)

            existing = []
            if os.path.exists(self.current_log_file):
                with open(self.current_log_file, 'r') as f:
                    try:
                        existing = json.load(f)
                    except json.JSONDecodeError:
                        logger.warning(f"Error reading existing failure log file: {self.current_log_file}")
                        existing = []

            existing.append(entry)
            with open(self.current_log_file, 'w') as f:
                json.dump(existing, f, indent=2, cls=CustomJSONEncoder)

            logger.error(f"{command} failed on {source}: {error_message}\n"
                         f"Type: {error_type}\n"
                         f"Additional Data: {json.dumps(additional_data or {}, indent=2, cls=CustomJSONEncoder)}")

        except Exception as e:
            logger.error(f"Failed to write to failure log file: {str(e)}")
            logger.error(f"Original failure - Command: {command} {source}, Type: {error_type}, Message: {error_message}")

    def get_failures(self, command: Optional[str] = None) -> list:
        """Retrieve all failures or those of one command."""
        try:
            if os.path.exists(self.current_log_file):
                with open(self.current_log_file, 'r') as f:
                    failures = json.load(f)
                    if command:
                        return [e for e in failures if e['command'] == command]
                    return failures
        except Exception as e:
            logger.error(f"Failed to read failure log file: {str(e)}")
        return []

    def clear_failures(self) -> None:
        try:
            if os.path.exists(self.current_log_file):
                os.remove(self.current_log_file)
                logger.info(f"Cleared failure log file: {self.current_log_file}")
        except Exception as e:
            logger.error(f"Failed to clear failure log file: {str(e)}")
