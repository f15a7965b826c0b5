import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from src.utils.error_logger import CustomJSONEncoder

logger = logging.getLogger(__name__)


def report_json(report: Dict[str, Any]) -> str:
    """Deterministic JSON text of a report; ring elements become strings."""
    return json.dumps(report, indent=2, ensure_ascii=False, cls=CustomJSONEncoder) + "\n"


def write_report(report: Dict[str, Any], path: Optional[str]) -> None:
    if not path:
        return
    Path(path).write_text(report_json(report), encoding='utf-8')
    logger.info(f"Report written to {path}")


def format_table(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    """Left-aligned plain-text table."""
    cells = [[str(h) for h in header]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[j]) for row in cells) for j in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
