import csv
import io
import json
from enum import Enum
from typing import Any, Iterable, Sequence

from pydantic import BaseModel


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


def _plain(obj: Any) -> Any:
    """Converts models and containers into JSON-ready values; ints become decimal strings."""
    if isinstance(obj, BaseModel):
        return obj.model_dump(mode="json", exclude_none=True)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (float, str)):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(key): _plain(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(value) for value in obj]
    return str(obj)


def to_json(obj: Any) -> str:
    return json.dumps(_plain(obj), indent=2)


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(value) for value in row])
    return buffer.getvalue().rstrip("\n")
