"""
core/storage.py

Small CSV-backed run log. One row per computed quantity:
  timestamp, command, graph, n, m, quantity, value, method, elapsed_ms

- `graph` is a short fingerprint of the edge list (see Graph.fingerprint)
- `value` is stored as text (booleans as true/false, None as empty);
  analytics converts it back to numbers
"""

import csv
import itertools
import os
from typing import Any, Dict, List, Optional

from core.config import RUN_LOG_PATH

CSV_PATH = RUN_LOG_PATH
FIELDNAMES = ["timestamp", "command", "graph", "n", "m", "quantity", "value", "method", "elapsed_ms"]


def _resolve(path: Optional[str]) -> str:
    return path or CSV_PATH


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def append_log(entry: Dict, path: Optional[str] = None):
    """
    Append one run to the CSV, creating its directory and header on first use.
    Keys outside FIELDNAMES are dropped; missing ones are written empty.
    """
    path = _resolve(path)
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    fresh = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, "a", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=FIELDNAMES)
        if fresh:
            writer.writeheader()
        writer.writerow({k: _cell(entry.get(k)) for k in FIELDNAMES})


def read_logs(limit: int = 10000, path: Optional[str] = None) -> List[Dict]:
    """Oldest-first rows of the run log, at most `limit` of them."""
    path = _resolve(path)
    if limit <= 0 or not os.path.exists(path):
        return []
    with open(path, "r", newline="", encoding="utf-8") as f:
        return list(itertools.islice(csv.DictReader(f), limit))


def clear_logs(path: Optional[str] = None) -> bool:
    """Delete the run log if it exists. Returns True if a file was removed."""
    path = _resolve(path)
    if os.path.exists(path):
        os.remove(path)
        return True
    return False
