# core/logger.py
import logging
from datetime import datetime
from typing import Any, Optional

from core import storage

LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"

_configured = False


def setup_logging(level: str = "WARNING") -> None:
    """Configure the root 'core' logger once; later calls only change the level."""
    global _configured
    root = logging.getLogger("core")
    if not _configured:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
        root.propagate = False
        _configured = True
    root.setLevel(getattr(logging, str(level).upper(), logging.WARNING))


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name if name.startswith("core") else f"core.{name}")


def log_result(
    command: str,
    graph: Any,
    quantity: str,
    value: Any,
    method: str = "",
    elapsed: float = 0.0,
    path: Optional[str] = None,
):
    """
    Append one standardized row to the run log.
    `graph` is a core.graph.Graph; `elapsed` is in seconds.
    """
    row = {
        "timestamp": datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
        "command": command,
        "graph": graph.fingerprint(),
        "n": graph.n,
        "m": graph.m,
        "quantity": quantity,
        "value": "" if value is None else value,
        "method": method,
        "elapsed_ms": round(elapsed * 1000.0, 3),
    }
    storage.append_log(row, path=path)
    return row
