# core/utils.py
import time
from contextlib import contextmanager
from typing import Iterator, List

from core.errors import ScaleError
from core.logger import get_logger

logger = get_logger(__name__)


def check_scale(what: str, n: int, cap: int) -> None:
    """Refuse an exponential computation above `cap` vertices; warn past half of it."""
    if n > cap:
        raise ScaleError(what, n, cap)
    if 2 * n > cap:
        logger.warning("%s on %d vertices (cap %d) may be slow", what, n, cap)


@contextmanager
def stopwatch() -> Iterator[List[float]]:
    """
    Elapsed seconds of the block, written into the yielded one-element list.

        with stopwatch() as t:
            work()
        t[0]
    """
    box = [0.0]
    start = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = time.perf_counter() - start


def parse_vertex_set(text: str) -> List[int]:
    """'1,3, 5' or '1 3 5' -> [1, 3, 5]; empty text is the empty set."""
    tokens = text.replace(",", " ").split()
    try:
        return sorted({int(t) for t in tokens})
    except ValueError:
        raise ValueError(f"vertex set must be integers separated by commas or spaces, got {text!r}") from None
