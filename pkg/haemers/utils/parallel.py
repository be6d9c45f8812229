"""Order-preserving fan-out over independent per-vertex jobs."""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from haemers.core.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def map_ordered(func: Callable[[T], R], items: Iterable[T]) -> List[R]:
    """
    Apply ``func`` to every item and return the results in input order.

    Uses up to ``settings.threads`` workers; with one worker it runs inline,
    so results never depend on the schedule.
    """
    items = list(items)
    workers = max(1, min(settings.threads, len(items)))
    if workers == 1:
        return [func(item) for item in items]
    logger.debug(f"Running {len(items)} jobs on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
