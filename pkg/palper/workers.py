"""Ordered work sharing over a process pool."""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "PALPER_THREADS"


def resolve_threads(threads: Optional[int] = None) -> int:
    """Explicit value, else ``PALPER_THREADS``, else 1."""
    if threads is None:
        raw = os.environ.get(THREADS_ENV, "").strip()
        if raw:
            try:
                threads = int(raw)
            except ValueError:
                logger.warning(f"Ignoring {THREADS_ENV}={raw!r}: expected an integer")
                threads = 1
        else:
            threads = 1
    return max(1, threads)


def parallel_map(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """``list(map(func, items))``, spread over worker processes when allowed.

    ``func`` must be a module-level function.  Results keep the order of ``items``.
    """
    items = list(items)
    workers = min(resolve_threads(threads), len(items))
    if workers <= 1:
        return [func(item) for item in items]
    logger.debug(f"mapping {len(items)} tasks over {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
