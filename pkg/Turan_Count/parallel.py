#! /usr/bin/env python3
"""Fan-out of independent tasks across worker processes."""

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def run_tasks(fn: Callable[[T], R], items: Sequence[T], workers: int = 1) -> list[R]:
    """
    Applies fn to every item and returns the results in submission order.

    fn must be a module-level function so it can be pickled. With workers <= 1,
    or a single item, everything runs in the calling process.
    """
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    workers = min(workers, len(items))
    logger.debug(f"Running {len(items)} tasks on {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))
