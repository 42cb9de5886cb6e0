"""Deterministic helpers for optional thread-level parallelism.

Every parallel pass in this package is a pure map over immutable inputs
followed by an order-preserving gather, so results are identical for any
thread count.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def resolve_threads(threads: int | None = None) -> int:
    """Explicit value, else DRFWL_THREADS, else available parallelism."""
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("DRFWL_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[T], R], items: Sequence[T], threads: int = 1) -> list[R]:
    """Ordered map, optionally fanned out over a thread pool."""
    if threads <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    chunksize = max(1, len(items) // (threads * 4))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
