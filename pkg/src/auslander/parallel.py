"""Optional process-level parallelism controlled by AUSLANDER_THREADS."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable


def thread_count() -> int:
    """Worker count: unset or empty means serial, 0 means one per CPU."""
    raw = os.environ.get("AUSLANDER_THREADS", "").strip()
    if not raw:
        return 1
    n = int(raw)
    if n == 0:
        return os.cpu_count() or 1
    return max(1, n)


def parallel_map(fn: Callable, items: Iterable) -> list:
    """Ordered map; results come back in input order regardless of worker count."""
    items = list(items)
    workers = min(thread_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
