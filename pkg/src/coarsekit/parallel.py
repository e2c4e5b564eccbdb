"""Deterministic parallel map.

Results always come back in input order, so any reduction over them is
independent of scheduling and of the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def resolve_workers(workers) -> int:
    if workers is None or workers == 0:
        return os.cpu_count() or 1
    return max(1, int(workers))


def parallel_map(fn, items, workers=1):
    items = list(items)
    n = resolve_workers(workers)
    if n == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(n, len(items))) as pool:
        return list(pool.map(fn, items))
