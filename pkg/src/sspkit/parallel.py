"""Optional worker-thread fan-out for all-pairs scans.

SSPKIT_THREADS bounds the worker count; the default of 1 keeps everything
on one thread. Results are merged by index, so the output never depends on
scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, TypeVar

T = TypeVar("T")


def worker_count(requested: Optional[int] = None) -> int:
    if requested is not None:
        return max(1, int(requested))
    raw = os.environ.get("SSPKIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"SSPKIT_THREADS must be an integer, got {raw!r}") from None


def pair_chunks(
    n: int, run: Callable[[range], list[T]], workers: int
) -> list[T]:
    """Apply run to row ranges covering 0..n-1 and concatenate in row order."""
    if workers <= 1 or n < 4:
        return run(range(n))
    step = max(1, (n + workers - 1) // workers)
    spans = [range(lo, min(lo + step, n)) for lo in range(0, n, step)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(run, spans))
    out: list[T] = []
    for part in parts:
        out.extend(part)
    return out
