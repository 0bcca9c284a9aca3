"""Order-preserving map that fans out to processes when DIHOM_THREADS > 1."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("DIHOM_THREADS", "1")))
    except ValueError:
        return 1


def pmap(fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
    n = min(worker_count(), len(items))
    if n <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items))
