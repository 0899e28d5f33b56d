"""Ordered fan-out over a process pool.

Results always come back in input order, so reductions done by the caller
are bit-identical whatever the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterator, Sequence

_STATE: Any = None


def _install(state: Any) -> None:
    global _STATE
    _STATE = state


def _call(job):
    fn, item = job
    return fn(_STATE, item)


def default_workers() -> int:
    return os.cpu_count() or 1


def ordered_map(
    fn: Callable[[Any, Any], Any],
    items: Sequence[Any],
    state: Any,
    workers: int = 1,
) -> Iterator[Any]:
    """Yield ``fn(state, item)`` for each item, in order.

    ``fn`` must be a module-level function when ``workers > 1``; ``state`` is
    shipped once per worker process.
    """
    if workers <= 1 or len(items) <= 1:
        for item in items:
            yield fn(state, item)
        return
    workers = min(workers, len(items))
    chunksize = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(workers, initializer=_install, initargs=(state,)) as ex:
        yield from ex.map(_call, [(fn, item) for item in items], chunksize=chunksize)
