"""
Work-Unit Runner

Fans independent work units out to a process pool and gathers the results in
unit order, so a sweep produces the same output for every worker count.
"""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

from ..config import get_thread_count

logger = logging.getLogger(__name__)

U = TypeVar("U")
R = TypeVar("R")


async def run_work_units(
    fn: Callable[[U], R],
    units: Iterable[U],
    workers: int | None = None,
    on_status: Callable[[str], None] | None = None,
) -> list[R]:
    """
    Apply fn to every unit, in parallel when more than one worker is allowed.

    Args:
        fn: Module-level (picklable) function of one unit.
        units: Work units; results come back in this order.
        workers: Process count (default: EHRK_THREADS or the CPU count).
            With one worker everything runs in-process.
        on_status: Optional callback for progress messages

    Returns:
        [fn(unit) for unit in units]
    """
    units = list(units)
    workers = get_thread_count() if workers is None else max(1, workers)
    total = len(units)
    step = max(1, total // 10)

    def _status(msg: str):
        logger.info(msg)
        if on_status:
            on_status(msg)

    if workers == 1 or total <= 1:
        results = []
        for done, unit in enumerate(units, start=1):
            results.append(fn(unit))
            if done % step == 0 or done == total:
                _status(f"{done}/{total} work units done")
        return results

    _status(f"Running {total} work units on {min(workers, total)} processes...")
    loop = asyncio.get_running_loop()
    done = 0

    async def tracked(future):
        nonlocal done
        result = await future
        done += 1
        if done % step == 0 or done == total:
            _status(f"{done}/{total} work units done")
        return result

    with ProcessPoolExecutor(max_workers=min(workers, total)) as pool:
        results = await asyncio.gather(
            *(tracked(loop.run_in_executor(pool, fn, unit)) for unit in units)
        )
    return list(results)


def run_work_units_sync(
    fn: Callable[[U], R],
    units: Iterable[U],
    workers: int | None = None,
    on_status: Callable[[str], None] | None = None,
) -> list[R]:
    """
    Synchronous wrapper for run_work_units.

    See run_work_units for full documentation.
    """
    return asyncio.run(run_work_units(fn, units, workers=workers, on_status=on_status))
