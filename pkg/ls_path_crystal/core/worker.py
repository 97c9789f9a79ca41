import asyncio
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from itertools import islice
from typing import Callable, Iterable, List, Optional, TypeVar

from ..type import constants

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def thread_cap() -> Optional[int]:
    raw = os.environ.get(constants.ENV_THREADS)
    if raw is None or raw.strip() == "":
        return None

    try:
        cap = int(raw)
    except ValueError:
        logger.warning("ignore invalid thread cap. [{}={}]".format(constants.ENV_THREADS, raw))
        return None

    return max(1, cap)


def effective_threads(requested: Optional[int] = None) -> int:
    threads = requested if requested is not None and requested > 0 else constants.DEFAULT_THREADS
    cap = thread_cap()
    if cap is not None:
        threads = min(threads, cap)
    return max(1, threads)


def _batched(items: Iterable[T], size: int):
    it = iter(items)
    while True:
        batch = list(islice(it, size))
        if not batch:
            return
        yield batch


async def _run_async(func: Callable[[T], R], items: List[T], threads: int, label: str) -> List[R]:
    loop = asyncio.get_running_loop()
    results: List[R] = []

    with ThreadPoolExecutor(max_workers=threads) as executor:
        done = 0
        for batch in _batched(items, threads * constants.BATCH_FACTOR):
            tasks = [loop.run_in_executor(executor, func, item) for item in batch]
            results.extend(await asyncio.gather(*tasks))
            done += len(batch)
            logger.info(f"Processed {done}/{len(items)} {label}")

    return results


def run_batches(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None, label: str = "units") -> List[R]:
    items = list(items)
    if len(items) == 0:
        return []

    threads = effective_threads(threads)
    if threads == 1:
        results = [func(item) for item in items]
        logger.info(f"Processed {len(items)}/{len(items)} {label}")
        return results

    return asyncio.run(_run_async(func, items, threads, label))
