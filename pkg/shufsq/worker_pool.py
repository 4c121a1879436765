# shufsq/worker_pool.py
import logging
import os
from collections import deque
from dataclasses import dataclass
from itertools import islice
from multiprocessing import Pool
from multiprocessing.pool import AsyncResult
from pathlib import Path
from typing import Callable, Deque, Iterable, Iterator, List, Optional, TypeVar, Union

from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn

logger = logging.getLogger(__name__)

WORKERS_ENV = "SHUFSQ_WORKERS"
DEFAULT_CHUNK_SIZE = 2048
IN_FLIGHT_PER_WORKER = 2

T = TypeVar("T")
R = TypeVar("R")


def default_workers() -> int:
    """Worker count from ``SHUFSQ_WORKERS``, or 1 when unset or unusable."""
    raw = os.environ.get(WORKERS_ENV)
    if not raw:
        return 1
    try:
        workers = int(raw)
    except ValueError:
        logger.warning(f"⚠️ Ignoring {WORKERS_ENV}={raw!r}: not an integer.")
        return 1
    if workers < 1:
        logger.warning(f"⚠️ Ignoring {WORKERS_ENV}={raw!r}: must be at least 1.")
        return 1
    return workers


@dataclass
class ScanOptions:
    """Knobs shared by the long scans."""
    workers: Optional[int] = None
    chunk_size: int = DEFAULT_CHUNK_SIZE
    checkpoint: Optional[Union[str, Path]] = None
    checkpoint_every: Optional[int] = None
    stop_after: Optional[int] = None
    progress: bool = False

    def __post_init__(self):
        if self.workers is None:
            self.workers = default_workers()
        if self.workers < 1:
            raise ValueError(f"Worker count must be at least 1, got {self.workers}.")
        if self.chunk_size < 1:
            raise ValueError(f"Chunk size must be at least 1, got {self.chunk_size}.")
        if self.checkpoint is not None:
            self.checkpoint = Path(self.checkpoint)


def chunked(items: Iterable[T], size: int) -> Iterator[List[T]]:
    """Consecutive lists of ``size`` items; the last one may be shorter."""
    iterator = iter(items)
    while True:
        chunk = list(islice(iterator, size))
        if not chunk:
            return
        yield chunk


class WorkerPool:
    """
    Runs a module-level function over a stream of work items, either in
    process or on a ``multiprocessing`` pool. Results always come back in
    submission order, so merged scan output does not depend on the worker
    count. At most ``IN_FLIGHT_PER_WORKER`` items per worker are pulled
    ahead of the caller. An optional rich progress bar is drawn on stderr.
    """

    def __init__(self, workers: int = 1, progress: bool = False, description: str = "Scanning"):
        self.workers = max(1, workers)
        self.progress = progress
        self.description = description

    def map(self, func: Callable[[T], R], items: Iterable[T], total: Optional[int] = None) -> Iterator[R]:
        if not self.progress:
            yield from self._run(func, items)
            return
        with Progress(
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=Console(stderr=True),
            transient=True,
        ) as progress:
            task = progress.add_task(f"[cyan]{self.description}...", total=total)
            for result in self._run(func, items):
                progress.update(task, advance=1)
                yield result

    def _run(self, func: Callable[[T], R], items: Iterable[T]) -> Iterator[R]:
        if self.workers == 1:
            for item in items:
                yield func(item)
            return
        logger.debug(f"🚀 Starting {self.workers} worker processes for {self.description.lower()}.")
        iterator = iter(items)
        with Pool(processes=self.workers) as pool:
            pending: Deque[AsyncResult] = deque(
                pool.apply_async(func, (item,)) for item in islice(iterator, self.workers * IN_FLIGHT_PER_WORKER)
            )
            while pending:
                yield pending.popleft().get()
                # the next item is pulled only after the caller has handled this result
                for item in islice(iterator, 1):
                    pending.append(pool.apply_async(func, (item,)))
