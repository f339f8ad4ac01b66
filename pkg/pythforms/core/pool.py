import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, Tuple, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")


def chunk_ranges(lo: int, hi: int, parts: int) -> List[Tuple[int, int]]:
    """Split [lo, hi) into at most `parts` contiguous half-open ranges"""
    if hi <= lo:
        return []
    parts = max(1, min(parts, hi - lo))
    size = (hi - lo + parts - 1) // parts
    return [(start, min(hi, start + size)) for start in range(lo, hi, size)]


def run_partitioned(fn: Callable[..., T], chunks: Sequence[tuple], jobs: int) -> List[T]:
    """
    Apply fn to every chunk and return the results in chunk order.

    With jobs <= 1 (or a single chunk) everything runs in-process; otherwise the
    chunks go to a process pool. `executor.map` keeps submission order, so the
    merged output never depends on the worker count.
    """
    if jobs <= 1 or len(chunks) <= 1:
        return [fn(*chunk) for chunk in chunks]

    logger.info(f"Dispatching {len(chunks)} chunks to {jobs} workers")
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(fn, *zip(*chunks)))
