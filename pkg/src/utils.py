"""
Utility functions shared by the computation modules and the CLI.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Sequence, Tuple, TypeVar

from .gf_linalg import DimensionMismatchError


logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """
    Map fn over items, optionally on a thread pool.

    Results come back in input order whatever the scheduling.

    Args:
        fn: Function applied to every item
        items: Inputs
        workers: Pool size; 1 runs inline
    """
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def parse_element(text: str, p: int, n: int) -> Tuple[int, ...]:
    """
    Parse a comma-separated coordinate vector such as '1,0,2'.

    Raises:
        ValueError: non-integer coordinates
        DimensionMismatchError: wrong number of coordinates
    """
    parts = [part.strip() for part in text.split(",") if part.strip()]
    try:
        coords = tuple(int(part) % p for part in parts)
    except ValueError:
        raise ValueError(f"element '{text}' must be comma-separated integers")
    if len(coords) != n:
        raise DimensionMismatchError(f"element '{text}' has {len(coords)} coordinates, expected {n}")
    return coords


def sample_items(items: Sequence[T], k: int, rng: random.Random) -> List[T]:
    """
    All items when there are at most k of them, else a sorted random sample.
    """
    if len(items) <= k:
        return list(items)
    picked = sorted(rng.sample(range(len(items)), k))
    return [items[i] for i in picked]
