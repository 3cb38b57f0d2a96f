import os
from concurrent.futures import ThreadPoolExecutor

THREADS_ENV = "GRIDWALK_THREADS"


def default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            value = 0
        if value >= 1:
            return value
    return os.cpu_count() or 1


def ordered_map(fn, items, threads=None):
    """``list(map(fn, items))``, optionally on a thread pool; order preserved."""
    items = list(items)
    threads = default_threads() if threads is None else max(1, int(threads))
    if threads == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fn, items))
