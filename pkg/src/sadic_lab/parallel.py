"""Thread fan-out with results merged in input order."""

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count():
    raw = os.environ.get("SADIC_LAB_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = os.cpu_count() or 1
    return max(1, n)


def ordered_map(fn, items):
    items = list(items)
    n = min(thread_count(), len(items))
    if n <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def chunks(seq, parts):
    seq = list(seq)
    size = max(1, -(-len(seq) // max(1, parts)))
    return [seq[i:i + size] for i in range(0, len(seq), size)]
