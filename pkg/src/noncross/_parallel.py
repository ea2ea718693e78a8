from concurrent.futures import ThreadPoolExecutor


def pmap(fn, items, threads=1):
    """``list(map(fn, items))``, optionally on a thread pool (order kept)."""
    items = list(items)
    if not threads or threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, items))
