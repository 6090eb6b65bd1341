"""Compiled Gray-code enumeration kernels.

Each kernel walks a contiguous range of Gray-code indices, so callers can
split the 2^k message space into disjoint chunks and merge the results.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True, nogil=True)
def _start_word(gens, start, cw):
    g = start ^ (start >> 1)
    i = 0
    while g:
        if g & 1:
            for w in range(cw.shape[0]):
                cw[w] ^= gens[i, w]
        g >>= 1
        i += 1


@njit(cache=True, nogil=True)
def min_weight_range(gens, start, stop, floor):
    """Minimum weight of codewords for Gray indices in [start, stop), skipping 0.

    Stops early once a weight <= ``floor`` is seen.
    """
    nw = gens.shape[1]
    cw = np.zeros(nw, dtype=np.uint64)
    _start_word(gens, start, cw)
    best = 1 << 30
    if start > 0:
        wt = 0
        for w in range(nw):
            wt += _popcount64(cw[w])
        best = wt
    for i in range(start + 1, stop):
        j = 0
        t = i
        while (t & 1) == 0:
            t >>= 1
            j += 1
        wt = 0
        for w in range(nw):
            cw[w] ^= gens[j, w]
            wt += _popcount64(cw[w])
        if wt < best:
            best = wt
            if best <= floor:
                return best
    return best


@njit(cache=True, nogil=True)
def weight_counts_range(gens, start, stop, n):
    nw = gens.shape[1]
    counts = np.zeros(n + 1, dtype=np.int64)
    cw = np.zeros(nw, dtype=np.uint64)
    _start_word(gens, start, cw)
    wt = 0
    for w in range(nw):
        wt += _popcount64(cw[w])
    counts[wt] += 1
    for i in range(start + 1, stop):
        j = 0
        t = i
        while (t & 1) == 0:
            t >>= 1
            j += 1
        wt = 0
        for w in range(nw):
            cw[w] ^= gens[j, w]
            wt += _popcount64(cw[w])
        counts[wt] += 1
    return counts


def _chunks(k: int, nchunks: int) -> list[tuple[int, int]]:
    total = 1 << k
    nchunks = max(1, min(nchunks, total))
    step = -(-total // nchunks)
    return [(a, min(a + step, total)) for a in range(0, total, step)]


def gray_min_weight(gens: np.ndarray, k: int, floor: int = 0, threads: int = 1) -> int:
    """Minimum nonzero weight over the 2^k - 1 nonzero messages."""
    chunks = _chunks(k, max(threads, 1) * 4 if k > 16 else 1)
    if threads <= 1 or len(chunks) == 1:
        return min(min_weight_range(gens, a, b, floor) for a, b in chunks)
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return min(ex.map(lambda ab: min_weight_range(gens, ab[0], ab[1], floor), chunks))


def gray_weight_counts(gens: np.ndarray, k: int, n: int, threads: int = 1) -> np.ndarray:
    chunks = _chunks(k, max(threads, 1) * 4 if k > 16 else 1)
    if threads <= 1 or len(chunks) == 1:
        parts = [weight_counts_range(gens, a, b, n) for a, b in chunks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(lambda ab: weight_counts_range(gens, ab[0], ab[1], n), chunks))
    return np.sum(parts, axis=0)
