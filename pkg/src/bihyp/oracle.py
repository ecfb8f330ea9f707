"""Naive colorability oracle: test every set partition, no pruning.

Shares nothing with :mod:`bihyp.solver` apart from the data model, so the
two can be checked against each other.
"""

from __future__ import annotations

import time
from functools import lru_cache

import numpy as np

from .core import Coloring, MixedHypergraph

MAX_ORACLE_N = 12


def restricted_growth_strings(n: int):
    """Yield every restricted growth string of length ``n`` in lexicographic order.

    ``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])``; these are in bijection with
    the set partitions of ``n`` elements.
    """
    if n == 0:
        yield ()
        return
    a = [0] * n
    b = [1] * n  # b[i] = 1 + max(a[:i])
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top = max(b[i], a[i] + 1)
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = top


@lru_cache(maxsize=16)
def partition_table(n: int) -> np.ndarray:
    """All restricted growth strings of length ``n`` as an ``int8`` array, lexicographic."""
    table = np.zeros((1, min(n, 1)), dtype=np.int8)
    for width in range(1, n):
        top = table.max(axis=1).astype(np.int64) + 2
        rows = np.repeat(table, top, axis=0)
        starts = np.repeat(np.cumsum(top) - top, top)
        last = (np.arange(len(rows)) - starts).astype(np.int8)
        table = np.hstack([rows, last[:, None]])
    return table


def _distinct_per_row(block: np.ndarray) -> np.ndarray:
    s = np.sort(block, axis=1)
    return 1 + np.count_nonzero(np.diff(s, axis=1), axis=1)


def brute_force_colorable(h: MixedHypergraph):
    from .solver import Verdict

    if h.n > MAX_ORACLE_N:
        raise ValueError(f"brute-force oracle refuses n={h.n} > {MAX_ORACLE_N}")
    start = time.perf_counter()
    table = partition_table(h.n)
    ok = np.ones(len(table), dtype=bool)
    for e in h.c_edges:
        ok &= _distinct_per_row(table[:, list(e)]) < len(e)
    for e in h.d_edges:
        ok &= _distinct_per_row(table[:, list(e)]) > 1
    hits = np.flatnonzero(ok)
    elapsed = time.perf_counter() - start
    if len(hits) == 0:
        return Verdict("uncolorable", None, len(table), elapsed)
    return Verdict("colorable", Coloring(tuple(int(x) for x in table[hits[0]])), int(hits[0]) + 1, elapsed)


def count_proper_partitions(h: MixedHypergraph) -> int:
    table = partition_table(h.n)
    ok = np.ones(len(table), dtype=bool)
    for e in h.c_edges:
        ok &= _distinct_per_row(table[:, list(e)]) < len(e)
    for e in h.d_edges:
        ok &= _distinct_per_row(table[:, list(e)]) > 1
    return int(ok.sum())
