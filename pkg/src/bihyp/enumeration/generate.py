"""Isomorph-free generation of uniform bi-hypergraphs by orderly augmentation.

A node is a canonical edge set, held as its sorted list of colex ranks.
Children add one edge of higher rank than every edge present and are kept
only if canonical.  Dropping the highest-ranked edge of a canonical set
leaves a canonical set, so every isomorphism class is reached from exactly
one parent and appears exactly once.

Two backends decide canonicity.  When all ``r``-subsets fit in a 64-bit
word and ``n <= 8``, the images of an edge set under every vertex
permutation are computed at once with numpy.  Otherwise the incremental
canonical labeling from :mod:`.canon` is used.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import comb, factorial
from typing import Iterator

import numpy as np

from ..core import BiHypergraph
from .canon import canonical_form, colex_subsets

Ranks = tuple[int, ...]


@lru_cache(maxsize=8)
def _shift_table(n: int, r: int) -> np.ndarray:
    """``table[p, e]`` is the bit of edge ``e``'s image under permutation ``p``.

    Bit position ``N - 1 - rank`` puts colex rank 0 in the most significant
    bit, so a larger integer means a lexicographically greater incidence
    vector.
    """
    subsets = np.array(colex_subsets(n, r), dtype=np.int64).reshape(-1, r)
    perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
    images = np.sort(perms[:, subsets], axis=2)
    binom = np.array([[comb(v, i + 1) for i in range(r)] for v in range(n)], dtype=np.int64)
    ranks = binom[images, np.arange(r)].sum(axis=2)
    N = len(subsets)
    return np.left_shift(np.uint64(1), (N - 1 - ranks).astype(np.uint64))


def uses_table(n: int, r: int) -> bool:
    return r >= 1 and comb(n, r) <= 64 and n <= 8


class Orderly:
    def __init__(self, n: int, r: int):
        self.n = n
        self.r = r
        self.N = comb(n, r)
        self.subsets = colex_subsets(n, r)
        self._table = _shift_table(n, r) if uses_table(n, r) else None

    def edges(self, ranks: Ranks) -> list[tuple[int, ...]]:
        return [self.subsets[x] for x in ranks]

    def hypergraph(self, ranks: Ranks) -> BiHypergraph:
        return BiHypergraph(self.n, self.edges(ranks))

    def is_canonical(self, ranks: Ranks) -> bool:
        if not ranks:
            return True
        if self._table is not None:
            mask = 0
            for x in ranks:
                mask |= 1 << (self.N - 1 - x)
            images = np.bitwise_or.reduce(self._table[:, list(ranks)], axis=1)
            return not bool((images > np.uint64(mask)).any())
        return canonical_form(self.hypergraph(ranks), self.r).ranks == tuple(ranks)

    def children(self, ranks: Ranks) -> Iterator[Ranks]:
        start = ranks[-1] + 1 if ranks else 0
        for x in range(start, self.N):
            child = ranks + (x,)
            if self.is_canonical(child):
                yield child

    def walk(self, root: Ranks = (), max_edges: int | None = None) -> Iterator[Ranks]:
        """Preorder traversal of the subtree under ``root`` (inclusive)."""
        limit = self.N if max_edges is None else max_edges
        stack = [root]
        while stack:
            node = stack.pop()
            yield node
            if len(node) < limit:
                stack.extend(reversed(list(self.children(node))))

    def split(self, depth: int, max_edges: int) -> tuple[list[Ranks], list[Ranks]]:
        """Nodes shallower than ``depth`` and the subtree roots at ``depth``."""
        depth = min(depth, max_edges)
        head, roots = [], []
        for node in self.walk((), depth):
            (roots if len(node) == depth else head).append(node)
        return head, roots


def count_classes_burnside(n: int, r: int) -> list[int]:
    """Isomorphism classes per edge count by Burnside's lemma (independent check).

    Averages, over all vertex permutations, the polynomial
    ``prod over cycles on r-subsets of (1 + x^len)``.
    """
    subsets = colex_subsets(n, r)
    index = {s: i for i, s in enumerate(subsets)}
    N = len(subsets)
    total = [0] * (N + 1)
    for perm in permutations(range(n)):
        image = [index[tuple(sorted(perm[v] for v in s))] for s in subsets]
        seen = [False] * N
        poly = [1]
        for i in range(N):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = image[j]
                length += 1
            new = [0] * (len(poly) + length)
            for d, c in enumerate(poly):
                new[d] += c
                new[d + length] += c
            poly = new
        for d, c in enumerate(poly):
            total[d] += c
    f = factorial(n)
    assert all(t % f == 0 for t in total)
    return [t // f for t in total]


def count_classes_naive(n: int, r: int, max_edges: int) -> list[int]:
    """Class counts per edge count by listing every edge subset and
    deduplicating by brute-force canonical form (independent check, tiny ``n``)."""
    from itertools import combinations as subsets_of

    from .canon import brute_force_canonical

    triples = colex_subsets(n, r)
    seen: set = set()
    counts = [0] * (max_edges + 1)
    for m in range(max_edges + 1):
        for chosen in subsets_of(triples, m):
            key = brute_force_canonical(BiHypergraph(n, chosen), r)
            if key not in seen:
                seen.add(key)
                counts[m] += 1
    return counts
