"""Canonical forms of uniform hypergraphs.

An ``r``-uniform hypergraph on ``n`` vertices is read as its incidence
vector over all ``r``-subsets listed in colex order (subsets of
``{0..t-1}`` come before any subset containing ``t``).  The canonical form
is the relabeling whose incidence vector is lexicographically greatest;
equivalently, the one whose edge list, sorted by colex rank, is
lexicographically least.

Because of the colex prefix property the labeling can be built one vertex
at a time: label ``t`` decides exactly the block of subsets whose largest
element is ``t``.  All partial labelings that tie on the best prefix are
kept, and among unlabeled vertices that are twins (swapping them is an
automorphism) only one is tried.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from ..core import BiHypergraph, MixedHypergraph, ModelError, mask_of

MAX_CANON_N = 12


def colex_rank(subset: Iterable[int]) -> int:
    return sum(comb(v, i + 1) for i, v in enumerate(sorted(subset)))


@lru_cache(maxsize=None)
def colex_subsets(n: int, r: int) -> tuple[tuple[int, ...], ...]:
    """All ``r``-subsets of ``range(n)`` in colex order."""
    return tuple(sorted(combinations(range(n), r), key=lambda s: s[::-1]))


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]  # sorted by colex rank

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(colex_rank(e) for e in self.edges)

    @property
    def key(self) -> str:
        body = ";".join(",".join(map(str, e)) for e in self.edges)
        return f"{self.n}:{self.r}:{body}"

    @property
    def hash(self) -> str:
        return hashlib.sha256(self.key.encode()).hexdigest()[:16]

    def hypergraph(self) -> BiHypergraph:
        return BiHypergraph(self.n, self.edges)


def _twin_classes(n: int, edge_masks: set[int]) -> list[int]:
    def swapped(m: int, a: int, b: int) -> int:
        ba, bb = m >> a & 1, m >> b & 1
        if ba == bb:
            return m
        return m ^ (1 << a) ^ (1 << b)

    cls = list(range(n))
    for a in range(n):
        if cls[a] != a:
            continue
        for b in range(a + 1, n):
            if cls[b] == b and all(swapped(m, a, b) in edge_masks for m in edge_masks):
                cls[b] = a
    return cls


def canonical_labeling(n: int, r: int, edge_masks: set[int]) -> tuple[int, ...]:
    """Vertex order ``order`` such that old vertex ``order[t]`` gets label ``t``."""
    twin = _twin_classes(n, edge_masks)
    partials: list[tuple[int, ...]] = [()]
    for t in range(n):
        blocks = colex_subsets(t, r - 1) if r >= 1 else ()
        best = None
        nxt = []
        for p in partials:
            used = set(p)
            tried = set()
            for v in range(n):
                if v in used or twin[v] in tried:
                    continue
                tried.add(twin[v])
                bit = 1 << v
                block = 0
                for s in blocks:
                    block <<= 1
                    if (mask_of(p[i] for i in s) | bit) in edge_masks:
                        block |= 1
                if best is None or block > best:
                    best, nxt = block, [p + (v,)]
                elif block == best:
                    nxt.append(p + (v,))
        partials = nxt
    return partials[0]


def canonical_form(h: MixedHypergraph, r: int | None = None) -> CanonicalForm:
    """Canonical form of a uniform bi-hypergraph (``n <= 12``)."""
    if not h.is_bi:
        raise ModelError("canonical forms are defined for bi-hypergraphs")
    if h.n > MAX_CANON_N:
        raise ModelError(f"canonical form refuses n={h.n} > {MAX_CANON_N}")
    if r is None:
        r = h.rank
        if r is None:
            if h.size:
                raise ModelError("canonical form needs a uniform hypergraph")
            r = 0
    elif any(len(e) != r for e in h.edges):
        raise ModelError(f"hypergraph is not {r}-uniform")
    order = canonical_labeling(h.n, r, set(h.c_masks))
    label = {v: t for t, v in enumerate(order)}
    edges = [tuple(sorted(label[v] for v in e)) for e in h.edges]
    edges.sort(key=colex_rank)
    return CanonicalForm(h.n, r, tuple(edges))


def brute_force_canonical(h: MixedHypergraph, r: int) -> tuple[tuple[int, ...], ...]:
    """Same canonical edge list by trying every permutation (test oracle, tiny ``n``)."""
    from itertools import permutations

    best = None
    for perm in permutations(range(h.n)):
        ranks = sorted(colex_rank(perm[v] for v in e) for e in h.edges)
        if best is None or ranks < best:
            best = ranks
    index = {colex_rank(s): s for s in combinations(range(h.n), r)} if r else {}
    return tuple(index[x] for x in best)


def from_ranks(n: int, r: int, ranks: Sequence[int]) -> CanonicalForm:
    subsets = colex_subsets(n, r)
    return CanonicalForm(n, r, tuple(subsets[x] for x in sorted(ranks)))
