"""Exact colorability, coloring enumeration and upper chromatic number.

All three run the same backtracking engine.  Colors are handed out in
normalized form: a vertex may reuse any color already in play or open
exactly one new color, so every partition of the vertices is visited at
most once and the ``n!`` relabelings of a coloring never are.

Two cheap propagation rules prune the search.  When every vertex of an
edge but one is colored with a single color, the last vertex may not take
that color.  When every vertex of a co-edge but one is colored with
``|e| - 1`` distinct colors, the last vertex must reuse one of them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .core import Coloring, MixedHypergraph, is_proper


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: Coloring | None
    nodes: int
    elapsed: float

    @property
    def colorable(self) -> bool:
        return self.status == "colorable"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": list(self.witness.colors) if self.witness else None,
            "nodes": self.nodes,
            "ms": int(round(self.elapsed * 1000)),
        }


@dataclass(frozen=True)
class ChiBar:
    value: int | None
    witness: Coloring | None

    def to_json(self) -> dict:
        return {"chibar": self.value, "witness": list(self.witness.colors) if self.witness else None}


def trivially_uncolorable(h: MixedHypergraph) -> bool:
    """Members that no coloring can satisfy: singleton edges or co-edges, and
    bi-edges with fewer than three vertices."""
    for e, in_c, in_d in h.members():
        if len(e) == 1:
            return True
        if in_c and in_d and len(e) <= 2:
            return True
    return False


class _Engine:
    def __init__(self, h: MixedHypergraph, max_colors: int | None = None):
        self.h = h
        self.n = h.n
        self.max_colors = h.n if max_colors is None else max_colors
        # per vertex: (other vertices, |e|, in C, in D)
        self.inc: list[list[tuple[tuple[int, ...], int, bool, bool]]] = [[] for _ in range(h.n)]
        for e, in_c, in_d in h.members():
            for v in e:
                others = tuple(x for x in e if x != v)
                self.inc[v].append((others, len(e), in_c, in_d))
        self.deg = [len(x) for x in self.inc]
        self.colors = [-1] * h.n
        self.nodes = 0

    def allowed(self, w: int, k: int) -> tuple[int, bool]:
        """Bit set of existing colors ``w`` may take, and whether a new one may open."""
        colors = self.colors
        forbid = 0
        restrict = -1
        for others, size, in_c, in_d in self.inc[w]:
            seen = 0
            for x in others:
                cx = colors[x]
                if cx < 0:
                    break
                seen |= 1 << cx
            else:
                cnt = seen.bit_count()
                if in_d:
                    if size == 1:
                        return 0, False
                    if cnt == 1:
                        forbid |= seen
                if in_c and cnt == size - 1:
                    restrict &= seen
        existing = ((1 << k) - 1) & restrict & ~forbid
        new_ok = restrict == -1 and k < self.max_colors
        return existing, new_ok

    def _options(self, existing: int, new_ok: bool, k: int) -> list[int]:
        out = []
        c = 0
        while existing:
            if existing & 1:
                out.append(c)
            existing >>= 1
            c += 1
        if new_ok:
            out.append(k)
        return out

    def _pick(self, k: int):
        """Unassigned vertex with fewest options (ties: higher degree, lower index)."""
        best = None
        best_key = None
        best_opts = None
        for v in range(self.n):
            if self.colors[v] >= 0:
                continue
            existing, new_ok = self.allowed(v, k)
            size = existing.bit_count() + new_ok
            if size == 0:
                return v, []
            key = (size, -self.deg[v], v)
            if best_key is None or key < best_key:
                best, best_key, best_opts = v, key, (existing, new_ok)
        if best is None:
            return None, None
        return best, self._options(best_opts[0], best_opts[1], k)

    def search(self, exact: int | None = None) -> list[int] | None:
        """Depth-first search with most-constrained-vertex ordering."""
        n = self.n

        def rec(assigned: int, k: int):
            self.nodes += 1
            if exact is not None and k + (n - assigned) < exact:
                return None
            v, opts = self._pick(k)
            if v is None:
                if exact is not None and k != exact:
                    return None
                return list(self.colors)
            for c in opts:
                self.colors[v] = c
                got = rec(assigned + 1, max(k, c + 1))
                if got is not None:
                    return got
            self.colors[v] = -1
            return None

        return rec(0, 0)

    def enumerate(self) -> Iterator[list[int]]:
        """All normalized proper colorings in lexicographic order of label vectors."""
        n = self.n

        def rec(v: int, k: int):
            self.nodes += 1
            if v == n:
                yield list(self.colors)
                return
            existing, new_ok = self.allowed(v, k)
            for c in self._options(existing, new_ok, k):
                self.colors[v] = c
                yield from rec(v + 1, max(k, c + 1))
            self.colors[v] = -1

        yield from rec(0, 0)


def _verdict(h: MixedHypergraph, colors, nodes: int, start: float) -> Verdict:
    elapsed = time.perf_counter() - start
    if colors is None:
        return Verdict("uncolorable", None, nodes, elapsed)
    witness = Coloring(tuple(colors))
    assert is_proper(h, witness.colors), "solver produced an improper witness"
    return Verdict("colorable", witness, nodes, elapsed)


def decide_colorable(h: MixedHypergraph, max_colors: int | None = None) -> Verdict:
    """Decide whether ``h`` has a proper coloring, returning a witness if so.

    ``max_colors`` caps the number of colors; without it the search is
    complete, because properness depends only on the partition into color
    classes and a partition of ``n`` vertices has at most ``n`` classes.
    """
    start = time.perf_counter()
    if trivially_uncolorable(h):
        return Verdict("uncolorable", None, 0, time.perf_counter() - start)
    eng = _Engine(h, max_colors)
    return _verdict(h, eng.search(), eng.nodes, start)


def enumerate_proper_colorings(h: MixedHypergraph, max_colors: int | None = None) -> Iterator[Coloring]:
    if trivially_uncolorable(h):
        return
    eng = _Engine(h, max_colors)
    for colors in eng.enumerate():
        yield Coloring(tuple(colors))


def upper_chromatic_number(h: MixedHypergraph) -> ChiBar:
    """Largest number of colors in a proper coloring, with a witness.

    Tries exact-``k`` searches from ``k = n`` downward and stops at the first
    success; the colorability witness gives a floor so the search never goes
    below it.
    """
    base = decide_colorable(h)
    if not base.colorable:
        return ChiBar(None, None)
    floor = base.witness.num_colors
    for k in range(h.n, floor, -1):
        eng = _Engine(h, k)
        got = eng.search(exact=k)
        if got is not None:
            w = Coloring(tuple(got))
            assert is_proper(h, w.colors) and w.num_colors == k
            return ChiBar(k, w)
    return ChiBar(floor, base.witness)


def brute_force_oracle(h: MixedHypergraph) -> Verdict:
    from .oracle import brute_force_colorable

    return brute_force_colorable(h)
