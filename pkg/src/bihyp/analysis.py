"""Sufficient conditions for colorability and structural predicates.

Every bound here is one-sided: when satisfied it certifies colorability,
and when not satisfied it says nothing.  Real-valued thresholds are
compared with a margin of ``EPS`` in the conservative direction.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Sequence

from .core import (
    Coloring,
    MixedHypergraph,
    ModelError,
    _rebuild,
    adjacency_masks,
    delete_edge,
    is_proper,
    mask_of,
)
from .solver import Verdict, decide_colorable

EPS = 1e-9


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class BoundReport:
    name: str
    threshold: float
    measured: float
    sense: str  # "<" or "<="
    satisfied: bool
    conclusion: str

    def to_json(self) -> dict:
        return {
            "bound": self.name,
            "threshold": self.threshold,
            "measured": self.measured,
            "sense": self.sense,
            "satisfied": self.satisfied,
            "conclusion": self.conclusion,
        }


def _uniform_rank(h: MixedHypergraph, r: int | None = None) -> int:
    if r is not None:
        if any(len(e) != r for e, _, _ in h.members()):
            raise ModelError(f"hypergraph is not {r}-uniform")
        return r
    rank = h.rank
    if rank is None:
        if h.size == 0:
            raise ModelError("edgeless hypergraph: pass r explicitly")
        raise ModelError("bound requires a uniform hypergraph")
    return rank


def _report(name, threshold, measured, sense) -> BoundReport:
    ok = measured < threshold - EPS if sense == "<" else measured <= threshold - EPS
    return BoundReport(name, threshold, measured, sense, ok, "colorable" if ok else "no conclusion")


def lll_size_bound(h: MixedHypergraph, r: int | None = None) -> BoundReport:
    """Fewer than ``(r-1)^(r-1)`` edges forces colorability."""
    r = _uniform_rank(h, r)
    threshold = (r - 1) ** (r - 1)
    m = len(h.members())
    return BoundReport("lll-size", threshold, m, "<", m < threshold, "colorable" if m < threshold else "no conclusion")


def max_edge_incidence(h: MixedHypergraph) -> int:
    masks = [mask_of(e) for e, _, _ in h.members()]
    best = 0
    for i, a in enumerate(masks):
        best = max(best, sum(1 for j, b in enumerate(masks) if j != i and a & b))
    return best


def lll_incidence_threshold(r: int) -> float:
    return (r - 1) ** (r - 1) / math.e - 1


def lll_incidence_bound(h: MixedHypergraph, r: int | None = None) -> BoundReport:
    """Every edge meeting fewer than ``(r-1)^(r-1)/e - 1`` others forces an
    ``(r-1)``-coloring by the local lemma."""
    r = _uniform_rank(h, r)
    rep = _report("lll-incidence", lll_incidence_threshold(r), max_edge_incidence(h), "<")
    if rep.satisfied:
        return BoundReport(rep.name, rep.threshold, rep.measured, rep.sense, True, f"colorable with at most {r - 1} colors")
    return rep


def degree_bound(h: MixedHypergraph, r: int | None = None) -> BoundReport:
    r = _uniform_rank(h, r)
    threshold = ((r - 1) ** (r - 1) / math.e - 2) / r
    dmax = max((sum(1 for e, _, _ in h.members() if v in e) for v in range(h.n)), default=0)
    return _report("degree", threshold, dmax, "<=")


def handshake_min_degree(h: MixedHypergraph) -> tuple[int, int]:
    """Vertex of minimum degree (lowest index on ties) and its degree.

    In an ``r``-uniform hypergraph with ``m`` edges this degree is at most
    ``floor(r m / n)``.
    """
    if h.n == 0:
        raise ModelError("no vertices")
    members = [e for e, _, _ in h.members()]
    degs = [sum(1 for e in members if v in e) for v in range(h.n)]
    v = min(range(h.n), key=lambda x: (degs[x], x))
    r = h.rank
    if r is not None:
        assert degs[v] <= (r * len(members)) // h.n
    return v, degs[v]


@dataclass(frozen=True)
class PartitionWitness:
    coloring: Coloring | None
    rule: str | None = None
    violation: str | None = None

    def __bool__(self):
        return self.coloring is not None


def partition_witness(h: MixedHypergraph, parts: Sequence[Sequence[int]]) -> PartitionWitness:
    """Color each part with its own color if that is provably proper.

    The coloring is proper when every part is independent and every co-edge
    meets fewer parts than it has vertices.  ``rule`` names the shortcut
    that applies: ``"few-parts"`` (at most ``r-1`` parts, so the second
    condition is automatic), ``"singleton-part"`` (the last part is a single
    vertex ``w`` and every edge through ``w`` misses one of the other parts)
    or ``"general"``.
    """
    parts = [tuple(p) for p in parts]
    flat = [v for p in parts for v in p]
    if sorted(flat) != list(range(h.n)) or any(not p for p in parts):
        raise ModelError("parts must be nonempty and partition the vertex set")
    pmasks = [mask_of(p) for p in parts]
    for i, pm in enumerate(pmasks):
        for m in set(h.d_masks):
            if m & pm == m:
                return PartitionWitness(None, violation=f"part {i} contains edge {_verts(m)}")
    for m in set(h.c_masks):
        touched = sum(1 for pm in pmasks if m & pm)
        if touched >= m.bit_count():
            return PartitionWitness(None, violation=f"co-edge {_verts(m)} meets {touched} parts")
    coloring = Coloring.from_parts(h.n, parts)
    assert is_proper(h, coloring.colors)
    r = h.rank
    rule = "general"
    if r is not None and len(parts) <= r - 1:
        rule = "few-parts"
    elif r is not None and len(parts) == r and len(parts[-1]) == 1:
        rule = "singleton-part"
    return PartitionWitness(coloring, rule)


def _verts(m: int) -> tuple[int, ...]:
    return tuple(v for v in range(m.bit_length()) if m >> v & 1)


def complement_pair_witness(h: MixedHypergraph, r: int | None = None) -> Coloring | None:
    """Two-coloring from a split of ``2r`` vertices into halves that are both non-edges.

    Such a split always exists when there are fewer than ``C(2r, r)/2``
    edges, since the splits pair up the ``r``-subsets.
    """
    if r is None:
        r = h.rank if h.rank is not None else h.n // 2
    if h.n != 2 * r:
        raise PreconditionError(f"needs exactly 2r = {2 * r} vertices, got {h.n}")
    _uniform_rank(h, r)
    edges = set(h.c_masks) | set(h.d_masks)
    full = (1 << h.n) - 1
    for rest in combinations(range(1, h.n), r - 1):
        half = mask_of((0,) + rest)
        if half not in edges and (full ^ half) not in edges:
            return Coloring(tuple(0 if half >> v & 1 else 1 for v in range(h.n)))
    return None


@dataclass(frozen=True)
class Identification:
    """Result of merging two non-adjacent vertices."""

    hypergraph: MixedHypergraph
    vertex_map: tuple[int, ...]  # old vertex -> new vertex
    merged_duplicates: int
    dropped_supersets: int

    def lift(self, c: Sequence[int]) -> Coloring:
        return Coloring(tuple(c[self.vertex_map[x]] for x in range(len(self.vertex_map))))


def _spernerize(family: list[tuple[int, ...]]) -> tuple[list[tuple[int, ...]], int, int]:
    uniq = sorted(set(family))
    dups = len(family) - len(uniq)
    masks = [mask_of(e) for e in uniq]
    keep = [e for e, m in zip(uniq, masks) if not any(o != m and o & m == o for o in masks)]
    return keep, dups, len(uniq) - len(keep)


def identify(h: MixedHypergraph, u: int, v: int) -> Identification:
    """Merge non-adjacent ``u`` and ``v`` into one vertex.

    The merged vertex takes the smaller of the two indices; vertices above
    the larger index shift down by one.  Any proper coloring of the result
    lifts to ``h`` by giving ``u`` and ``v`` the merged vertex's color.
    """
    if u == v or not (0 <= u < h.n and 0 <= v < h.n):
        raise PreconditionError("identify needs two distinct vertices of h")
    if adjacency_masks(h)[u] >> v & 1:
        raise PreconditionError(f"vertices {u} and {v} are adjacent")
    lo, hi = min(u, v), max(u, v)
    vmap = tuple(lo if x == hi else (x - 1 if x > hi else x) for x in range(h.n))

    def image(family):
        return [tuple(sorted(vmap[x] for x in e)) for e in family]

    c, dc, sc = _spernerize(image(h.c_edges))
    if h.is_bi:
        d, dd, sd = c, 0, 0
    else:
        d, dd, sd = _spernerize(image(h.d_edges))
    labels = None
    if h.labels:
        labels = tuple(h.labels[x] if x != lo else f"{h.labels[lo]}+{h.labels[hi]}" for x in range(h.n) if x != hi)
    quotient = _rebuild(h, c, d, n=h.n - 1, labels=labels)
    return Identification(quotient, vmap, dc + dd, sc + sd)


def non_adjacent_pairs(h: MixedHypergraph) -> list[tuple[int, int]]:
    adj = adjacency_masks(h)
    return [(a, b) for a, b in combinations(range(h.n), 2) if not adj[a] >> b & 1]


def reduction_applies(n: int, r: int, m: int) -> bool:
    """Whether colorability of all ``(n, r, m)`` instances carries to order ``n + 1``.

    A vertex of minimum degree at order ``n+1`` has at most
    ``floor(r m/(n+1)) (r-1)`` neighbours; if that leaves a non-neighbour,
    identifying the two drops the order to ``n``.
    """
    return n >= (r * m) // (n + 1) * (r - 1) + 1


@dataclass
class MinimalityCertificate:
    minimal: bool
    verdict: Verdict
    witnesses: list = field(default_factory=list)  # (edge, family, Coloring) per deletion
    failure: str | None = None

    def __bool__(self):
        return self.minimal

    def to_json(self) -> dict:
        return {
            "minimal": self.minimal,
            "status": self.verdict.status,
            "failure": self.failure,
            "deletions": [
                {"edge": list(e), "family": fam, "witness": list(w.colors) if w else None}
                for e, fam, w in self.witnesses
            ],
        }


def _deletions(h: MixedHypergraph) -> list[tuple[tuple[int, ...], str]]:
    if h.is_bi:
        return [(e, "both") for e in h.edges]
    return [(e, "c") for e in h.c_edges] + [(e, "d") for e in h.d_edges]


def _solve_deletion(args):
    h, e, fam = args
    return decide_colorable(delete_edge(h, e, fam))


def is_minimal_uncolorable(h: MixedHypergraph, jobs: int = 1) -> MinimalityCertificate:
    """Uncolorable, yet colorable after deleting any single member.

    Isolated vertices disqualify: dropping one leaves an uncolorable proper
    sub-hypergraph.
    """
    verdict = decide_colorable(h)
    if verdict.colorable:
        return MinimalityCertificate(False, verdict, failure="colorable")
    covered = 0
    for m in h.c_masks + h.d_masks:
        covered |= m
    if covered != (1 << h.n) - 1:
        return MinimalityCertificate(False, verdict, failure="isolated vertex")
    tasks = [(h, e, fam) for e, fam in _deletions(h)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_solve_deletion, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_solve_deletion(t) for t in tasks]
    witnesses = []
    for (_, e, fam), res in zip(tasks, results):
        witnesses.append((e, fam, res.witness))
        if not res.colorable:
            return MinimalityCertificate(False, verdict, witnesses, failure=f"deleting {e} leaves it uncolorable")
    return MinimalityCertificate(True, verdict, witnesses)


def contains_k533(h: MixedHypergraph) -> tuple[int, ...] | None:
    """A 5-set whose ten triples are all edges, if any."""
    edges = set(h.c_masks) & set(h.d_masks)
    triples = [m for m in edges if m.bit_count() == 3]
    if len(triples) < 10:
        return None
    for s in combinations(range(h.n), 5):
        sm = mask_of(s)
        if sum(1 for m in triples if m & sm == m) == 10:
            return s
    return None


def _connected(n: int, masks) -> bool:
    if n == 0:
        return True
    adj = [0] * n
    for m in masks:
        rest = m
        while rest:
            low = rest & -rest
            adj[low.bit_length() - 1] |= m
            rest ^= low
    seen = 1
    frontier = 1
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & ~seen
        seen |= new
        frontier |= new
    return seen == (1 << n) - 1


def is_connected(h: MixedHypergraph) -> bool:
    return _connected(h.n, set(h.c_masks) | set(h.d_masks))


def is_two_edge_connected(h: MixedHypergraph) -> bool:
    """Connected, and still connected after removing any one member of ``C ∪ D``."""
    masks = sorted(set(h.c_masks) | set(h.d_masks))
    if not _connected(h.n, masks):
        return False
    return all(_connected(h.n, masks[:i] + masks[i + 1 :]) for i in range(len(masks)))


def all_bounds(h: MixedHypergraph, r: int | None = None) -> list[BoundReport]:
    checks: list[Callable] = [lll_size_bound, lll_incidence_bound, degree_bound]
    return [f(h, r) for f in checks]
