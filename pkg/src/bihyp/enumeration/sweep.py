"""Exhaustive sweeps over isomorphism classes of uniform bi-hypergraphs."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Callable, Iterator

from ..analysis import is_connected, is_minimal_uncolorable
from ..core import BiHypergraph, adjacency_masks
from ..solver import decide_colorable
from .canon import from_ranks
from .generate import Orderly, Ranks
from .store import VerdictRecord, VerdictStore, now


class SweepTimeout(RuntimeError):
    pass


class ParameterError(ValueError):
    pass


# Filters that can drop instances carry the argument that makes dropping them safe.
FILTER_JUSTIFICATION = {
    "all_pairs_adjacent": (
        "an instance with two non-adjacent vertices is colorable whenever the "
        "instance obtained by identifying them is; that one has order n-1 and "
        "no more edges, so it is covered by the order n-1 sweep"
    ),
    "min_degree": "heuristic filter; only sound with a separate argument for low-degree instances",
    "connected": "a disconnected instance is colorable iff every component is",
}


@dataclass(frozen=True)
class SweepSpec:
    n: int
    r: int
    max_edges: int
    min_edges: int = 0
    min_degree: int = 0
    all_pairs_adjacent: bool = False
    connected: bool = False
    predicate: str = "colorable"
    shards: int = 1
    shard_depth: int = 3

    def __post_init__(self):
        if self.r < 1 or self.n < 0:
            raise ParameterError("need n >= 0 and r >= 1")
        if not 0 <= self.min_edges <= self.max_edges:
            raise ParameterError("need 0 <= min_edges <= max_edges")
        if self.max_edges > comb(self.n, self.r):
            raise ParameterError(
                f"max_edges={self.max_edges} exceeds the {comb(self.n, self.r)} possible {self.r}-subsets"
            )
        if self.predicate not in PREDICATES:
            raise ParameterError(f"unknown predicate {self.predicate!r}; choose from {sorted(PREDICATES)}")

    @property
    def id(self) -> str:
        parts = [f"n{self.n}", f"r{self.r}", f"m{self.min_edges}-{self.max_edges}"]
        if self.min_degree:
            parts.append(f"deg{self.min_degree}")
        if self.all_pairs_adjacent:
            parts.append("adj")
        if self.connected:
            parts.append("conn")
        parts.append(self.predicate)
        return "-".join(parts)

    def active_filters(self) -> list[str]:
        out = []
        if self.min_degree:
            out.append("min_degree")
        if self.all_pairs_adjacent:
            out.append("all_pairs_adjacent")
        if self.connected:
            out.append("connected")
        return out

    def to_json(self) -> dict:
        doc = asdict(self)
        doc["id"] = self.id
        doc["filter_justification"] = {f: FILTER_JUSTIFICATION[f] for f in self.active_filters()}
        return doc


def passes_filters(spec: SweepSpec, h: BiHypergraph) -> bool:
    if spec.min_degree:
        degs = [0] * h.n
        for e in h.edges:
            for v in e:
                degs[v] += 1
        if min(degs, default=0) < spec.min_degree:
            return False
    if spec.all_pairs_adjacent:
        full = (1 << h.n) - 1
        if any((m | (1 << v)) != full for v, m in enumerate(adjacency_masks(h))):
            return False
    if spec.connected and not is_connected(h):
        return False
    return True


def _colorable(h):
    v = decide_colorable(h)
    return v.colorable, v.status, list(v.witness.colors) if v.witness else None


def _not_minimal_uncolorable(h):
    cert = is_minimal_uncolorable(h)
    return (not cert.minimal), ("minimal-uncolorable" if cert.minimal else "not-minimal-uncolorable"), None


# predicate(h) -> (holds, status, witness)
PREDICATES: dict[str, Callable] = {
    "colorable": _colorable,
    "not-minimal-uncolorable": _not_minimal_uncolorable,
}


@dataclass
class _Partial:
    by_edges: dict[int, int] = field(default_factory=dict)
    evaluated: list = field(default_factory=list)  # (ranks, holds, status, witness)


def _process(spec: SweepSpec, gen: Orderly, nodes, deadline: float | None, out: _Partial) -> None:
    check = PREDICATES[spec.predicate]
    for i, ranks in enumerate(nodes):
        if deadline is not None and i % 256 == 0 and time.time() > deadline:
            raise SweepTimeout(f"sweep {spec.id} exceeded its time budget")
        m = len(ranks)
        if m < spec.min_edges:
            continue
        out.by_edges[m] = out.by_edges.get(m, 0) + 1
        h = gen.hypergraph(ranks)
        if not passes_filters(spec, h):
            continue
        holds, status, witness = check(h)
        out.evaluated.append((ranks, holds, status, witness))


def _run_shard(args) -> _Partial:
    spec, roots, deadline = args
    gen = Orderly(spec.n, spec.r)
    out = _Partial()
    for root in roots:
        _process(spec, gen, gen.walk(root, spec.max_edges), deadline, out)
    return out


@dataclass
class SweepSummary:
    spec: SweepSpec
    classes_by_edges: dict[int, int]
    evaluated_by_edges: dict[int, int]
    counterexamples: list[list[list[int]]]
    elapsed: float
    results: list = field(default_factory=list, repr=False)

    @property
    def classes(self) -> int:
        return sum(self.classes_by_edges.values())

    @property
    def evaluated(self) -> int:
        return sum(self.evaluated_by_edges.values())

    @property
    def held(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "classes": self.classes,
            "classes_by_edges": {str(k): v for k, v in sorted(self.classes_by_edges.items())},
            "evaluated": self.evaluated,
            "evaluated_by_edges": {str(k): v for k, v in sorted(self.evaluated_by_edges.items())},
            "counterexamples": self.counterexamples,
            "held": self.held,
            "elapsed_s": round(self.elapsed, 3),
        }


def enumerate_bihypergraphs(spec: SweepSpec) -> Iterator[BiHypergraph]:
    """One representative per isomorphism class in the edge range, after filters.

    Representatives are the canonical forms themselves.
    """
    gen = Orderly(spec.n, spec.r)
    for ranks in gen.walk((), spec.max_edges):
        if len(ranks) >= spec.min_edges:
            h = gen.hypergraph(ranks)
            if passes_filters(spec, h):
                yield h


def run_sweep(
    spec: SweepSpec,
    store: VerdictStore | None = None,
    jobs: int = 1,
    time_budget: float | None = None,
) -> SweepSummary:
    """Evaluate the predicate on every class and aggregate deterministically.

    The augmentation tree is cut at ``spec.shard_depth``; subtree roots are
    dealt round-robin into ``spec.shards`` shards that run on up to ``jobs``
    worker processes.  Results are sorted by canonical ranks before
    aggregation, so the summary does not depend on sharding.
    """
    start = time.time()
    deadline = start + time_budget if time_budget else None
    gen = Orderly(spec.n, spec.r)
    head, roots = gen.split(spec.shard_depth, spec.max_edges)
    total = _Partial()
    _process(spec, gen, head, deadline, total)

    shards = max(1, spec.shards)
    tasks = [(spec, roots[i::shards], deadline) for i in range(shards)]
    tasks = [t for t in tasks if t[1]]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_shard, tasks))
    else:
        parts = [_run_shard(t) for t in tasks]
    for p in parts:
        for m, c in p.by_edges.items():
            total.by_edges[m] = total.by_edges.get(m, 0) + c
        total.evaluated.extend(p.evaluated)
    total.evaluated.sort(key=lambda x: (len(x[0]), x[0]))

    evaluated_by_edges: dict[int, int] = {}
    counterexamples = []
    for ranks, holds, _, _ in total.evaluated:
        evaluated_by_edges[len(ranks)] = evaluated_by_edges.get(len(ranks), 0) + 1
        if not holds:
            counterexamples.append([list(e) for e in gen.edges(ranks)])
    summary = SweepSummary(
        spec,
        dict(sorted(total.by_edges.items())),
        evaluated_by_edges,
        counterexamples,
        time.time() - start,
        total.evaluated,
    )
    if store is not None:
        persist(summary, store)
    return summary


def persist(summary: SweepSummary, store: VerdictStore) -> None:
    spec = summary.spec
    stamp = now()
    records = []
    for ranks, _, status, witness in summary.results:
        cf = from_ranks(spec.n, spec.r, ranks)
        records.append(
            VerdictRecord(
                hash=cf.hash,
                sweep=spec.id,
                n=spec.n,
                r=spec.r,
                edges=[list(e) for e in cf.edges],
                predicate=spec.predicate,
                status=status,
                witness=witness,
                timestamp=stamp,
            )
        )
    store.insert_many(records)
    meta = summary.to_json()
    meta["timestamp"] = stamp
    store.write_meta(spec.id, meta)
