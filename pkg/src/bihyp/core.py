"""Mixed hypergraphs, bi-hypergraphs and the coloring rules on them.

Vertices are dense indices ``0..n-1``.  Every edge is stored twice: as a
sorted tuple of vertex indices and as an integer bit set, so that
containment and intersection tests are single integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

Edge = tuple[int, ...]


class ModelError(ValueError):
    """An input violates the hypergraph data model (domain error)."""


class SpernerError(ModelError):
    """A family contains two members where one includes the other."""


class EdgeNotFoundError(LookupError):
    """The requested edge is not a member of the hypergraph."""


def mask_of(edge: Iterable[int]) -> int:
    m = 0
    for v in edge:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> Edge:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _normalize_edge(n: int, edge: Iterable[int]) -> Edge:
    e = tuple(int(v) for v in edge)
    if not e:
        raise ModelError("edges must be nonempty")
    if len(set(e)) != len(e):
        raise ModelError(f"edge {e} repeats a vertex")
    for v in e:
        if not 0 <= v < n:
            raise ModelError(f"edge {e} references vertex {v} outside 0..{n - 1}")
    return tuple(sorted(e))


def _normalize_family(n: int, edges: Iterable[Iterable[int]], name: str) -> tuple[Edge, ...]:
    family = sorted({_normalize_edge(n, e) for e in edges})
    masks = [mask_of(e) for e in family]
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i != j and a & b == a:
                raise SpernerError(
                    f"{name} is not a Sperner family: {family[i]} is contained in {family[j]}"
                )
    return tuple(family)


class MixedHypergraph:
    """A triple ``(V, C, D)`` with co-edges ``C`` and edges ``D``.

    Both families must be Sperner families.  Instances are immutable;
    structural equality compares ``(n, C, D)`` only, so display labels and
    provenance metadata never affect it.
    """

    __slots__ = ("n", "c_edges", "d_edges", "c_masks", "d_masks", "labels", "provenance", "_hash")

    def __init__(
        self,
        n: int,
        c_edges: Iterable[Iterable[int]] = (),
        d_edges: Iterable[Iterable[int]] = (),
        labels: Sequence[str] | None = None,
        provenance: Mapping | None = None,
    ):
        n = int(n)
        if n < 0:
            raise ModelError("vertex count must be nonnegative")
        c = _normalize_family(n, c_edges, "C")
        d = c if c_edges is d_edges else _normalize_family(n, d_edges, "D")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ModelError(f"expected {n} labels, got {len(labels)}")
        setattr_ = object.__setattr__
        setattr_(self, "n", n)
        setattr_(self, "c_edges", c)
        setattr_(self, "d_edges", d)
        setattr_(self, "c_masks", tuple(mask_of(e) for e in c))
        setattr_(self, "d_masks", tuple(mask_of(e) for e in d))
        setattr_(self, "labels", labels)
        setattr_(self, "provenance", dict(provenance) if provenance else None)
        setattr_(self, "_hash", hash((n, c, d)))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return (MixedHypergraph, (self.n, self.c_edges, self.d_edges, self.labels, self.provenance))

    def __eq__(self, other):
        if not isinstance(other, MixedHypergraph):
            return NotImplemented
        return (self.n, self.c_edges, self.d_edges) == (other.n, other.c_edges, other.d_edges)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.is_bi:
            return f"BiHypergraph(n={self.n}, edges={list(self.c_edges)})"
        return f"MixedHypergraph(n={self.n}, C={list(self.c_edges)}, D={list(self.d_edges)})"

    @property
    def is_bi(self) -> bool:
        return self.c_edges == self.d_edges

    @property
    def edges(self) -> tuple[Edge, ...]:
        """The single edge family of a bi-hypergraph."""
        if not self.is_bi:
            raise ModelError("edges is only defined when C = D")
        return self.c_edges

    @property
    def size(self) -> int:
        if self.is_bi:
            return len(self.c_edges)
        return len(self.c_edges) + len(self.d_edges)

    @property
    def rank(self) -> int | None:
        """Common edge size when the hypergraph is uniform, else None."""
        sizes = {len(e) for e in self.c_edges} | {len(e) for e in self.d_edges}
        return sizes.pop() if len(sizes) == 1 else None

    def members(self) -> list[tuple[Edge, bool, bool]]:
        """Distinct sets of ``C ∪ D`` with flags ``(edge, in_c, in_d)``."""
        c = set(self.c_edges)
        d = set(self.d_edges)
        return [(e, e in c, e in d) for e in sorted(c | d)]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def with_meta(self, labels=None, provenance=None) -> "MixedHypergraph":
        return _rebuild(self, self.c_edges, self.d_edges, labels=labels, provenance=provenance)

    def as_bi(self) -> "BiHypergraph":
        if not self.is_bi:
            raise ModelError("C and D differ; not a bi-hypergraph")
        return BiHypergraph(self.n, self.c_edges, labels=self.labels, provenance=self.provenance)


class BiHypergraph(MixedHypergraph):
    """A mixed hypergraph with ``C = D``, given by one edge family."""

    __slots__ = ()

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = (), labels=None, provenance=None):
        edges = tuple(edges)
        super().__init__(n, edges, edges, labels=labels, provenance=provenance)

    def __reduce__(self):
        return (BiHypergraph, (self.n, self.c_edges, self.labels, self.provenance))


def _rebuild(h: MixedHypergraph, c, d, n=None, labels=None, provenance=None) -> MixedHypergraph:
    n = h.n if n is None else n
    if isinstance(h, BiHypergraph):
        return BiHypergraph(n, c, labels=labels, provenance=provenance)
    return MixedHypergraph(n, c, d, labels=labels, provenance=provenance)


@dataclass(frozen=True)
class Coloring:
    """A vertex coloring normalized to first-occurrence labels.

    ``Coloring([5, 5, 2, 7])`` is stored as ``(0, 0, 1, 2)``; two colorings
    are equal exactly when they induce the same partition of the vertices.
    """

    colors: tuple[int, ...]

    def __post_init__(self):
        seen: dict[int, int] = {}
        out = []
        for x in self.colors:
            if x not in seen:
                seen[x] = len(seen)
            out.append(seen[x])
        object.__setattr__(self, "colors", tuple(out))

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.colors)

    def classes(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return [tuple(x) for x in out]

    @classmethod
    def from_parts(cls, n: int, parts: Iterable[Iterable[int]]) -> "Coloring":
        colors = [-1] * n
        for i, part in enumerate(parts):
            for v in part:
                colors[v] = i
        if -1 in colors:
            raise ModelError("parts do not cover every vertex")
        return cls(tuple(colors))


def _colors_on(edge: Iterable[int], c: Sequence[int]) -> set:
    try:
        return {c[v] for v in edge}
    except IndexError:
        raise ModelError(f"edge {tuple(edge)} references a vertex outside the coloring") from None


def is_properly_colored_c(edge: Iterable[int], c: Sequence[int]) -> bool:
    """A co-edge is properly colored when it is not rainbow."""
    edge = tuple(edge)
    return len(_colors_on(edge, c)) < len(edge)


def is_properly_colored_d(edge: Iterable[int], c: Sequence[int]) -> bool:
    """An edge is properly colored when it is not monochromatic."""
    return len(_colors_on(edge, c)) > 1


def is_proper(h: MixedHypergraph, c: Sequence[int]) -> bool:
    if len(c) != h.n:
        raise ModelError(f"coloring has {len(c)} entries for {h.n} vertices")
    return all(is_properly_colored_c(e, c) for e in h.c_edges) and all(
        is_properly_colored_d(e, c) for e in h.d_edges
    )


def _check_vertex(h: MixedHypergraph, v: int) -> None:
    if not 0 <= v < h.n:
        raise ModelError(f"vertex {v} outside 0..{h.n - 1}")


def incident_edges(h: MixedHypergraph, v: int) -> list[Edge]:
    _check_vertex(h, v)
    return [e for e, _, _ in h.members() if v in e]


def degree(h: MixedHypergraph, v: int) -> int:
    return len(incident_edges(h, v))


def neighborhood(h: MixedHypergraph, v: int) -> frozenset[int]:
    out: set[int] = set()
    for e in incident_edges(h, v):
        out.update(e)
    out.discard(v)
    return frozenset(out)


def adjacency_masks(h: MixedHypergraph) -> list[int]:
    """Per-vertex bit set of neighbours over ``C ∪ D``."""
    adj = [0] * h.n
    for m in set(h.c_masks) | set(h.d_masks):
        rest = m
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            adj[v] |= m & ~low
            rest ^= low
    return adj


def is_independent(h: MixedHypergraph, s: Iterable[int]) -> bool:
    s = tuple(s)
    for v in s:
        _check_vertex(h, v)
    sm = mask_of(s)
    return not any(m & sm == m for m in h.c_masks + h.d_masks)


def delete_edge(h: MixedHypergraph, e: Iterable[int], family: str = "both") -> MixedHypergraph:
    """Remove ``e`` from ``C`` and/or ``D`` (``family`` is ``"c"``, ``"d"`` or ``"both"``).

    With ``"both"`` the edge is removed from every family holding it, which is
    ``H - e`` for a bi-hypergraph.
    """
    e = tuple(sorted(e))
    in_c = e in h.c_edges and family in ("c", "both")
    in_d = e in h.d_edges and family in ("d", "both")
    if not (in_c or in_d):
        raise EdgeNotFoundError(f"edge {e} not in {family} family")
    c = tuple(x for x in h.c_edges if not (in_c and x == e))
    d = tuple(x for x in h.d_edges if not (in_d and x == e))
    if isinstance(h, BiHypergraph) and c != d:
        return MixedHypergraph(h.n, c, d, labels=h.labels)
    return _rebuild(h, c, d, labels=h.labels)


def induced(h: MixedHypergraph, s: Iterable[int], return_map: bool = False):
    """Sub-hypergraph induced by ``s`` with vertices renumbered in increasing order.

    The renumbering map is ``sorted(s)``: new vertex ``i`` is old vertex
    ``sorted(s)[i]``.  Pass ``return_map=True`` to get it alongside.
    """
    keep = sorted(set(s))
    for v in keep:
        _check_vertex(h, v)
    index = {v: i for i, v in enumerate(keep)}
    sm = mask_of(keep)

    def restrict(family, masks):
        return [tuple(index[v] for v in e) for e, m in zip(family, masks) if m & sm == m]

    labels = tuple(h.labels[v] for v in keep) if h.labels else None
    sub = _rebuild(
        h,
        restrict(h.c_edges, h.c_masks),
        restrict(h.d_edges, h.d_masks),
        n=len(keep),
        labels=labels,
    )
    return (sub, tuple(keep)) if return_map else sub


def relabel(h: MixedHypergraph, perm: Sequence[int]) -> MixedHypergraph:
    """Image of ``h`` under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(h.n)):
        raise ModelError("relabeling must be a permutation of the vertices")

    def image(family):
        return [tuple(perm[v] for v in e) for e in family]

    return _rebuild(h, image(h.c_edges), image(h.d_edges))
