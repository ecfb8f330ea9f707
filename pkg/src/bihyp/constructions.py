"""Generators for the named hypergraph families.

Chain vertices ``v[i, j]`` (block ``i >= 1``, slot ``j`` in 1..3) flatten to
index ``3(i-1) + (j-1)``.  Slot arithmetic wraps: slot 4 is slot 1 and
slot 5 is slot 2, and the wrap is resolved before flattening.  Extra
vertices of the minimal uncolorable constructions are appended after the
chain, ``u`` before ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import BiHypergraph, MixedHypergraph


class ParameterError(ValueError):
    pass


def vid(i: int, j: int) -> int:
    """Flat index of chain vertex ``v[i, j]`` (1-based block and slot)."""
    if i < 1 or not 1 <= j <= 5:
        raise ParameterError(f"bad chain index ({i}, {j})")
    return 3 * (i - 1) + (j - 1) % 3


def chain_labels(k: int, extra: tuple[str, ...] = ()) -> tuple[str, ...]:
    return tuple(f"v{i},{j}" for i in range(1, k + 1) for j in range(1, 4)) + extra


def make_knlm(n: int, l: int, m: int) -> MixedHypergraph:
    """All ``l``-subsets of ``[n]`` as co-edges, all ``m``-subsets as edges."""
    if not (1 <= l <= n and 1 <= m <= n):
        raise ParameterError(f"K(n,l,m) needs 1 <= l, m <= n; got n={n}, l={l}, m={m}")
    prov = {"family": "knlm", "n": n, "l": l, "m": m}
    if l == m:
        return BiHypergraph(n, combinations(range(n), l), provenance=prov)
    return MixedHypergraph(n, combinations(range(n), l), combinations(range(n), m), provenance=prov)


def _hk_edges(k: int) -> set[tuple[int, ...]]:
    edges = set()
    for q in range(1, k):
        for t in (0, 1):
            edges.add(tuple(sorted(vid(q + t, j) for j in (1, 2, 3))))
        for j in (1, 2, 3):
            for t in (1, 2):
                edges.add(tuple(sorted((vid(q + 1, j), vid(q, j), vid(q, j + t)))))
    return edges


def make_hk(k: int) -> BiHypergraph:
    """The chain of ``k`` vertex triples with ``7k - 6`` edges."""
    if k < 2:
        raise ParameterError(f"H_k needs k >= 2, got {k}")
    return BiHypergraph(3 * k, _hk_edges(k), labels=chain_labels(k), provenance={"family": "hk", "k": k})


# Points 1..7 and lines as drawn in the usual triangle picture of the Fano plane.
_FANO_LINES = ((7, 6, 5), (5, 2, 1), (1, 3, 7), (2, 4, 7), (3, 4, 5), (1, 4, 6), (2, 3, 6))


def make_fano() -> BiHypergraph:
    return BiHypergraph(
        7,
        [tuple(p - 1 for p in line) for line in _FANO_LINES],
        labels=tuple(f"p{i}" for i in range(1, 8)),
        provenance={"family": "fano"},
    )


def _tri(*vs: int) -> tuple[int, ...]:
    return tuple(sorted(vs))


def muc_even(k: int) -> BiHypergraph:
    """Order ``6k``: ``H_2k`` with its last triple replaced by three wrap-around edges."""
    K = 2 * k
    edges = _hk_edges(K)
    edges.discard(_tri(*(vid(K, i) for i in (1, 2, 3))))
    for j in (1, 2, 3):
        edges.add(_tri(vid(1, j), vid(K, j + 1), vid(K, j + 2)))
    return BiHypergraph(3 * K, edges, labels=chain_labels(K), provenance={"family": "muc-even", "k": k})


def muc_odd(k: int) -> BiHypergraph:
    """Order ``6k + 3``: ``H_{2k+1}`` with its last triple replaced."""
    K = 2 * k + 1
    edges = _hk_edges(K)
    edges.discard(_tri(*(vid(K, i) for i in (1, 2, 3))))
    for j in (1, 2, 3):
        edges.add(_tri(vid(1, j), vid(K, j), vid(K, j + 1)))
    return BiHypergraph(3 * K, edges, labels=chain_labels(K), provenance={"family": "muc-odd", "k": k})


def muc_plus1(k: int) -> BiHypergraph:
    """Order ``6k + 1``: ``H_2k`` plus one vertex joined to both end triples."""
    K = 2 * k
    v = 3 * K
    edges = _hk_edges(K)
    for j in (1, 2, 3):
        edges.add(_tri(v, vid(1, j), vid(K, j + 1)))
    return BiHypergraph(3 * K + 1, edges, labels=chain_labels(K, ("v",)), provenance={"family": "muc-plus1", "k": k})


def muc_plus4(k: int) -> BiHypergraph:
    """Order ``6k + 4``: ``H_{2k+1}`` plus one vertex, first triple removed."""
    K = 2 * k + 1
    v = 3 * K
    edges = _hk_edges(K)
    edges.discard(_tri(*(vid(1, i) for i in (1, 2, 3))))
    for i in (1, 2):
        edges.add(_tri(v, vid(K, i), vid(K, i + 1)))
    for j in (1, 2, 3):
        edges.add(_tri(v, vid(1, j), vid(K, j)))
    return BiHypergraph(3 * K + 1, edges, labels=chain_labels(K, ("v",)), provenance={"family": "muc-plus4", "k": k})


def muc_plus2(k: int) -> BiHypergraph:
    """Order ``6k + 2``: ``H_2k`` plus ``u, v``, first triple removed."""
    K = 2 * k
    u, v = 3 * K, 3 * K + 1
    edges = _hk_edges(K)
    edges.discard(_tri(*(vid(1, i) for i in (1, 2, 3))))
    edges.add(_tri(u, vid(1, 1), vid(1, 2)))
    edges.add(_tri(v, vid(1, 2), vid(1, 3)))
    for j in (1, 2):
        edges.add(_tri(u, vid(1, j), vid(K, 3 - j)))
        edges.add(_tri(v, vid(1, j + 1), vid(K, 4 - j)))
    return BiHypergraph(3 * K + 2, edges, labels=chain_labels(K, ("u", "v")), provenance={"family": "muc-plus2", "k": k})


def muc_plus5(k: int) -> BiHypergraph:
    """Order ``6k + 5``: ``H_{2k+1}`` plus ``u, v``, first triple removed."""
    K = 2 * k + 1
    u, v = 3 * K, 3 * K + 1
    edges = _hk_edges(K)
    edges.discard(_tri(*(vid(1, i) for i in (1, 2, 3))))
    edges.add(_tri(u, vid(1, 1), vid(1, 2)))
    edges.add(_tri(v, vid(1, 2), vid(1, 3)))
    for j in (1, 2):
        edges.add(_tri(u, vid(1, j), vid(K, j)))
        edges.add(_tri(v, vid(1, j + 1), vid(K, j + 1)))
    return BiHypergraph(3 * K + 2, edges, labels=chain_labels(K, ("u", "v")), provenance={"family": "muc-plus5", "k": k})


# residue of n mod 6 -> (builder, offset)
_MUC_BY_RESIDUE = {
    0: (muc_even, 0),
    3: (muc_odd, 3),
    1: (muc_plus1, 1),
    4: (muc_plus4, 4),
    2: (muc_plus2, 2),
    5: (muc_plus5, 5),
}


def make_muc(n: int) -> BiHypergraph:
    """Minimal uncolorable 3-uniform bi-hypergraph of order ``n >= 6``."""
    if n < 6:
        raise ParameterError(f"make_muc needs n >= 6, got {n}")
    builder, offset = _MUC_BY_RESIDUE[n % 6]
    h = builder((n - offset) // 6)
    assert h.n == n
    return h


def muc_size(n: int) -> int:
    """Edge count of ``make_muc(n)``, from the closed forms per residue class."""
    k, res = divmod(n, 6)
    return {0: 14 * k - 4, 3: 14 * k + 3, 1: 14 * k - 3, 4: 14 * k + 5, 2: 14 * k - 1, 5: 14 * k + 6}[res]


FAMILIES = ("knlm", "hk", "fano", "muc", "muc-even", "muc-odd", "muc-plus1", "muc-plus4", "muc-plus2", "muc-plus5")

_BY_K = {
    "hk": make_hk,
    "muc-even": muc_even,
    "muc-odd": muc_odd,
    "muc-plus1": muc_plus1,
    "muc-plus4": muc_plus4,
    "muc-plus2": muc_plus2,
    "muc-plus5": muc_plus5,
}


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    params: dict = field(default_factory=dict)

    def build(self) -> MixedHypergraph:
        p = self.params

        def need(name):
            if p.get(name) is None:
                raise ParameterError(f"family {self.family!r} needs parameter {name}")
            return int(p[name])

        if self.family == "knlm":
            return make_knlm(need("n"), need("l"), need("m"))
        if self.family == "fano":
            return make_fano()
        if self.family == "muc":
            h = make_muc(need("n"))
            return h.with_meta(labels=h.labels, provenance={**h.provenance, "n": h.n})
        if self.family in _BY_K:
            k = need("k")
            if k < 1:
                raise ParameterError(f"{self.family} needs k >= 1")
            return _BY_K[self.family](k)
        raise ParameterError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
