"""Hypothesis strategies for random hypergraphs."""

from hypothesis import strategies as st

from bihyp.core import BiHypergraph, MixedHypergraph


def _antichain(masks):
    keep = []
    for m in masks:
        if all(m & o != m and m & o != o for o in keep):
            keep.append(m)
    return keep


def _edges(n, masks):
    return [tuple(v for v in range(n) if m >> v & 1) for m in masks]


@st.composite
def families(draw, n, min_size=1, max_count=12):
    masks = draw(st.lists(st.integers(1, (1 << n) - 1), max_size=max_count))
    masks = [m for m in masks if m.bit_count() >= min_size]
    return _edges(n, _antichain(masks))


@st.composite
def bi_hypergraphs(draw, min_n=1, max_n=7, min_edge=2):
    n = draw(st.integers(min_n, max_n))
    return BiHypergraph(n, draw(families(n, min_size=min(min_edge, n))))


@st.composite
def mixed_hypergraphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    return MixedHypergraph(n, draw(families(n)), draw(families(n)))


@st.composite
def uniform_bi(draw, n, r, max_edges=None):
    from itertools import combinations

    pool = list(combinations(range(n), r))
    chosen = draw(st.lists(st.sampled_from(pool), unique=True, max_size=max_edges or len(pool)))
    return BiHypergraph(n, chosen)
