import math
import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bihyp.analysis import (
    EPS,
    PreconditionError,
    all_bounds,
    complement_pair_witness,
    contains_k533,
    degree_bound,
    handshake_min_degree,
    identify,
    is_connected,
    is_minimal_uncolorable,
    is_two_edge_connected,
    lll_incidence_bound,
    lll_incidence_threshold,
    lll_size_bound,
    max_edge_incidence,
    non_adjacent_pairs,
    partition_witness,
    reduction_applies,
)
from bihyp.constructions import make_fano, make_knlm, make_muc
from bihyp.core import BiHypergraph, MixedHypergraph, ModelError, is_proper
from bihyp.solver import decide_colorable
from strategies import mixed_hypergraphs, uniform_bi


def star(r, extra):
    """One edge meeting ``extra`` others, on fresh vertices."""
    edges = [tuple(range(r))]
    nxt = r
    for i in range(extra):
        edges.append((i % r,) + tuple(range(nxt, nxt + r - 1)))
        nxt += r - 1
    return BiHypergraph(nxt, edges)


class TestSizeBound:
    def test_r3(self):
        rep = lll_size_bound(BiHypergraph(5, [(0, 1, 2), (0, 1, 3), (0, 1, 4)]))
        assert rep.threshold == 4 and rep.satisfied and rep.conclusion == "colorable"
        rep = lll_size_bound(BiHypergraph(5, [(0, 1, 2), (0, 1, 3), (0, 1, 4), (2, 3, 4)]))
        assert not rep.satisfied and rep.conclusion == "no conclusion"

    def test_r4(self):
        h = BiHypergraph(8, list(combinations(range(8), 4))[:26])
        rep = lll_size_bound(h)
        assert rep.threshold == 27 and rep.satisfied

    def test_non_uniform(self):
        with pytest.raises(ModelError):
            lll_size_bound(BiHypergraph(4, [(0, 1, 2), (2, 3)]))


class TestIncidenceBound:
    def test_r4_eight(self):
        h = star(4, 8)
        assert max_edge_incidence(h) == 8
        rep = lll_incidence_bound(h)
        assert rep.threshold == pytest.approx(27 / math.e - 1) and rep.satisfied
        assert rep.conclusion == "colorable with at most 3 colors"

    def test_r4_nine(self):
        assert not lll_incidence_bound(star(4, 9)).satisfied

    def test_r3_lone_edge(self):
        rep = lll_incidence_bound(BiHypergraph(3, [(0, 1, 2)]))
        assert rep.threshold == pytest.approx(4 / math.e - 1)
        # 0 < 0.471, so the bound applies; a lone triple is indeed 2-colorable.
        assert rep.satisfied and rep.conclusion == "colorable with at most 2 colors"
        assert decide_colorable(BiHypergraph(3, [(0, 1, 2)]), max_colors=2).colorable


class TestDegreeBound:
    def test_r5(self):
        h = BiHypergraph(13, [(0, 1, 2, 3, 4), (4, 5, 6, 7, 8), (8, 9, 10, 11, 12), (0, 5, 9, 10, 12)])
        rep = degree_bound(h)
        assert rep.threshold == pytest.approx((256 / math.e - 2) / 5) and rep.satisfied

    def test_r4(self):
        rep = degree_bound(BiHypergraph(7, [(0, 1, 2, 3), (3, 4, 5, 6)]))
        assert rep.threshold == pytest.approx((27 / math.e - 2) / 4) and not rep.satisfied

    def test_r3_empty(self):
        rep = degree_bound(BiHypergraph(3), r=3)
        assert rep.threshold < 0 and not rep.satisfied


class TestOneSided:
    @given(st.integers(3, 4).flatmap(lambda r: st.integers(r, 9).flatmap(lambda n: uniform_bi(n, r, 30))))
    @settings(max_examples=200, deadline=None)
    def test_satisfied_means_colorable(self, h):
        if h.size == 0:
            return
        for rep in all_bounds(h):
            assert rep.conclusion != "uncolorable"
            if rep.satisfied:
                v = decide_colorable(h, max_colors=h.rank - 1 if rep.name == "lll-incidence" else None)
                assert v.colorable

    def test_epsilon_is_conservative(self):
        assert EPS > 0 and lll_incidence_threshold(4) - 8 > EPS


class TestHandshake:
    def test_edgeless(self):
        assert handshake_min_degree(BiHypergraph(4))[1] == 0

    def test_k533(self):
        assert handshake_min_degree(make_knlm(5, 3, 3))[1] == 6

    def test_seven_nine(self):
        rng = random.Random(1)
        pool = list(combinations(range(7), 3))
        for _ in range(200):
            assert handshake_min_degree(BiHypergraph(7, rng.sample(pool, 9)))[1] <= 3


class TestPartitionWitness:
    def test_k433(self):
        w = partition_witness(make_knlm(4, 3, 3), [(0, 1), (2, 3)])
        assert w and w.rule == "few-parts" and w.coloring.colors == (0, 0, 1, 1)

    def test_fano_plus_two(self):
        # u = 0, v1..v6 = 1..6
        u, v1, v2, v3, v4, v5, v6 = range(7)
        edges = [
            (u, v1, v2), (u, v4, v5), (u, v3, v6),
            (v1, v3, v4), (v1, v5, v6), (v2, v3, v5), (v2, v4, v6),
            (v3, v4, v5), (v1, v2, v6),
        ]
        h = BiHypergraph(7, edges)
        w = partition_witness(h, [(v1, v2, v4, v5), (v3, v6), (u,)])
        assert w and w.rule == "singleton-part" and is_proper(h, w.coloring.colors)

    def test_not_independent(self):
        w = partition_witness(make_knlm(4, 3, 3), [(0, 1, 2), (3,)])
        assert not w and "contains edge" in w.violation

    def test_not_partition(self):
        with pytest.raises(ModelError):
            partition_witness(make_knlm(4, 3, 3), [(0, 1), (1, 2, 3)])

    @given(mixed_hypergraphs(max_n=7), st.data())
    @settings(max_examples=200, deadline=None)
    def test_witness_is_proper(self, h, data):
        labels = data.draw(st.lists(st.integers(0, 3), min_size=h.n, max_size=h.n))
        parts = [tuple(v for v in range(h.n) if labels[v] == k) for k in range(4)]
        w = partition_witness(h, [p for p in parts if p])
        if w:
            assert is_proper(h, w.coloring.colors)


class TestComplementPair:
    def test_small_sizes(self):
        rng = random.Random(2)
        pool = list(combinations(range(6), 3))
        for _ in range(300):
            h = BiHypergraph(6, rng.sample(pool, rng.randint(0, 9)))
            c = complement_pair_witness(h)
            assert c is not None and is_proper(h, c.colors)

    def test_all_pairs_hit(self):
        full = set(range(6))
        halves = [s for s in combinations(range(6), 3) if 0 in s]
        rng = random.Random(3)
        for _ in range(20):
            edges = [s if rng.random() < 0.5 else tuple(sorted(full - set(s))) for s in halves]
            assert complement_pair_witness(BiHypergraph(6, edges)) is None

    def test_empty(self):
        assert complement_pair_witness(BiHypergraph(6), r=3).colors == (0, 0, 0, 1, 1, 1)

    def test_wrong_order(self):
        with pytest.raises(PreconditionError):
            complement_pair_witness(BiHypergraph(7, [(0, 1, 2)]))


class TestIdentify:
    def test_isolated_pair(self):
        h = BiHypergraph(5, [(0, 1, 2)])
        ident = identify(h, 3, 4)
        assert ident.hypergraph.n == 4 and ident.hypergraph.edges == ((0, 1, 2),)

    def test_adjacent_rejected(self):
        with pytest.raises(PreconditionError):
            identify(BiHypergraph(3, [(0, 1, 2)]), 0, 1)

    def test_seven_to_six(self):
        rng = random.Random(4)
        pool = list(combinations(range(7), 3))
        seen = 0
        while seen < 50:
            h = BiHypergraph(7, rng.sample(pool, 9))
            pairs = non_adjacent_pairs(h)
            if not pairs:
                continue
            seen += 1
            ident = identify(h, *pairs[0])
            assert ident.hypergraph.n == 6 and ident.hypergraph.size <= 9
            v = decide_colorable(ident.hypergraph)
            assert v.colorable and is_proper(h, ident.lift(v.witness.colors).colors)

    def test_superset_dropped(self):
        h = MixedHypergraph(4, [(0, 1), (1, 2, 3)], [])
        ident = identify(h, 0, 2)
        assert ident.hypergraph.c_edges == ((0, 1),) and ident.dropped_supersets == 1

    @given(mixed_hypergraphs(min_n=2, max_n=7), st.data())
    @settings(max_examples=300, deadline=None)
    def test_lift(self, h, data):
        pairs = non_adjacent_pairs(h)
        if not pairs:
            return
        ident = identify(h, *data.draw(st.sampled_from(pairs)))
        v = decide_colorable(ident.hypergraph)
        if v.colorable:
            assert is_proper(h, ident.lift(v.witness.colors).colors)


class TestReduction:
    def test_examples(self):
        assert reduction_applies(7, 3, 9)
        assert not reduction_applies(6, 3, 9)
        assert reduction_applies(49, 4, 209)

    def test_ladder(self):
        assert all(reduction_applies(n, 3, 9) for n in range(7, 101))


class TestMinimality:
    def test_k533(self):
        cert = is_minimal_uncolorable(make_knlm(5, 3, 3))
        assert cert.minimal and len(cert.witnesses) == 10
        h = make_knlm(5, 3, 3)
        for e, fam, w in cert.witnesses:
            from bihyp.core import delete_edge

            assert is_proper(delete_edge(h, e, fam), w.colors)

    def test_k633(self):
        cert = is_minimal_uncolorable(make_knlm(6, 3, 3))
        assert not cert.minimal and cert.failure.startswith("deleting")

    def test_colorable(self):
        assert not is_minimal_uncolorable(make_fano()).minimal

    def test_isolated_vertex(self):
        h = BiHypergraph(6, make_knlm(5, 3, 3).edges)
        assert is_minimal_uncolorable(h).failure == "isolated vertex"

    def test_parallel_matches_serial(self):
        h = make_muc(9)
        assert is_minimal_uncolorable(h, jobs=2).to_json() == is_minimal_uncolorable(h).to_json()


class TestStructure:
    def test_k533_containment(self):
        assert contains_k533(make_knlm(6, 3, 3)) is not None
        assert contains_k533(make_muc(6)) is None
        assert contains_k533(BiHypergraph(5, list(combinations(range(5), 3))[:9])) is None

    def test_two_edge_connected(self):
        assert is_two_edge_connected(make_knlm(5, 3, 3))
        assert not is_two_edge_connected(BiHypergraph(3, [(0, 1, 2)]))
        assert not is_two_edge_connected(BiHypergraph(6, [(0, 1, 2), (3, 4, 5)]))

    def test_connected(self):
        assert is_connected(BiHypergraph(5, [(0, 1, 2), (2, 3, 4)]))
        assert not is_connected(BiHypergraph(4, [(0, 1, 2)]))
