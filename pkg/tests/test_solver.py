import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bihyp.constructions import make_hk, make_knlm, vid
from bihyp.core import BiHypergraph, Coloring, MixedHypergraph, delete_edge, is_proper, relabel
from bihyp.oracle import (
    MAX_ORACLE_N,
    brute_force_colorable,
    count_proper_partitions,
    partition_table,
    restricted_growth_strings,
)
from bihyp.solver import (
    brute_force_oracle,
    decide_colorable,
    enumerate_proper_colorings,
    trivially_uncolorable,
    upper_chromatic_number,
)
from strategies import bi_hypergraphs, mixed_hypergraphs

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147]


class TestDecide:
    def test_k433_colorable(self):
        v = decide_colorable(make_knlm(4, 3, 3))
        assert v.colorable and is_proper(make_knlm(4, 3, 3), v.witness.colors)

    def test_k533_uncolorable(self):
        v = decide_colorable(make_knlm(5, 3, 3))
        assert v.status == "uncolorable" and v.witness is None

    def test_h2_witness_pattern(self):
        v = decide_colorable(make_hk(2))
        classes = {frozenset(c) for c in v.witness.classes()}
        z_choices = []
        for z in (1, 2, 3):
            j = [x for x in (1, 2, 3) if x != z]
            a = frozenset({vid(1, j[0]), vid(1, j[1]), vid(2, z)})
            b = frozenset({vid(2, j[0]), vid(2, j[1]), vid(1, z)})
            z_choices.append({a, b})
        assert classes in z_choices

    def test_small_bi_edge_shortcut(self):
        assert trivially_uncolorable(BiHypergraph(3, [(0, 1)]))
        assert decide_colorable(BiHypergraph(3, [(0, 1)])).status == "uncolorable"
        assert decide_colorable(MixedHypergraph(2, [(0,)], [])).status == "uncolorable"

    def test_max_colors(self):
        h = make_knlm(4, 3, 3)
        assert decide_colorable(h, max_colors=2).colorable
        assert not decide_colorable(BiHypergraph(3, [(0, 1, 2)]), max_colors=1).colorable

    def test_json(self):
        doc = decide_colorable(BiHypergraph(3, [(0, 1, 2)])).to_json()
        assert set(doc) == {"status", "witness", "nodes", "ms"}
        assert doc["status"] == "colorable" and len(doc["witness"]) == 3

    def test_deterministic(self):
        h = make_hk(4)
        assert decide_colorable(h).witness == decide_colorable(h).witness


class TestEnumerate:
    def test_single_co_edge(self):
        h = MixedHypergraph(3, [(0, 1, 2)], [])
        assert len(list(enumerate_proper_colorings(h))) == 4

    def test_h2_three_colorings(self):
        assert len(list(enumerate_proper_colorings(make_hk(2)))) == 3

    def test_k533_empty(self):
        assert list(enumerate_proper_colorings(make_knlm(5, 3, 3))) == []

    def test_lexicographic_order(self):
        cols = [c.colors for c in enumerate_proper_colorings(BiHypergraph(5, [(0, 1, 2), (2, 3, 4)]))]
        assert cols == sorted(cols) and len(set(cols)) == len(cols)

    def test_edgeless_is_bell(self):
        for n in range(6):
            assert len(list(enumerate_proper_colorings(MixedHypergraph(n)))) == BELL[n]

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_parity_on_chain(self, k):
        h = make_hk(k)
        for c in enumerate_proper_colorings(h):
            for i1 in range(1, k + 1):
                for i2 in range(i1 + 2, k + 1, 2):
                    assert all(c[vid(i1, j)] == c[vid(i2, j)] for j in (1, 2, 3))

    @given(mixed_hypergraphs(max_n=6))
    @settings(max_examples=150, deadline=None)
    def test_count_matches_oracle(self, h):
        cols = list(enumerate_proper_colorings(h))
        assert all(is_proper(h, c.colors) for c in cols)
        assert len(cols) == count_proper_partitions(h)

    @given(mixed_hypergraphs(max_n=6), st.integers(1, 4))
    @settings(max_examples=100, deadline=None)
    def test_max_colors_respected(self, h, k):
        cols = list(enumerate_proper_colorings(h, max_colors=k))
        assert all(c.num_colors <= k for c in cols)
        assert len(cols) == sum(1 for c in enumerate_proper_colorings(h) if c.num_colors <= k)


class TestChiBar:
    def test_k433(self):
        assert upper_chromatic_number(make_knlm(4, 3, 3)).value == 2

    def test_h2(self):
        assert upper_chromatic_number(make_hk(2)).value == 2

    def test_edgeless(self):
        cb = upper_chromatic_number(MixedHypergraph(3))
        assert cb.value == 3 and cb.witness.num_colors == 3

    def test_uncolorable(self):
        cb = upper_chromatic_number(make_knlm(5, 3, 3))
        assert cb.value is None and cb.witness is None

    @given(mixed_hypergraphs(max_n=6))
    @settings(max_examples=150, deadline=None)
    def test_matches_enumeration(self, h):
        cb = upper_chromatic_number(h)
        best = max((c.num_colors for c in enumerate_proper_colorings(h)), default=None)
        assert cb.value == best
        if best is not None:
            assert cb.witness.num_colors == best and is_proper(h, cb.witness.colors)


class TestOracle:
    def test_rgs_counts_are_bell(self):
        for n in range(9):
            assert sum(1 for _ in restricted_growth_strings(n)) == BELL[n]

    def test_rgs_normalized(self):
        for c in restricted_growth_strings(5):
            assert Coloring(tuple(c)).colors == tuple(c)

    def test_table_matches_generator(self):
        for n in range(1, 8):
            assert [tuple(r) for r in partition_table(n).tolist()] == [tuple(c) for c in restricted_growth_strings(n)]

    def test_refuses_large(self):
        with pytest.raises(ValueError):
            brute_force_colorable(MixedHypergraph(MAX_ORACLE_N + 1))

    def test_agrees_on_named(self):
        assert brute_force_oracle(make_knlm(5, 3, 3)).status == "uncolorable"
        assert brute_force_oracle(make_hk(2)).status == "colorable"


class TestSolverProperties:
    @given(mixed_hypergraphs(max_n=7))
    @settings(max_examples=400, deadline=None)
    def test_agrees_with_oracle(self, h):
        v = decide_colorable(h)
        assert v.status == brute_force_oracle(h).status
        if v.colorable:
            assert is_proper(h, v.witness.colors)

    @given(bi_hypergraphs(min_n=5, max_n=9, min_edge=3))
    @settings(max_examples=100, deadline=None)
    def test_agrees_with_oracle_larger(self, h):
        assert decide_colorable(h).status == brute_force_oracle(h).status

    @given(mixed_hypergraphs(max_n=7), st.data())
    @settings(max_examples=150, deadline=None)
    def test_isomorphism_invariance(self, h, data):
        g = relabel(h, data.draw(st.permutations(range(h.n))))
        assert decide_colorable(h).status == decide_colorable(g).status
        assert upper_chromatic_number(h).value == upper_chromatic_number(g).value

    @given(mixed_hypergraphs(max_n=7))
    @settings(max_examples=150, deadline=None)
    def test_deletion_monotone(self, h):
        if decide_colorable(h).colorable:
            for e, in_c, in_d in h.members():
                fam = "both" if in_c and in_d else ("c" if in_c else "d")
                assert decide_colorable(delete_edge(h, e, fam)).colorable
