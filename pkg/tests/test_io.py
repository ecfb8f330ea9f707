import json

import pytest
from hypothesis import given, settings

from bihyp import io
from bihyp.constructions import make_knlm, make_muc
from bihyp.core import BiHypergraph, MixedHypergraph
from strategies import bi_hypergraphs, mixed_hypergraphs


@given(mixed_hypergraphs(max_n=8))
@settings(max_examples=150, deadline=None)
def test_json_round_trip(h):
    text = io.dumps_json(h)
    g = io.loads_json(text)
    assert g == h and io.dumps_json(g) == text


@given(mixed_hypergraphs(max_n=8))
@settings(max_examples=150, deadline=None)
def test_edgelist_round_trip(h):
    text = io.dumps_edgelist(h)
    g = io.loads_edgelist(text)
    assert g == h and io.dumps_edgelist(g) == text


@given(bi_hypergraphs(max_n=8))
@settings(max_examples=50, deadline=None)
def test_bi_shorthand(h):
    doc = json.loads(io.dumps_json(h))
    assert "edges" in doc and "c_edges" not in doc
    assert isinstance(io.loads_json(io.dumps_json(h)), BiHypergraph)


def test_general_form():
    h = MixedHypergraph(3, [(0, 1)], [(1, 2)])
    doc = io.to_dict(h)
    assert doc == {"n": 3, "c_edges": [[0, 1]], "d_edges": [[1, 2]]}


def test_equal_families_load_as_bi():
    h = io.from_dict({"n": 3, "c_edges": [[0, 1, 2]], "d_edges": [[0, 1, 2]]})
    assert isinstance(h, BiHypergraph)


def test_meta_carried(tmp_path):
    h = make_muc(7)
    p = tmp_path / "m.json"
    io.write(h, p)
    g = io.read(p)
    assert g.labels == h.labels and g.provenance == h.provenance


def test_file_formats(tmp_path):
    h = make_knlm(5, 3, 3)
    for name in ("k.json", "k.txt"):
        io.write(h, tmp_path / name)
        assert io.read(tmp_path / name) == h
    assert (tmp_path / "k.txt").read_text().startswith("#bi\n5 3\n")


@pytest.mark.parametrize(
    "text,line",
    [
        ("#bi\n4 3\n0 1 x\n", 3),
        ("#bi\n4 3\n0 1 2\n0 1\n", 4),
        ("#bi\n4 3\n0 1 9\n", 3),
        ("#mixed\n4 0\nX 0 1\n", 3),
        ("3 3\n", 1),
        ("#bi\nfour\n", 2),
    ],
)
def test_parse_errors_have_lines(text, line):
    with pytest.raises(io.ParseError) as info:
        io.loads_edgelist(text)
    assert info.value.line == line


def test_json_parse_error():
    with pytest.raises(io.ParseError) as info:
        io.loads_json('{"n": 3,\n "edges": [[0, 1, 2]\n')
    assert info.value.line is not None


def test_sperner_violation_reported():
    with pytest.raises(io.ParseError):
        io.loads_edgelist("#bi\n4 0\n0 1\n0 1 2\n")
