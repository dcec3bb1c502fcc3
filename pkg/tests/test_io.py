from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcstab import catalog
from arcstab.constructions.wreath import bipartite_base_pair
from arcstab.io import FormatError, format_graph, format_group, parse_graph, parse_group, read_pair, write_pair
from arcstab.permgroup import PermGroup
from strategies import perm_lists


def test_graph_roundtrip():
    g = catalog.get_graph("Petersen").graph
    assert parse_graph(format_graph(g)) == g


@settings(max_examples=30, deadline=None)
@given(perm_lists(max_degree=8), st.booleans())
def test_group_roundtrip(data, cycles):
    n, gens = data
    G = PermGroup(gens, n)
    back = parse_group(format_group(G, cycles=cycles))
    assert back.degree == n
    assert list(back.generators) == list(G.generators)


@pytest.mark.parametrize(
    "text",
    ["", "3\n0 1\n", "3 2\n0 1\n", "3 1\n1 0\n", "3 1\n0 5\n", "3 1\nx y\n"],
)
def test_bad_graph_files(text):
    with pytest.raises(FormatError):
        parse_graph(text)


@pytest.mark.parametrize(
    "text",
    ["", "4\n0 1 2 3\n", "degree x\n", "degree 3\n0 0 1\n", "degree 3\n0 1 2 3\n", "degree 3\ncycles: 0 1\n"],
)
def test_bad_group_files(text):
    with pytest.raises(FormatError):
        parse_group(text)


def test_comments_are_ignored():
    g = parse_graph("# K2\n2 1\n0 1\n")
    assert g.num_edges() == 1
    G = parse_group("degree 3\n# a 3-cycle\ncycles: (0 1 2)\n")
    assert G.order() == 3


def test_pair_bundle_roundtrip(tmp_path):
    pair = bipartite_base_pair(catalog.group("S3"))
    path = write_pair(pair, tmp_path / "sub" / "k33", {"construction": "base"})
    meta = json.loads(path.read_text())
    assert meta["graph"] == "k33.graph" and meta["construction"] == "base"
    back, meta2 = read_pair(tmp_path / "sub" / "k33")
    assert back.graph == pair.graph
    assert back.group.same_group(pair.group)
    assert back.meta["local_group"].same_group(catalog.group("S3"))
    assert meta2 == meta


def test_bad_pair_json(tmp_path):
    (tmp_path / "x.pair").write_text("{not json")
    with pytest.raises(FormatError):
        read_pair(tmp_path / "x.pair")
