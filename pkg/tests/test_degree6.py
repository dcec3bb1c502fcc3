from __future__ import annotations

import pytest

from arcstab import catalog
from arcstab.action import arc_stabiliser, is_locally
from arcstab.constructions.degree6 import (
    HypothesisError,
    SandwichError,
    all_hg_pairs,
    check_hypotheses,
    degree6_embeddings,
    degree6_pair,
    embed_automorphism,
    embed_vector,
    find_hg_pair,
    sandwich_subgroup,
)
from arcstab.f2linalg import F2Vector
from arcstab.graphs import (
    Graph,
    automorphism_search,
    complete_graph,
    cycle,
    edgeless_lex_product,
    is_automorphism,
)
from arcstab.permgroup import PermGroup


@pytest.fixture(scope="module")
def k33():
    return catalog.get_graph("K33").graph


@pytest.fixture(scope="module")
def k33_hg(k33):
    pairs = all_hg_pairs(k33)
    assert pairs
    return pairs[0]


def test_oracle_counts(k33):
    pairs = all_hg_pairs(k33)
    assert len(pairs) == 2
    for H, G in pairs:
        assert H.order() == 18 and G.order() == 36
        check_hypotheses(k33, H, G)


def test_oracle_finds_nothing_on_petersen():
    assert all_hg_pairs(catalog.get_graph("Petersen").graph) == []


def test_find_hg_pair(k33):
    found = find_hg_pair(k33, seed=3)
    assert found is not None
    H, G = found
    check_hypotheses(k33, H, G)


def test_embeddings_are_automorphisms(k33):
    lam = edgeless_lex_product(k33, 2)
    for g in automorphism_search(k33).generators:
        assert is_automorphism(lam, embed_automorphism(g))
    x = F2Vector.from_list([1, 0, 1, 1, 0, 0])
    assert is_automorphism(lam, embed_vector(x))


def test_hypothesis_errors(k33, k33_hg):
    H, G = k33_hg
    with pytest.raises(HypothesisError) as exc:
        check_hypotheses(cycle(6), PermGroup.trivial(6), PermGroup.trivial(6))
    assert exc.value.code == "not-cubic"
    with pytest.raises(HypothesisError) as exc:
        check_hypotheses(k33, G, G)
    assert exc.value.code == "H-not-arc-regular"
    with pytest.raises(HypothesisError) as exc:
        check_hypotheses(k33, H, H)
    assert exc.value.code == "G-not-2-arc-regular"
    disconnected = Graph(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (6, 7)])
    with pytest.raises(HypothesisError) as exc:
        check_hypotheses(disconnected, H, G)
    assert exc.value.code == "not-connected"
    K4 = complete_graph(4)
    X = automorphism_search(K4)
    pairs = all_hg_pairs(K4, X)
    H4, G4 = pairs[0]
    with pytest.raises(HypothesisError) as exc:
        check_hypotheses(K4, H4, G4)
    assert exc.value.code == "trivial-nullspace"


def test_local_structure(k33, k33_hg):
    H, G = k33_hg
    setup = degree6_embeddings(k33, G, H)
    assert setup.A.order() == 2 * setup.M_order * G.order()
    assert setup.local(setup.A).same_group(catalog.group("2S4(6)"))
    assert setup.local(setup.B).same_group(catalog.group("A4(6)"))


@pytest.mark.parametrize("name", catalog.intermediate_names())
def test_pair_for_each_local_group(k33, k33_hg, name):
    H, G = k33_hg
    L = catalog.group(name)
    pair = degree6_pair(k33, H, G, L)
    u = pair.meta["base_vertex"]
    assert is_locally(pair, L, u)
    got = arc_stabiliser(pair, u, pair.graph.neighbours(u)[0]).order()
    assert got * 48 == pair.meta["setup"].M_order * L.order()


def test_sandwich_rejects_outside_groups(k33, k33_hg):
    H, G = k33_hg
    setup = degree6_embeddings(k33, G, H)
    with pytest.raises(SandwichError):
        sandwich_subgroup(setup.A, setup.B, setup.tilde_v, setup.labels, catalog.group("S3wrZ2"))
    with pytest.raises(SandwichError):
        sandwich_subgroup(setup.A, setup.B, setup.tilde_v, setup.labels, catalog.group("S3"))


def test_trivial_sandwich_full_group(k33):
    setup = degree6_embeddings(k33, automorphism_search(k33), check=False)
    C = sandwich_subgroup(setup.A, setup.B, setup.tilde_v, setup.labels, setup.local(setup.A))
    assert C.same_group(setup.A)
