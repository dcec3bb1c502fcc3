from __future__ import annotations

import pytest

from arcstab import catalog
from arcstab.f2linalg import nullity
from arcstab.graphs import automorphism_search
from arcstab.perm import Permutation
from arcstab.permgroup import PermGroup, has_two_block_system, is_perm_isomorphic


@pytest.mark.parametrize("name", catalog.names())
def test_entries_verify(name):
    catalog.get(name).verify()


@pytest.mark.parametrize("name", catalog.names())
def test_declared_tag_matches_classifier(name):
    entry = catalog.get(name)
    assert catalog.classify_group(entry.group) == entry.graph_type


@pytest.mark.parametrize("entry", catalog.graph_entries(), ids=lambda e: e.name)
def test_graph_entries(entry):
    g = entry.graph
    assert g.is_connected() and g.valency() == 3
    assert automorphism_search(g).order() == entry.aut_order
    assert nullity(g) == entry.nullity


def test_aliases_and_unknown():
    assert catalog.get("Z2wrZ2").name == "D4"
    assert catalog.get("S4(6d)").name == "S4(6d*)"
    assert catalog.get_graph("K3,3").name == "K33"
    with pytest.raises(catalog.UnknownEntryError):
        catalog.get("M11")
    with pytest.raises(catalog.UnknownEntryError):
        catalog.get_graph("Coxeter")


def test_intermediates_are_sandwiched():
    lo, hi = catalog.group("A4(6)"), catalog.group("2S4(6)")
    for name in catalog.intermediate_names():
        L = catalog.group(name)
        assert lo.is_subgroup_of(L) and L.is_subgroup_of(hi)
        assert has_two_block_system(L) is None
    orders = sorted(catalog.group(n).order() for n in catalog.intermediate_names())
    assert orders == [12, 24, 24, 24, 48]


def test_intermediates_pairwise_non_isomorphic():
    names = ["2A4(6)", "S4(6d*)", "S4(6c*)"]
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            assert is_perm_isomorphic(catalog.group(a), catalog.group(b)) is None


def test_classification_reasons():
    tag, reason = catalog.classify_with_reason(catalog.group("2S4(6)"))
    assert tag == catalog.EXP and "S3" in reason
    tag, reason = catalog.classify_with_reason(catalog.group("2A4(6)"))
    assert tag == catalog.EXP and "Z3" in reason
    # a relabelled D6 is still Pol
    D6 = catalog.group("D6").conjugate(Permutation([3, 0, 5, 1, 2, 4]))
    assert catalog.classify_group(D6) == catalog.POL


def test_classification_limits():
    with pytest.raises(catalog.UnsupportedDegreeError):
        catalog.classify_group(PermGroup([Permutation(list(range(1, 8)) + [0])], 8))
    with pytest.raises(ValueError):
        catalog.classify_group(PermGroup([Permutation([1, 0, 2])], 3))
