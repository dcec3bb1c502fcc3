from __future__ import annotations

import pytest

from arcstab import catalog
from arcstab.action import arc_stabiliser, is_locally, local_group
from arcstab.constructions.wreath import (
    bipartite_base_pair,
    check_wreath_pair,
    wreath_arc_stabiliser_formula,
    wreath_order,
    wreath_pair,
    wreath_product,
)
from arcstab.permgroup import PermGroup, is_perm_isomorphic


@pytest.mark.parametrize("r, t", [("Z2", "Z2"), ("Z2", "S3"), ("Z3", "Z2"), ("S3", "Z2"), ("Z2", "Z3")])
def test_wreath_product_order(r, t):
    R, T = catalog.group(r), catalog.group(t)
    W = wreath_product(R, T)
    assert W.order() == wreath_order(R, T) == R.order() ** T.degree * T.order()
    assert W.is_transitive()


def test_wreath_products_match_catalog():
    Z2 = catalog.group("Z2")
    assert is_perm_isomorphic(wreath_product(Z2, catalog.group("Z2")), catalog.group("D4"))
    assert is_perm_isomorphic(wreath_product(Z2, catalog.group("S3")), catalog.group("2S4(6)"))
    assert is_perm_isomorphic(wreath_product(Z2, catalog.group("Z3")), catalog.group("2A4(6)"))


def test_wreath_rejects_intransitive():
    with pytest.raises(ValueError):
        wreath_product(PermGroup.trivial(2), catalog.group("S3"))


def test_bipartite_base_pair():
    pair = bipartite_base_pair(catalog.group("S3"))
    assert pair.arc_transitive and pair.group.order() == 72
    assert is_locally(pair, catalog.group("S3"))


@pytest.mark.parametrize("r, t", [("Z2", "S3"), ("Z3", "S3"), ("Z2", "Z3")])
def test_wreath_pair_formula(r, t):
    R, T = catalog.group(r), catalog.group(t)
    pair = wreath_pair(R, bipartite_base_pair(T))
    assert pair.arc_transitive
    res = check_wreath_pair(pair)
    assert res["ok"] and res["arc_stab"] == res["formula"]
    u, v = pair.graph.arcs()[0]
    assert arc_stabiliser(pair, u, v).order() == wreath_arc_stabiliser_formula(
        T.order() // T.degree, R.order(), R.degree, pair.graph.n
    )
    assert is_perm_isomorphic(local_group(pair, 0).group, wreath_product(R, T)) is not None


def test_formula_values():
    assert wreath_arc_stabiliser_formula(2, 2, 2, 12) == 64
    assert wreath_arc_stabiliser_formula(2, 2, 2, 192) == 2**96
    with pytest.raises(ValueError):
        wreath_arc_stabiliser_formula(1, 2, 3, 7)
