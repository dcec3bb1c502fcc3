from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcstab import catalog
from arcstab.constructions.wreath import bipartite_base_pair
from arcstab.perm import Permutation
from arcstab.permgroup import PermGroup
from arcstab.report import (
    CSV_COLUMNS,
    analyze_pair,
    growth_trend,
    is_decreasing,
    is_increasing,
    name_local_group,
    read_growth_csv,
    reports_to_csv,
)


def test_analyze_base_pair():
    pair = bipartite_base_pair(catalog.group("S3"))
    rep = analyze_pair(pair, "base", "T=S3")
    assert (rep.n, rep.valency, rep.group_order, rep.vertex_stab, rep.arc_stab) == (6, 3, 72, 12, 4)
    assert rep.local_group == "S3"
    assert rep.aut_order == 72
    assert rep.ok and all(rep.checks.values())
    assert "ok: True" in rep.text()


def test_csv_columns():
    rep = analyze_pair(bipartite_base_pair(catalog.group("S3")))
    text = reports_to_csv([rep])
    header, row = text.strip().splitlines()
    assert header.split(",") == CSV_COLUMNS
    assert row.endswith(",true")
    assert read_growth_csv(text) == [(6, 4)]


def test_failed_extra_check_marks_not_ok():
    rep = analyze_pair(bipartite_base_pair(catalog.group("S3")), extra_checks={"forced": False})
    assert not rep.ok
    assert "[FAIL] forced" in rep.text()


def test_name_local_group_unknown():
    G = PermGroup([Permutation(list(range(1, 8)) + [0])], 8)
    assert name_local_group(G) == "order 8 degree 8"


def test_growth_verdicts():
    cons = growth_trend([(10, 4), (20, 4), (40, 4)])
    assert cons.verdict == "Cons-like"
    exp = growth_trend([(8, 4), (16, 64), (24, 1024)])
    assert exp.verdict == "Exp-like"
    pol = growth_trend([(12, 4), (54, 8), (216, 16), (810, 32)])
    assert pol.verdict == "Pol-like"
    assert "not a proof" in pol.text()
    with pytest.raises(ValueError):
        growth_trend([(4, 2)])


def test_growth_csv_needs_columns():
    with pytest.raises(ValueError):
        read_growth_csv("a,b\n1,2\n")


@given(st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=0, max_size=8))
def test_monotone_helpers(xs):
    inc = sorted(set(xs))
    assert is_increasing(inc)
    assert is_decreasing(inc[::-1])
    if len(inc) >= 2:
        assert not is_increasing(inc[::-1])


def test_polynomial_slope():
    pts = [(n, n**2) for n in (10, 20, 40, 80)]
    assert math.isclose(growth_trend(pts).loglog_slope, 2.0)
