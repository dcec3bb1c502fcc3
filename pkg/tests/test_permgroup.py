from __future__ import annotations

import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcstab.perm import Permutation
from arcstab.permgroup import (
    BlockSystem,
    GroupTooLargeError,
    PermGroup,
    UndecidedError,
    brute_force_isomorphism,
    closure_order,
    has_two_block_system,
    is_perm_isomorphic,
    is_primitive,
    minimal_block,
    two_block_systems,
)
from strategies import perm_lists


def cyc(text: str, n: int) -> Permutation:
    return Permutation.parse_cycles(text, n)


def symmetric(n: int) -> PermGroup:
    if n == 1:
        return PermGroup.trivial(1)
    return PermGroup([cyc("(" + " ".join(map(str, range(n))) + ")", n), cyc("(0 1)", n)], n)


def closure(G: PermGroup) -> set[Permutation]:
    seen = {Permutation.identity(G.degree)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for e in frontier:
            for g in G.generators:
                h = e * g
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


@pytest.mark.parametrize("n, order", [(1, 1), (2, 2), (3, 6), (5, 120), (7, 5040)])
def test_symmetric_orders(n, order):
    assert symmetric(n).order() == order


def test_large_degree_order():
    # S_2 wr S_48 acting on 96 points has order 2^48 * 48!
    n = 96
    gens = [cyc("(0 1)", n)]
    shift = [(x + 2) % n for x in range(n)]
    swap = list(range(n))
    swap[0], swap[1], swap[2], swap[3] = 2, 3, 0, 1
    G = PermGroup(gens + [Permutation(shift), Permutation(swap)], n)
    assert G.order() == 2**48 * math.factorial(48)


@settings(max_examples=60, deadline=None)
@given(perm_lists(max_degree=6))
def test_order_and_membership_match_closure(data):
    n, gens = data
    G = PermGroup(gens, n)
    elems = closure(G)
    assert G.order() == len(elems)
    assert closure_order(gens, n) == len(elems)
    for p in itertools.islice(itertools.permutations(range(n)), 200):
        p = Permutation(p)
        assert G.contains(p) == (p in elems)


@settings(max_examples=40, deadline=None)
@given(perm_lists(max_degree=6), st.integers(0, 5))
def test_stabilisers_match_closure(data, point):
    n, gens = data
    point %= n
    G = PermGroup(gens, n)
    elems = closure(G)
    stab = {g for g in elems if g[point] == point}
    assert G.point_stabiliser(point).order() == len(stab)
    assert set(G.point_stabiliser(point).elements()) == stab
    orbit = {g[point] for g in elems}
    assert G.orbit(point) == orbit
    pts = [point, (point + 1) % n]
    assert G.pointwise_stabiliser(pts).order() == sum(1 for g in elems if all(g[x] == x for x in pts))


@settings(max_examples=30, deadline=None)
@given(perm_lists(max_degree=6), st.integers(0, 10**6))
def test_conjugate_and_subgroup(data, seed):
    n, gens = data
    G = PermGroup(gens, n)
    rng = random.Random(seed)
    sigma = Permutation(rng.sample(range(n), n))
    Gs = G.conjugate(sigma)
    assert Gs.order() == G.order()
    assert all(Gs.contains(g**sigma) for g in G.generators)
    H = PermGroup(gens[:1], n)
    assert H.is_subgroup_of(G)
    assert G.random_element(rng) in set(G.elements())


def test_element_cap_env(monkeypatch):
    monkeypatch.setenv("ARCSTAB_ELEM_CAP", "10")
    with pytest.raises(GroupTooLargeError):
        symmetric(5).elements()


def test_block_systems():
    d6 = PermGroup([cyc("(0 1 2 3 4 5)", 6), cyc("(1 5)(2 4)", 6)], 6)
    systems = two_block_systems(d6)
    assert BlockSystem(((0, 2, 4), (1, 3, 5))) in systems
    assert has_two_block_system(d6) == systems[0]
    assert minimal_block(d6, (0, 3)).cells == ((0, 3), (1, 4), (2, 5))
    assert not is_primitive(d6)
    assert is_primitive(symmetric(5))
    assert has_two_block_system(symmetric(6)) is None
    assert has_two_block_system(PermGroup([cyc("(0 1 2)", 3)], 3)) is None


def test_two_block_search_bound():
    with pytest.raises(UndecidedError):
        two_block_systems(PermGroup([cyc("(" + " ".join(map(str, range(18))) + ")", 18)], 18))


def test_restrict_relabels_by_position():
    G = PermGroup([cyc("(0 1)(2 3)", 4)], 4)
    R = G.restrict([2, 3])
    assert R.degree == 2 and R.order() == 2


@settings(max_examples=40, deadline=None)
@given(perm_lists(min_degree=2, max_degree=5, max_gens=2), st.integers(0, 10**6), st.booleans())
def test_isomorphism_matches_brute_force(data, seed, conjugated):
    n, gens = data
    G = PermGroup(gens, n)
    rng = random.Random(seed)
    if conjugated:
        H = G.conjugate(Permutation(rng.sample(range(n), n)))
    else:
        H = PermGroup([Permutation(rng.sample(range(n), n))], n)
    fast = is_perm_isomorphic(G, H)
    slow = brute_force_isomorphism(G, H)
    assert (fast is None) == (slow is None)
    if fast is not None:
        assert G.conjugate(fast).same_group(H)


def test_same_group_distinguishes():
    a = PermGroup([cyc("(0 1 2 3)", 4)], 4)
    b = PermGroup([cyc("(0 2 1 3)", 4)], 4)
    assert not a.same_group(b)
    assert is_perm_isomorphic(a, b) is not None
