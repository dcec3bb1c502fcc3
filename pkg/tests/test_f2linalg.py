from __future__ import annotations

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from arcstab.f2linalg import (
    F2Matrix,
    F2Vector,
    adjacency_matrix,
    graph_nullspace,
    nullity,
    nullspace,
    rank,
    rref,
    satisfies_neighbour_sums,
    span_contains,
)
from arcstab.graphs import Graph, complete_bipartite, complete_graph, cycle, generalized_petersen, lcf_graph


def exhaustive_kernel(m: F2Matrix) -> set[int]:
    return {
        x for x in range(1 << m.ncols) if all(bin(row & x).count("1") % 2 == 0 for row in m.rows)
    }


def span(vectors: list[F2Vector]) -> set[int]:
    out = {0}
    for v in vectors:
        out |= {x ^ v.bits for x in out}
    return out


matrices = st.integers(1, 8).flatmap(
    lambda c: st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=1, max_size=8)
).map(F2Matrix.from_lists)


@settings(max_examples=80)
@given(matrices)
def test_nullspace_matches_enumeration(m):
    basis = nullspace(m)
    kernel = exhaustive_kernel(m)
    assert span(basis) == kernel
    assert len(kernel) == 2 ** len(basis)
    assert rank(m) + len(basis) == m.ncols


@given(matrices)
def test_rref_rank(m):
    r, rk, pivots = rref(m)
    assert rk == len(pivots) == rank(m)
    assert pivots == sorted(pivots)


def test_vector_ops():
    a = F2Vector.from_list([1, 0, 1, 1])
    b = F2Vector.from_list([1, 1, 0, 1])
    assert (a + b).to_list() == [0, 1, 1, 0]
    assert a.weight() == 3 and a[2] == 1 and not a.is_zero()
    assert span_contains([a, b], a + b)
    assert not span_contains([a], b)
    assert F2Matrix.identity(3).mul_vector(F2Vector.from_list([1, 0, 1])).to_list() == [1, 0, 1]


def test_known_nullities():
    assert nullity(complete_graph(4)) == 0
    assert nullity(complete_bipartite(3)) == 4
    assert nullity(generalized_petersen(5, 2)) == 4
    assert nullity(lcf_graph([5, -5], 7)) == 6
    assert nullity(cycle(4)) == 2
    # x_(i-1) + x_(i+1) = 0 forces period 2, so odd cycles keep only the all-ones vector
    assert nullity(cycle(5)) == 1
    assert nullity(cycle(6)) == 2


def test_graph_nullspace_vectors_satisfy_condition():
    g = complete_bipartite(3)
    basis = graph_nullspace(g)
    assert all(satisfies_neighbour_sums(g, x) for x in basis)
    assert adjacency_matrix(g).nrows == 6


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 12).flatmap(
    lambda n: st.lists(st.sampled_from(list(itertools.combinations(range(n), 2))), max_size=3 * n).map(
        lambda es: Graph(n, set(es))
    )
))
def test_graph_nullspace_exhaustive(graph):
    sols = [
        x for x in range(1 << graph.n)
        if satisfies_neighbour_sums(graph, F2Vector(graph.n, x))
    ]
    assert len(sols) == 2 ** nullity(graph)
    assert span(graph_nullspace(graph)) == set(sols)
