"""Imprimitive wreath products and the pairs built from them."""

from __future__ import annotations

from ..action import Pair, arc_stabiliser
from ..graphs import complete_bipartite, edgeless_lex_product
from ..perm import Permutation
from ..permgroup import PermGroup


def _base_copy(r: Permutation, m: int, fibre: int, fibres: int) -> Permutation:
    img = list(range(m * fibres))
    off = m * fibre
    for d in range(m):
        img[off + d] = off + r[d]
    return Permutation._raw(tuple(img))


def _top(t: Permutation, m: int) -> Permutation:
    return Permutation._raw(tuple(m * t[w] + d for w in range(t.degree) for d in range(m)))


def wreath_product(R: PermGroup, T: PermGroup) -> PermGroup:
    """R wr T on Delta x Omega, point (delta, omega) at index |Delta|*omega + delta."""
    if not R.is_transitive() or not T.is_transitive():
        raise ValueError("wreath product factors must be transitive")
    m, k = R.degree, T.degree
    gens = [_base_copy(r, m, w, k) for w in range(k) for r in R.generators]
    gens += [_top(t, m) for t in T.generators]
    return PermGroup(gens, m * k)


def wreath_order(R: PermGroup, T: PermGroup) -> int:
    return R.order() ** T.degree * T.order()


def bipartite_base_pair(T: PermGroup) -> Pair:
    """K_{k,k} with (T x T) : S_2; part 0 is {0..k-1}, part 1 is {k..2k-1}."""
    if not T.is_transitive():
        raise ValueError("T must be transitive")
    k = T.degree
    gens = []
    for t in T.generators:
        gens.append(Permutation._raw(tuple(t.images) + tuple(range(k, 2 * k))))
        gens.append(Permutation._raw(tuple(range(k)) + tuple(k + x for x in t.images)))
    gens.append(Permutation._raw(tuple(range(k, 2 * k)) + tuple(range(k))))
    pair = Pair(complete_bipartite(k), PermGroup(gens, 2 * k), label=f"bipartite-base(k={k})")
    pair.meta["local_group"] = T
    return pair


def wreath_pair(R: PermGroup, base: Pair) -> Pair:
    """base.graph[mK1] with R wr H: one copy of R per fibre, H permuting fibres.

    Vertex (delta, v) has index m*v + delta.
    """
    if not R.is_transitive():
        raise ValueError("R must be transitive")
    if not base.arc_transitive:
        raise ValueError("base pair must be arc-transitive")
    m = R.degree
    n = base.graph.n
    lam = edgeless_lex_product(base.graph, m)
    gens = [_base_copy(r, m, v, n) for v in range(n) for r in R.generators]
    gens += [_top(h, m) for h in base.group.generators]
    pair = Pair(lam, PermGroup(gens, m * n), label=f"wreath(m={m}, {base.label})")
    T = base.meta.get("local_group")
    if T is not None:
        pair.meta["local_group"] = wreath_product(R, T)
    pair.meta["base"] = base
    pair.meta["R"] = R
    return pair


def wreath_arc_stabiliser_formula(T_point_stab: int, R_order: int, m: int, n: int) -> int:
    """|T_w|^2 |R|^(n/m) / m^2, with n the vertex count of the lexicographic product."""
    num = T_point_stab**2 * R_order ** (n // m)
    if n % m or num % (m * m):
        raise ValueError("formula does not yield an integer for these parameters")
    return num // (m * m)


def check_wreath_pair(pair: Pair) -> dict:
    """Exact arc-stabiliser order next to the closed form."""
    base: Pair = pair.meta["base"]
    R: PermGroup = pair.meta["R"]
    T = base.meta.get("local_group")
    u, v = pair.graph.arcs()[0]
    got = arc_stabiliser(pair, u, v).order()
    t_stab = T.order() // T.degree if T is not None else None
    expected = None
    if t_stab is not None:
        expected = wreath_arc_stabiliser_formula(t_stab, R.order(), R.degree, pair.graph.n)
    return {"arc_stab": got, "formula": expected, "ok": expected is None or got == expected}
