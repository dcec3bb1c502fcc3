"""Locally-L pairs on Gamma[2K1] for the five degree-6 groups A4(6) <= L <= 2S4(6).

Gamma is a connected cubic graph with nontrivial F2-nullspace M. Vertex (a, v)
of Lambda = Gamma[2K1] has index 2v + a. Automorphisms g of Gamma act as
(a, v) -> (a, g(v)); vectors x act as (a, v) -> (a + x(v), v).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .. import catalog
from ..action import Pair, arc_stabiliser, is_arc_regular
from ..f2linalg import F2Vector, graph_nullspace
from ..graphs import Graph, automorphism_search, edgeless_lex_product, is_automorphism
from ..perm import Permutation
from ..permgroup import PermGroup


class HypothesisError(ValueError):
    """An input violates a hypothesis of the construction; ``code`` names which."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(f"{code}: {message}")


class SandwichError(ValueError):
    pass


def embed_automorphism(g: Permutation) -> Permutation:
    return Permutation._raw(tuple(2 * g[v] + a for v in range(g.degree) for a in (0, 1)))


def embed_vector(x: F2Vector) -> Permutation:
    return Permutation._raw(tuple(2 * v + (a ^ x[v]) for v in range(x.n) for a in (0, 1)))


def _local(group: PermGroup, vertex: int, labels: tuple[int, ...]) -> PermGroup:
    return group.point_stabiliser(vertex).restrict(labels)


@dataclass(eq=False)
class Degree6Setup:
    graph: Graph
    lam: Graph
    v: int
    tilde_v: int
    labels: tuple[int, ...]        # labels[i] = Lambda vertex carrying neighbour label i
    M_basis: list[F2Vector]
    G: PermGroup
    H: PermGroup
    A: PermGroup
    B: PermGroup
    M_order: int

    def local(self, group: PermGroup) -> PermGroup:
        return _local(group, self.tilde_v, self.labels)


def _three_cycle(Hv: PermGroup, nbrs: tuple[int, ...]) -> Permutation:
    """Element of Hv cycling the neighbours as s -> t -> u with s, t the two smallest."""
    s, t, _ = nbrs
    for g in Hv.elements():
        if g[s] == t and g[t] != s:
            return g
    raise HypothesisError("no-3-cycle", "the vertex stabiliser does not cycle the neighbourhood")


def neighbour_labels(graph: Graph, Hv: PermGroup, v: int) -> tuple[int, ...]:
    """Lambda vertices labelled 0..5: (0,s),(1,s),(0,t),(1,t),(0,u),(1,u) get 0,3,2,5,4,1."""
    nbrs = graph.neighbours(v)
    c = _three_cycle(Hv, nbrs)
    s = nbrs[0]
    t = c[s]
    u = c[t]
    lab = [0] * 6
    for (a, w), label in zip(((0, s), (1, s), (0, t), (1, t), (0, u), (1, u)), (0, 3, 2, 5, 4, 1)):
        lab[label] = 2 * w + a
    return tuple(lab)


def check_hypotheses(graph: Graph, H: PermGroup, G: PermGroup) -> list[F2Vector]:
    if not graph.is_connected():
        raise HypothesisError("not-connected", "graph is not connected")
    if not graph.is_regular() or graph.valency() != 3:
        raise HypothesisError("not-cubic", "graph is not cubic")
    for name, grp in (("H", H), ("G", G)):
        if grp.degree != graph.n or not all(is_automorphism(graph, g) for g in grp.generators):
            raise HypothesisError("not-automorphisms", f"{name} is not a group of automorphisms")
    if not is_arc_regular(Pair(graph, H)):
        raise HypothesisError("H-not-arc-regular", f"|H| = {H.order()}, arcs = {graph.num_arcs()}")
    gp = Pair(graph, G)
    if not (gp.two_arc_transitive and G.order() == graph.num_two_arcs()):
        raise HypothesisError("G-not-2-arc-regular", f"|G| = {G.order()}, 2-arcs = {graph.num_two_arcs()}")
    if not H.is_subgroup_of(G):
        raise HypothesisError("H-not-in-G", "H is not a subgroup of G")
    basis = graph_nullspace(graph)
    if not basis:
        raise HypothesisError("trivial-nullspace", "the F2-nullspace is trivial")
    return basis


def degree6_embeddings(
    graph: Graph,
    G: PermGroup,
    H: PermGroup | None = None,
    M_basis: list[F2Vector] | None = None,
    v: int = 0,
    check: bool = True,
) -> Degree6Setup:
    """A = <N, G> and B = <M, H> on Gamma[2K1], N = <1> + M.

    With ``check`` the full hypotheses are enforced and the local structure
    (B-local = <a,e>, A-local = <f,a,b> under the neighbour labelling) is
    asserted. Without it, H defaults to G and only B <= A is required.
    """
    if H is None:
        H = G
    if check:
        M_basis = check_hypotheses(graph, H, G)
    elif M_basis is None:
        M_basis = graph_nullspace(graph)
    if not M_basis:
        raise HypothesisError("trivial-nullspace", "the F2-nullspace is trivial")
    n = graph.n
    lam = edgeless_lex_product(graph, 2)
    m_gens = [embed_vector(x) for x in M_basis]
    one = embed_vector(F2Vector.ones(n))
    g_gens = [embed_automorphism(g) for g in G.generators]
    h_gens = [embed_automorphism(g) for g in H.generators]
    A = PermGroup([one] + m_gens + g_gens, 2 * n)
    B = PermGroup(m_gens + h_gens, 2 * n)
    M_order = 2 ** len(M_basis)
    if A.order() != 2 * M_order * G.order():
        raise AssertionError(f"|A| = {A.order()} but 2|M||G| = {2 * M_order * G.order()}")
    if not B.is_subgroup_of(A):
        raise AssertionError("B is not contained in A")
    labels = neighbour_labels(graph, H.point_stabiliser(v), v)
    setup = Degree6Setup(graph, lam, v, 2 * v, labels, M_basis, G, H, A, B, M_order)
    if check:
        if not all(B.contains(b ** x) for b in B.generators for x in A.generators):
            raise AssertionError("B is not normal in A")
        _assert_local_structure(setup, one, m_gens)
    return setup


def _assert_local_structure(setup: Degree6Setup, one: Permutation, m_gens: list[Permutation]) -> None:
    a, b, e, f = catalog.a6, catalog.b6, catalog.e6, catalog.f6
    M = PermGroup(m_gens, setup.lam.n)
    N = PermGroup([one] + m_gens, setup.lam.n)
    expected = {
        "M-local = <e, e^a>": (M, PermGroup([e, e ** a])),
        "N-local = <f, f^a, f^a^2>": (N, PermGroup([f, f ** a, f ** (a * a)])),
        "B-local = A4(6)": (setup.B, catalog.group("A4(6)")),
        "A-local = 2S4(6)": (setup.A, catalog.group("2S4(6)")),
    }
    for name, (grp, target) in expected.items():
        if not setup.local(grp).same_group(target):
            raise AssertionError(f"local structure check failed: {name}")


def _align(L: PermGroup, lower: PermGroup, upper: PermGroup) -> PermGroup:
    """A relabelling of L squeezed between lower and upper, trying the identity first."""
    if lower.is_subgroup_of(L) and L.is_subgroup_of(upper):
        return L
    for images in itertools.permutations(range(L.degree)):
        Ls = L.conjugate(Permutation._raw(images))
        if lower.is_subgroup_of(Ls) and Ls.is_subgroup_of(upper):
            return Ls
    raise SandwichError("no relabelling of L lies between the local groups of B and A")


def sandwich_subgroup(
    A: PermGroup,
    B: PermGroup,
    tilde_v: int,
    labels: tuple[int, ...],
    L: PermGroup,
) -> PermGroup:
    """C = B * pi^-1(L), where pi maps A_v to its action on the labelled neighbours."""
    if L.degree != len(labels):
        raise SandwichError(f"L has degree {L.degree}, expected {len(labels)}")
    upper = _local(A, tilde_v, labels)
    lower = _local(B, tilde_v, labels)
    Ls = _align(L, lower, upper)
    pos = {x: i for i, x in enumerate(labels)}
    gens = list(B.generators)
    C = PermGroup(gens, A.degree)
    for g in A.point_stabiliser(tilde_v).elements():
        image = Permutation._raw(tuple(pos[g[x]] for x in labels))
        if Ls.contains(image) and not C.contains(g):
            gens.append(g)
            C = PermGroup(gens, A.degree)
    if not (B.is_subgroup_of(C) and C.is_subgroup_of(A)):
        raise AssertionError("sandwich C does not satisfy B <= C <= A")
    if not _local(C, tilde_v, labels).same_group(Ls):
        raise AssertionError("local group of C is not L")
    return C


def degree6_pair(graph: Graph, H: PermGroup, G: PermGroup, L: PermGroup) -> Pair:
    """Locally-L pair (Gamma[2K1], C) with |C_uv| = |M||L|/48."""
    setup = degree6_embeddings(graph, G, H, check=True)
    C = sandwich_subgroup(setup.A, setup.B, setup.tilde_v, setup.labels, L)
    pair = Pair(setup.lam, C, label=f"degree6(n={graph.n}, |L|={L.order()})")
    u = setup.tilde_v
    w = setup.labels[0]
    got = arc_stabiliser(pair, u, w).order()
    expected = setup.M_order * L.order() // 48
    if got * 48 != setup.M_order * L.order():
        raise AssertionError(f"|C_uv| = {got}, expected |M||L|/48 = {expected}")
    pair.meta.update(construction="degree6", local_group=L, arc_stab=got, expected_arc_stab=expected,
                     setup=setup, base_vertex=u)
    return pair


# subgroup-search oracle -----------------------------------------------------------

def _is_two_arc_regular(graph: Graph, G: PermGroup) -> bool:
    return G.order() == graph.num_two_arcs() and Pair(graph, G).two_arc_transitive


def _is_arc_regular(graph: Graph, H: PermGroup) -> bool:
    return H.order() == graph.num_arcs() and Pair(graph, H).arc_transitive


def _key(G: PermGroup) -> frozenset:
    return frozenset(G.elements())


def _reversers(X: PermGroup, u: int, w: int) -> list[Permutation]:
    return [g for g in X.elements() if g[u] == w and g[w] == u]


def _two_arc_regular_subgroups(graph: Graph, X: PermGroup) -> list[PermGroup]:
    nbrs = graph.neighbours(0)
    X0 = X.point_stabiliser(0)
    elems = X0.elements()
    threes = [g for g in elems if g.order() == 3]
    twos = [g for g in elems if g.order() == 2]
    stabs, seen = [], set()
    for x in threes:
        for y in twos:
            S = PermGroup([x, y], graph.n)
            if S.order() == 6 and S.restrict(nbrs).order() == 6:
                key = _key(S)
                if key not in seen:
                    seen.add(key)
                    stabs.append(S)
    out, found = [], set()
    rev = _reversers(X, 0, nbrs[0])
    for S in stabs:
        for g in rev:
            G = PermGroup(S.generators + [g], graph.n)
            if _is_two_arc_regular(graph, G):
                key = _key(G)
                if key not in found:
                    found.add(key)
                    out.append(G)
    return out


def _arc_regular_subgroups(graph: Graph, G: PermGroup) -> list[PermGroup]:
    nbrs = graph.neighbours(0)
    threes = [g for g in G.point_stabiliser(0).elements() if g.order() == 3]
    if not threes:
        return []
    out, found = [], set()
    for g in _reversers(G, 0, nbrs[0]):
        H = PermGroup([threes[0], g], graph.n)
        if _is_arc_regular(graph, H):
            key = _key(H)
            if key not in found:
                found.add(key)
                out.append(H)
    return out


def all_hg_pairs(graph: Graph, aut: PermGroup | None = None, cap: int = 2000) -> list[tuple[PermGroup, PermGroup]]:
    """Every (H, G) with H <= G <= Aut, H arc-regular and G 2-arc-regular (exhaustive)."""
    X = aut if aut is not None else automorphism_search(graph)
    if X.order() > cap:
        raise ValueError(f"|Aut| = {X.order()} exceeds the exhaustive search cap {cap}")
    out = []
    for G in _two_arc_regular_subgroups(graph, X):
        for H in _arc_regular_subgroups(graph, G):
            out.append((H, G))
    return out


def find_hg_pair(
    graph: Graph,
    aut: PermGroup | None = None,
    seed: int = 0,
    tries: int = 200,
    cap: int = 2000,
) -> tuple[PermGroup, PermGroup] | None:
    """Random two-generator subgroups first, then the exhaustive search."""
    X = aut if aut is not None else automorphism_search(graph)
    rng = random.Random(seed)
    n = graph.n
    if X.order() % (6 * n) == 0:
        for _ in range(tries):
            G = PermGroup([X.random_element(rng), X.random_element(rng)], n)
            if not _is_two_arc_regular(graph, G):
                continue
            for _ in range(tries):
                H = PermGroup([G.random_element(rng), G.random_element(rng)], n)
                if _is_arc_regular(graph, H):
                    return H, G
    if X.order() > cap:
        return None
    pairs = all_hg_pairs(graph, X, cap)
    return pairs[0] if pairs else None
