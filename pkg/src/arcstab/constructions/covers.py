"""Homological 2-covers (voltage group (Z/2)^beta) and lifting automorphism groups.

Cover vertex (v, x), x a beta-bit mask, has index v * 2**beta + x.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..action import Pair, is_automorphism
from ..graphs import Graph
from ..perm import Permutation
from ..permgroup import PermGroup


class LiftError(RuntimeError):
    pass


@dataclass(eq=False)
class VoltageCover:
    base: Graph
    tree_edges: frozenset          # frozenset({u, v}) per spanning-tree edge
    cotree: list[tuple[int, int]]  # j-th cotree edge carries voltage 1 << j
    parent: list[int]              # BFS tree parent, -1 at the root
    graph: Graph

    @property
    def beta(self) -> int:
        return len(self.cotree)

    @property
    def fibre(self) -> int:
        return 1 << self.beta

    def voltage(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return 1 << self._cotree_index[key]
        except KeyError:
            return 0

    def __post_init__(self):
        self._cotree_index = {e: j for j, e in enumerate(self.cotree)}

    def tree_path(self, v: int) -> list[int]:
        """Vertices on the tree path from the root to v."""
        path = [v]
        while self.parent[path[-1]] != -1:
            path.append(self.parent[path[-1]])
        return path[::-1]

    def walk_voltage(self, walk: list[int]) -> int:
        x = 0
        for a, b in zip(walk, walk[1:]):
            x ^= self.voltage(a, b)
        return x

    def projection(self, cover_vertex: int) -> int:
        return cover_vertex >> self.beta

    def index(self, v: int, x: int) -> int:
        return (v << self.beta) | x


def homological_2cover(graph: Graph) -> VoltageCover:
    """Cover with one independent Z/2 voltage on every cotree edge of a BFS tree from 0."""
    if not graph.is_connected():
        raise ValueError("homological cover needs a connected graph")
    n = graph.n
    parent = [-1] * n
    seen = [False] * n
    seen[0] = True
    queue = [0]
    tree = set()
    for x in queue:
        for y in graph.adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                tree.add(frozenset((x, y)))
                queue.append(y)
    cotree = [e for e in graph.edges() if frozenset(e) not in tree]
    beta = len(cotree)
    idx = {e: j for j, e in enumerate(cotree)}
    edges = []
    for u, v in graph.edges():
        z = 1 << idx[(u, v)] if (u, v) in idx else 0
        for x in range(1 << beta):
            edges.append(((u << beta) | x, (v << beta) | (x ^ z)))
    cover_graph = Graph(n << beta, edges)
    return VoltageCover(graph, frozenset(tree), cotree, parent, cover_graph)


def _image_walk(g: Permutation, walk: list[int]) -> list[int]:
    return [g[x] for x in walk]


def lift_automorphism(cover: VoltageCover, g: Permutation) -> Permutation:
    """(v, x) -> (g(v), g*(x) + d_g(v)).

    g* sends the voltage of the j-th fundamental cycle to the voltage of its
    image; d_g(v) is the voltage of the image of the tree path root -> v.
    """
    beta = cover.beta
    star = []
    for a, b in cover.cotree:
        cyc = cover.tree_path(a) + cover.tree_path(b)[::-1]
        star.append(cover.walk_voltage(_image_walk(g, cyc)))
    offsets = [cover.walk_voltage(_image_walk(g, cover.tree_path(v))) for v in range(cover.base.n)]
    lin = [0] * (1 << beta)
    for x in range(1, 1 << beta):
        low = x & -x
        lin[x] = lin[x ^ low] ^ star[low.bit_length() - 1]
    images = [0] * cover.graph.n
    for v in range(cover.base.n):
        gv, dv = g[v], offsets[v]
        for x in range(1 << beta):
            images[(v << beta) | x] = (gv << beta) | (lin[x] ^ dv)
    lifted = Permutation(images)
    if not is_automorphism(cover.graph, lifted):
        raise LiftError(f"lift of {g} is not an automorphism of the cover")
    if any(lifted[cover.index(v, 0)] >> beta != g[v] for v in range(cover.base.n)):
        raise LiftError(f"lift of {g} does not project to it")
    return lifted


def covering_transformations(cover: VoltageCover) -> list[Permutation]:
    beta = cover.beta
    out = []
    for j in range(beta):
        t = 1 << j
        out.append(Permutation._raw(tuple(
            (v << beta) | (x ^ t) for v in range(cover.base.n) for x in range(1 << beta)
        )))
    return out


def lift_group(pair: Pair, cover: VoltageCover) -> Pair:
    if pair.graph != cover.base:
        raise ValueError("pair graph is not the base graph of the cover")
    gens = covering_transformations(cover)
    gens += [lift_automorphism(cover, g) for g in pair.group.generators]
    lifted = Pair(cover.graph, PermGroup(gens, cover.graph.n), label=f"lift({pair.label})")
    lifted.meta.update({k: v for k, v in pair.meta.items() if k == "local_group"})
    lifted.meta["cover_of"] = pair
    lifted.meta["beta"] = cover.beta
    return lifted


def cover_tower(pair: Pair, steps: int) -> list[Pair]:
    """[pair, lift once, lift twice, ...]."""
    out = [pair]
    for _ in range(steps):
        cov = homological_2cover(out[-1].graph)
        out.append(lift_group(out[-1], cov))
    return out
