"""A graph together with a group of automorphisms, and its local structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .graphs import Graph, is_automorphism
from .permgroup import PermGroup, is_perm_isomorphic


class NotAutomorphismError(ValueError):
    pass


@dataclass(frozen=True)
class LocalGroup:
    vertex: int
    neighbours: tuple[int, ...]
    group: PermGroup

    def order(self) -> int:
        return self.group.order()


def _tuple_orbit(start: tuple, gens: list[tuple]) -> set:
    seen = {start}
    queue = [start]
    for t in queue:
        for g in gens:
            img = tuple(g[x] for x in t)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return seen


@dataclass(eq=False)
class Pair:
    """(graph, group) with every generator checked to be an automorphism."""

    graph: Graph
    group: PermGroup
    label: str = ""
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.group.degree != self.graph.n:
            raise ValueError(f"group degree {self.group.degree} != {self.graph.n} vertices")
        for i, g in enumerate(self.group.generators):
            if not is_automorphism(self.graph, g):
                raise NotAutomorphismError(f"generator {i} {g} is not an automorphism")

    @cached_property
    def vertex_transitive(self) -> bool:
        return self.group.is_transitive()

    @cached_property
    def arc_transitive(self) -> bool:
        arcs = self.graph.num_arcs()
        if arcs == 0:
            return False
        gens = [g.images for g in self.group.generators]
        return len(_tuple_orbit(self.graph.arcs()[0], gens)) == arcs

    @cached_property
    def two_arc_transitive(self) -> bool:
        g0 = self.graph
        start = next(
            ((x, y, z) for y in range(g0.n) for x in g0.adj[y] for z in g0.adj[y] if x != z),
            None,
        )
        if start is None:
            return False
        gens = [g.images for g in self.group.generators]
        return len(_tuple_orbit(start, gens)) == g0.num_two_arcs()

    def order(self) -> int:
        return self.group.order()

    def __repr__(self) -> str:
        return f"Pair({self.label or 'unnamed'}, n={self.graph.n}, |G|={self.group.order()})"


def make_pair(graph: Graph, group: PermGroup, label: str = "") -> Pair:
    return Pair(graph, group, label)


def vertex_stabiliser(pair: Pair, v: int) -> PermGroup:
    return pair.group.point_stabiliser(v)


def local_group(pair: Pair, v: int = 0) -> LocalGroup:
    """Group induced by G_v on the neighbours of v, labelled by ascending vertex index."""
    nbrs = pair.graph.neighbours(v)
    stab = vertex_stabiliser(pair, v)
    restricted = stab.restrict(nbrs).reduced()
    return LocalGroup(v, nbrs, restricted)


def local_kernel(pair: Pair, v: int = 0) -> PermGroup:
    """Kernel of the action of G_v on the neighbourhood of v."""
    return pair.group.pointwise_stabiliser([v, *pair.graph.neighbours(v)])


def arc_stabiliser(pair: Pair, u: int, v: int) -> PermGroup:
    if not pair.graph.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an arc")
    return pair.group.pointwise_stabiliser([u, v])


def is_locally(pair: Pair, L: PermGroup, v: int = 0) -> bool:
    d = pair.graph.degree(v)
    if L.degree != d:
        raise ValueError(f"local group has degree {L.degree} but valency is {d}")
    if not pair.arc_transitive:
        return False
    return is_perm_isomorphic(local_group(pair, v).group, L) is not None


def is_arc_regular(pair: Pair) -> bool:
    return pair.arc_transitive and pair.order() == pair.graph.num_arcs()


def is_two_arc_regular(pair: Pair) -> bool:
    return pair.two_arc_transitive and pair.order() == pair.graph.num_two_arcs()
