"""Simple undirected graphs, the Praeger-Xu family C(k, r, s), and automorphisms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .perm import Permutation
from .permgroup import GroupTooLargeError, PermGroup


class Graph:
    """Simple undirected graph on {0..n-1} with sorted adjacency lists."""

    __slots__ = ("n", "adj", "_adjsets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for {n} vertices")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._adjsets = tuple(frozenset(s) for s in nbrs)

    @classmethod
    def from_adjacency(cls, adj: Sequence[Sequence[int]]) -> "Graph":
        return cls(len(adj), ((u, v) for u, row in enumerate(adj) for v in row if u < v))

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def valency(self) -> int:
        """Common degree; raises if the graph is not regular."""
        degs = {len(a) for a in self.adj}
        if len(degs) != 1:
            raise ValueError("graph is not regular")
        return degs.pop()

    def is_regular(self) -> bool:
        return len({len(a) for a in self.adj}) <= 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u]]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def num_arcs(self) -> int:
        return sum(len(a) for a in self.adj)

    def num_two_arcs(self) -> int:
        return sum(len(a) * (len(a) - 1) for a in self.adj)

    def component(self, start: int, within: set[int] | None = None) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if y not in seen and (within is None or y in within):
                    seen.add(y)
                    stack.append(y)
        return seen

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.component(0)) == self.n

    def induced_is_connected(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        if not vs:
            return True
        return self.component(next(iter(vs)), vs) == vs

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


# families -------------------------------------------------------------------

def cycle(r: int) -> Graph:
    if r < 3:
        raise ValueError(f"cycle needs r >= 3, got {r}")
    return Graph(r, ((i, (i + 1) % r) for i in range(r)))


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(k: int, k2: int | None = None) -> Graph:
    """Parts {0..k-1} and {k..k+k2-1}."""
    k2 = k if k2 is None else k2
    if k < 1 or k2 < 1:
        raise ValueError("part sizes must be positive")
    return Graph(k + k2, ((i, k + j) for i in range(k) for j in range(k2)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def edgeless_lex_product(graph: Graph, c: int) -> Graph:
    """graph[cK1]: vertex (a, v) has index c*v + a; (a1,v1) ~ (a2,v2) iff v1 ~ v2."""
    if c < 1:
        raise ValueError("c must be positive")
    edges = [
        (c * u + a, c * v + b)
        for u, v in graph.edges()
        for a in range(c)
        for b in range(c)
    ]
    return Graph(c * graph.n, edges)


def lcf_graph(shifts: Sequence[int], repeats: int) -> Graph:
    """Hamiltonian cubic graph from LCF notation [shifts]^repeats."""
    n = len(shifts) * repeats
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    for i in range(n):
        j = (i + shifts[i % len(shifts)]) % n
        edges.add(tuple(sorted((i, j))))
    return Graph(n, edges)


def generalized_petersen(n: int, k: int) -> Graph:
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph(2 * n, edges)


# Praeger-Xu graphs ----------------------------------------------------------

class PXVertex(NamedTuple):
    """Traversing path (u_1, start)(u_2, start+1)...(u_s, start+s-1), ascending orientation."""

    start: int
    symbols: tuple[int, ...]


@dataclass(eq=False)
class PXGraph:
    k: int
    r: int
    s: int
    graph: Graph
    vertices: list[PXVertex]
    index: dict[PXVertex, int] = field(repr=False)

    @property
    def n(self) -> int:
        return self.graph.n

    def vertex_index(self, start: int, symbols: Sequence[int]) -> int:
        return self.index[PXVertex(start % self.r, tuple(symbols))]

    def path_points(self, v: PXVertex) -> list[tuple[int, int]]:
        """The (x, y) vertices of C(k, r, 1) along the path."""
        return [(u, (v.start + j) % self.r) for j, u in enumerate(v.symbols)]


def _check_px(k: int, r: int, s: int) -> None:
    if k < 1 or r < 3 or not 1 <= s <= r - 1:
        raise ValueError(f"C(k,r,s) needs k>=1, r>=3, 1<=s<=r-1; got ({k},{r},{s})")


def px_base_index(k: int, x: int, y: int) -> int:
    """Index of (x, y) in C(k, r, 1): y*k + x."""
    return y * k + x


def praeger_xu(k: int, r: int, s: int) -> PXGraph:
    """C(k, r, s); vertices ordered lexicographically by (start, symbols)."""
    _check_px(k, r, s)
    vertices = [
        PXVertex(i, syms)
        for i in range(r)
        for syms in itertools.product(range(k), repeat=s)
    ]
    index = {v: i for i, v in enumerate(vertices)}
    edges = []
    for v in vertices:
        a = index[v]
        if s == 1:
            for w in range(k):
                b = index[PXVertex((v.start + 1) % r, (w,))]
                edges.append((a, b))
        else:
            # forward extension: drop the first symbol, append a new one
            for w in range(k):
                b = index[PXVertex((v.start + 1) % r, v.symbols[1:] + (w,))]
                edges.append((a, b))
    return PXGraph(k, r, s, Graph(len(vertices), edges), vertices, index)


def _fibre_map(k: int, r: int, p: Permutation) -> list[int] | None:
    """Map on fibre indices induced by p, or None if p breaks fibres."""
    out = []
    for y in range(r):
        targets = {p[px_base_index(k, x, y)] // k for x in range(k)}
        if len(targets) != 1:
            return None
        out.append(targets.pop())
    return out


def induced_px_action(k: int, r: int, s: int, p: Permutation, pxg: PXGraph | None = None) -> Permutation:
    """Action on C(k, r, s) induced by an automorphism p of C(k, r, 1)."""
    _check_px(k, r, s)
    base = pxg if pxg is not None and pxg.s == 1 else None
    base_graph = base.graph if base is not None else praeger_xu(k, r, 1).graph
    if p.degree != k * r:
        raise ValueError(f"degree {p.degree} does not match C({k},{r},1)")
    if not is_automorphism(base_graph, p):
        raise ValueError("permutation is not an automorphism of C(k,r,1)")
    if _fibre_map(k, r, p) is None:
        raise ValueError("automorphism does not preserve the fibre partition")
    if s == 1:
        return p
    target = pxg if pxg is not None and (pxg.k, pxg.r, pxg.s) == (k, r, s) else praeger_xu(k, r, s)
    images = []
    for v in target.vertices:
        pts = []
        for x, y in target.path_points(v):
            q = p[px_base_index(k, x, y)]
            pts.append((q % k, q // k))
        steps = {(pts[j + 1][1] - pts[j][1]) % r for j in range(s - 1)}
        if steps == {1}:
            pass
        elif steps == {r - 1}:
            pts.reverse()
        else:
            raise ValueError("image of a traversing path is not traversing")
        images.append(target.index[PXVertex(pts[0][1], tuple(x for x, _ in pts))])
    return Permutation(images)


# automorphisms --------------------------------------------------------------

def is_automorphism(graph: Graph, p: Permutation) -> bool:
    if p.degree != graph.n:
        raise ValueError(f"permutation degree {p.degree} != {graph.n} vertices")
    img = p.images
    return all(
        len(graph.adj[img[u]]) == len(graph.adj[u])
        and all(graph.has_edge(img[u], img[v]) for v in graph.adj[u])
        for u in range(graph.n)
    )


def _refine(graph: Graph, cells: list[list[int]]) -> tuple[list[list[int]], list]:
    """Equitable refinement; returns cells and a trace that must agree between two runs."""
    trace = []
    while True:
        where = {}
        for ci, cell in enumerate(cells):
            for x in cell:
                where[x] = ci
        new_cells = []
        changed = False
        for cell in cells:
            sig = {}
            for x in cell:
                counts = [0] * len(cells)
                for y in graph.adj[x]:
                    counts[where[y]] += 1
                sig.setdefault(tuple(counts), []).append(x)
            keys = sorted(sig)
            trace.append(tuple((key, len(sig[key])) for key in keys))
            if len(keys) > 1:
                changed = True
            new_cells.extend(sig[key] for key in keys)
        cells = new_cells
        if not changed:
            return cells, trace


def _individualize(cells: list[list[int]], v: int) -> list[list[int]]:
    out = []
    for cell in cells:
        if v in cell and len(cell) > 1:
            out.append([v])
            out.append([x for x in cell if x != v])
        else:
            out.append(list(cell))
    return out


def _extend_to_automorphism(graph, src_cells, dst_cells) -> Permutation | None:
    """Backtracking search for an automorphism mapping src cells onto dst cells in order."""
    src_cells, t1 = _refine(graph, src_cells)
    dst_cells, t2 = _refine(graph, dst_cells)
    if t1 != t2:
        return None
    for ci, cell in enumerate(src_cells):
        if len(cell) > 1:
            x = cell[0]
            for z in dst_cells[ci]:
                found = _extend_to_automorphism(
                    graph, _individualize(src_cells, x), _individualize(dst_cells, z)
                )
                if found is not None:
                    return found
            return None
    images = [0] * graph.n
    for a, b in zip(src_cells, dst_cells):
        images[a[0]] = b[0]
    p = Permutation._raw(tuple(images))
    return p if is_automorphism(graph, p) else None


def automorphism_search(graph: Graph, cap: int = 10**7, max_vertices: int = 64) -> PermGroup:
    """Full automorphism group by individualisation-refinement backtracking.

    Builds a base b_1..b_k from the refinement tree and, deepest level first,
    finds for every candidate image of b_i outside the orbit already known an
    automorphism fixing b_1..b_{i-1}; orbit pruning keeps it exhaustive.
    """
    n = graph.n
    if n > max_vertices:
        raise ValueError(f"automorphism_search supports at most {max_vertices} vertices, got {n}")
    root, _ = _refine(graph, [list(range(n))])
    base: list[int] = []
    levels = [root]
    cells = root
    while any(len(c) > 1 for c in cells):
        b = next(c for c in cells if len(c) > 1)[0]
        base.append(b)
        cells, _ = _refine(graph, _individualize(cells, b))
        levels.append(cells)
    gens: list[Permutation] = []
    order = 1
    for i in range(len(base) - 1, -1, -1):
        b = base[i]
        cells = levels[i]
        cand = next(c for c in cells if b in c)
        src = _individualize(cells, b)
        orbit = PermGroup(gens, n).orbit(b) if gens else {b}
        for y in cand:
            if y in orbit:
                continue
            found = _extend_to_automorphism(graph, src, _individualize(cells, y))
            if found is not None:
                gens.append(found)
                orbit = PermGroup(gens, n).orbit(b)
        order *= len(orbit)
        if order > cap:
            raise GroupTooLargeError(f"automorphism group order exceeds cap {cap}")
    group = PermGroup(gens, n)
    if group.order() != order:
        raise RuntimeError("automorphism search produced inconsistent orbit data")
    return group
