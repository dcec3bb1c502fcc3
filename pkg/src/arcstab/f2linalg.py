"""Linear algebra over the two-element field with rows packed into Python ints.

Bit j of a packed row is column j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph


@dataclass(frozen=True)
class F2Vector:
    n: int
    bits: int

    @classmethod
    def from_list(cls, values: Sequence[int]) -> "F2Vector":
        bits = 0
        for j, x in enumerate(values):
            if x & 1:
                bits |= 1 << j
        return cls(len(values), bits)

    @classmethod
    def ones(cls, n: int) -> "F2Vector":
        return cls(n, (1 << n) - 1)

    def __add__(self, other: "F2Vector") -> "F2Vector":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return F2Vector(self.n, self.bits ^ other.bits)

    def __getitem__(self, j: int) -> int:
        return (self.bits >> j) & 1

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.n)]

    def is_zero(self) -> bool:
        return self.bits == 0

    def weight(self) -> int:
        return bin(self.bits).count("1")


@dataclass(frozen=True)
class F2Matrix:
    nrows: int
    ncols: int
    rows: tuple[int, ...]

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "F2Matrix":
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, tuple(F2Vector.from_list(r).bits for r in rows))

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(n, n, tuple(1 << j for j in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "F2Matrix":
        return cls(nrows, ncols, (0,) * nrows)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def mul_vector(self, x: F2Vector) -> F2Vector:
        return F2Vector(self.nrows, sum(1 << i for i, r in enumerate(self.rows) if bin(r & x.bits).count("1") & 1))


def rref(m: F2Matrix) -> tuple[F2Matrix, int, list[int]]:
    """Reduced row-echelon form; returns (reduced matrix, rank, pivot columns)."""
    rows = list(m.rows)
    pivots: list[int] = []
    r = 0
    for col in range(m.ncols):
        bit = 1 << col
        piv = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return F2Matrix(m.nrows, m.ncols, tuple(rows)), r, pivots


def rank(m: F2Matrix) -> int:
    return rref(m)[1]


def nullspace(m: F2Matrix) -> list[F2Vector]:
    """Basis of {x : m x = 0}, itself in reduced row-echelon form."""
    red, rk, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivset:
            continue
        bits = 1 << free
        for row, pc in zip(red.rows[:rk], pivots):
            if row >> free & 1:
                bits |= 1 << pc
        basis.append(bits)
    if not basis:
        return []
    canon, k, _ = rref(F2Matrix(len(basis), m.ncols, tuple(basis)))
    return [F2Vector(m.ncols, b) for b in canon.rows[:k]]


def span_contains(basis: Iterable[F2Vector], x: F2Vector) -> bool:
    rows = [b.bits for b in basis]
    n = x.n
    before = rank(F2Matrix(len(rows), n, tuple(rows)))
    after = rank(F2Matrix(len(rows) + 1, n, tuple(rows) + (x.bits,)))
    return before == after


def adjacency_matrix(graph: Graph) -> F2Matrix:
    rows = tuple(sum(1 << u for u in graph.adj[v]) for v in range(graph.n))
    return F2Matrix(graph.n, graph.n, rows)


def satisfies_neighbour_sums(graph: Graph, x: F2Vector) -> bool:
    return all(sum(x[u] for u in graph.adj[v]) % 2 == 0 for v in range(graph.n))


def graph_nullspace(graph: Graph) -> list[F2Vector]:
    """Vectors x with sum of x over the neighbours of every vertex equal to 0."""
    basis = nullspace(adjacency_matrix(graph))
    for x in basis:
        if not satisfies_neighbour_sums(graph, x):
            raise RuntimeError("nullspace vector fails the neighbour-sum condition")
    return basis


def nullity(graph: Graph) -> int:
    return len(graph_nullspace(graph))
