"""Permutation groups given by generators, backed by a stabiliser chain.

The chain is built lazily with the deterministic Schreier-Sims algorithm.
Subgroups derived from a group whose order is already known (point and
pointwise stabilisers) are rebuilt with a randomised Schreier-Sims that
stops exactly when the product of the basic orbit lengths reaches the known
order; that stopping rule makes the result exact rather than probabilistic.
"""

from __future__ import annotations

import itertools
import os
import random
from collections import Counter
from dataclasses import dataclass
from math import comb, prod
from typing import Iterable, Sequence

from .perm import Permutation

DEFAULT_ELEM_CAP = 10**6


class GroupTooLargeError(ValueError):
    pass


class UndecidedError(RuntimeError):
    pass


def element_cap() -> int:
    raw = os.environ.get("ARCSTAB_ELEM_CAP")
    return int(raw) if raw else DEFAULT_ELEM_CAP


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple(map(q.__getitem__, p))


def _inv(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _first_moved(p: tuple) -> int:
    for i, x in enumerate(p):
        if i != x:
            return i
    return -1


class StabChain:
    """Base, strong generators per level and explicit transversals."""

    def __init__(self, degree: int, base: Sequence[int] = ()):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.base: list[int] = []
        self.gens: list[list[tuple]] = []
        self.trans: list[dict[int, tuple]] = []
        self.tinv: list[dict[int, tuple]] = []
        for b in base:
            self._new_level(b)

    def _new_level(self, point: int) -> None:
        self.base.append(point)
        self.gens.append([])
        self.trans.append({point: self.identity})
        self.tinv.append({point: self.identity})

    def __len__(self) -> int:
        return len(self.base)

    def order(self) -> int:
        return prod(len(t) for t in self.trans)

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        for lvl in range(start, len(self.base)):
            b = self.base[lvl]
            y = g[b]
            if y == b:
                continue
            inv = self.tinv[lvl].get(y)
            if inv is None:
                return g, lvl
            g = _mul(g, inv)
        return g, len(self.base)

    def add_gen(self, lvl: int, h: tuple) -> None:
        """Append ``h`` to level ``lvl`` and extend that basic orbit."""
        gens = self.gens[lvl]
        gens.append(h)
        tr, ti = self.trans[lvl], self.tinv[lvl]
        fresh = []
        for x, ux in list(tr.items()):
            y = h[x]
            if y not in tr:
                uy = _mul(ux, h)
                tr[y] = uy
                ti[y] = _inv(uy)
                fresh.append(y)
        while fresh:
            nxt = []
            for x in fresh:
                ux = tr[x]
                for g in gens:
                    y = g[x]
                    if y not in tr:
                        uy = _mul(ux, g)
                        tr[y] = uy
                        ti[y] = _inv(uy)
                        nxt.append(y)
            fresh = nxt

    def absorb(self, h: tuple, top: int) -> int:
        """Add a residue that fixes base[:j]; returns the level j it entered at."""
        h, j = self.sift(h, top)
        if h == self.identity:
            return -1
        if j == len(self.base):
            self._new_level(_first_moved(h))
        for lvl in range(top, j + 1):
            self.add_gen(lvl, h)
        return j

    def tail(self, lvl: int) -> "StabChain":
        out = StabChain.__new__(StabChain)
        out.degree = self.degree
        out.identity = self.identity
        out.base = self.base[lvl:]
        out.gens = self.gens[lvl:]
        out.trans = self.trans[lvl:]
        out.tinv = self.tinv[lvl:]
        return out

    def random_element(self, rng: random.Random) -> tuple:
        g = self.identity
        for tr in reversed(self.trans):
            g = _mul(g, rng.choice(list(tr.values())))
        return g


def schreier_sims(gens: Sequence[tuple], degree: int, base: Sequence[int] = ()) -> StabChain:
    """Deterministic Schreier-Sims.

    Each base point is the smallest point moved by the generators that fix
    all earlier base points. Schreier generators already sifted are
    remembered per level; transversals are only ever extended, so a
    generator that sifted to the identity keeps doing so.
    """
    chain = StabChain(degree, base)
    ident = chain.identity
    gens = list(dict.fromkeys(g for g in gens if g != ident))
    while True:
        rest = [g for g in gens if all(g[b] == b for b in chain.base)]
        if not rest:
            break
        chain._new_level(min(_first_moved(g) for g in rest))
    for g in gens:
        for lvl in range(len(chain.base)):
            if all(g[b] == b for b in chain.base[:lvl]):
                chain.add_gen(lvl, g)
    checked: list[set] = [set() for _ in chain.base]
    i = len(chain.base) - 1
    while i >= 0:
        jumped = False
        tr, ti, S = chain.trans[i], chain.tinv[i], chain.gens[i]
        done = checked[i]
        for y in list(tr):
            uy = tr[y]
            for gi, g in enumerate(S):
                if (y, gi) in done:
                    continue
                done.add((y, gi))
                ug = _mul(uy, g)
                z = g[y]
                if ug == tr[z]:
                    continue
                h, j = chain.sift(_mul(ug, ti[z]), i + 1)
                if h == ident:
                    continue
                if j == len(chain.base):
                    chain._new_level(_first_moved(h))
                    checked.append(set())
                for lvl in range(i + 1, j + 1):
                    chain.add_gen(lvl, h)
                i = j
                jumped = True
                break
            if jumped:
                break
        if not jumped:
            i -= 1
    return chain


def schreier_sims_known_order(
    source: StabChain,
    order: int,
    base: Sequence[int] = (),
    seed: int = 0,
) -> StabChain:
    """Rebuild a chain for the group of ``source`` with a prescribed base prefix."""
    chain = StabChain(source.degree, base)
    rng = random.Random(seed)
    for lvl in range(len(source)):
        for g in source.gens[lvl]:
            if chain.order() == order:
                break
            chain.absorb(g, 0)
    while chain.order() < order:
        chain.absorb(source.random_element(rng), 0)
    if chain.order() != order:
        raise RuntimeError("chain order overshoot: inconsistent known order")
    return chain


@dataclass(frozen=True)
class BlockSystem:
    cells: tuple[tuple[int, ...], ...]

    @property
    def cell_size(self) -> int:
        return len(self.cells[0])

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    def is_trivial(self) -> bool:
        return self.cell_size == 1 or self.cell_count == 1

    def cell_of(self, point: int) -> tuple[int, ...]:
        for c in self.cells:
            if point in c:
                return c
        raise KeyError(point)

    def is_invariant(self, gens: Iterable[Permutation]) -> bool:
        cellset = {frozenset(c) for c in self.cells}
        return all(frozenset(g[x] for x in c) in cellset for g in gens for c in self.cells)


class PermGroup:
    """A permutation group of a fixed degree given by generators."""

    def __init__(self, generators: Iterable[Permutation] = (), degree: int | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("trivial group needs an explicit degree")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != {degree}")
        self.degree = degree
        self.generators = gens
        self._chain: StabChain | None = None

    @classmethod
    def _from_chain(cls, chain: StabChain, gens=None) -> "PermGroup":
        if gens is None:
            gens = list(dict.fromkeys(g for lvl in chain.gens for g in lvl))
        grp = cls([Permutation._raw(g) for g in gens], chain.degree)
        grp._chain = chain
        return grp

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls([], degree)

    # chain ---------------------------------------------------------------
    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = schreier_sims([g.images for g in self.generators], self.degree)
        return self._chain

    def build_chain(self) -> StabChain:
        return self.chain

    def order(self) -> int:
        return self.chain.order()

    def __len__(self) -> int:
        return self.order()

    @property
    def base(self) -> list[int]:
        return list(self.chain.base)

    def strong_generators(self) -> list[Permutation]:
        return [Permutation._raw(g) for g in dict.fromkeys(g for lvl in self.chain.gens for g in lvl)]

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.degree}")
        h, _ = self.chain.sift(p.images)
        return h == self.chain.identity

    __contains__ = contains

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def same_group(self, other: "PermGroup") -> bool:
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    # orbits --------------------------------------------------------------
    def orbit(self, point: int) -> set[int]:
        return set(self.orbit_transversal(point))

    def orbit_transversal(self, point: int) -> dict[int, Permutation]:
        """Orbit of ``point`` with, per orbit element, a group element mapping ``point`` to it."""
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range for degree {self.degree}")
        ident = tuple(range(self.degree))
        tr = {point: ident}
        queue = [point]
        gens = [g.images for g in self.generators]
        for x in queue:
            ux = tr[x]
            for g in gens:
                y = g[x]
                if y not in tr:
                    tr[y] = _mul(ux, g)
                    queue.append(y)
        return {x: Permutation._raw(u) for x, u in tr.items()}

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for x in range(self.degree):
            if x not in seen:
                orb = sorted(self.orbit(x))
                seen.update(orb)
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    def fixed_points(self) -> list[int]:
        return [x for x in range(self.degree) if all(g[x] == x for g in self.generators)]

    # stabilisers ---------------------------------------------------------
    def _rebased(self, prefix: Sequence[int]) -> StabChain:
        chain = self.chain
        if chain.base[: len(prefix)] == list(prefix):
            return chain
        return schreier_sims_known_order(chain, chain.order(), prefix)

    def point_stabiliser(self, v: int) -> "PermGroup":
        if not 0 <= v < self.degree:
            raise ValueError(f"point {v} out of range for degree {self.degree}")
        return self.pointwise_stabiliser([v])

    def pointwise_stabiliser(self, points: Iterable[int]) -> "PermGroup":
        pts = list(dict.fromkeys(points))
        grp = self
        # peel off points that are already fixed; rebase one point at a time so
        # every rebuild works inside the previous (smaller) stabiliser
        for v in pts:
            if all(g[v] == v for g in grp.generators):
                continue
            chain = grp._rebased([v])
            if len(chain) > 1:
                grp = PermGroup._from_chain(chain.tail(1))
            else:
                grp = PermGroup.trivial(self.degree)
        return grp

    def setwise_stabiliser_by_enumeration(self, points: Iterable[int], cap: int | None = None) -> "PermGroup":
        target = frozenset(points)
        keep = [g for g in self.elements(cap) if frozenset(g[x] for x in target) == target]
        return PermGroup(keep, self.degree).reduced()

    # elements ------------------------------------------------------------
    def elements(self, cap: int | None = None) -> list[Permutation]:
        cap = element_cap() if cap is None else cap
        n = self.order()
        if n > cap:
            raise GroupTooLargeError(f"group of order {n} exceeds enumeration cap {cap}")
        current = [self.chain.identity]
        for tr in reversed(self.chain.trans):
            reps = list(tr.values())
            current = [_mul(e, u) for e in current for u in reps]
        return [Permutation._raw(e) for e in current]

    def random_element(self, rng: random.Random) -> Permutation:
        return Permutation._raw(self.chain.random_element(rng))

    # derived groups ------------------------------------------------------
    def reduced(self) -> "PermGroup":
        """Same group with a greedily thinned generating set (deterministic)."""
        target = self.order()
        keep: list[Permutation] = []
        sub = PermGroup.trivial(self.degree)
        for g in self.generators:
            if g.is_identity() or sub.contains(g):
                continue
            keep.append(g)
            sub = PermGroup(keep, self.degree)
            if sub.order() == target:
                break
        return sub

    def conjugate(self, sigma: Permutation) -> "PermGroup":
        """The group sigma^-1 G sigma."""
        return PermGroup([g ** sigma for g in self.generators], self.degree)

    def restrict(self, points: Sequence[int]) -> "PermGroup":
        """Action on an invariant set, relabelled by position in ``points``."""
        pos = {x: i for i, x in enumerate(points)}
        gens = []
        for g in self.generators:
            try:
                gens.append(Permutation._raw(tuple(pos[g[x]] for x in points)))
            except KeyError:
                raise ValueError("point set is not invariant under the group") from None
        return PermGroup(gens, len(points))

    def element_order_counts(self, cap: int | None = None) -> Counter:
        return Counter(g.order() for g in self.elements(cap))

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, generators={[str(g) for g in self.generators]})"


def closure_order(gens: Sequence[Permutation], degree: int, cap: int = 10**6) -> int:
    """Brute-force size of the group generated by ``gens`` (breadth-first closure)."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    raw = [g.images for g in gens]
    while frontier:
        nxt = []
        for e in frontier:
            for g in raw:
                h = _mul(e, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > cap:
                        raise GroupTooLargeError("closure exceeded cap")
        frontier = nxt
    return len(seen)


# blocks ---------------------------------------------------------------------

def minimal_block(G: PermGroup, seed: tuple[int, int]) -> BlockSystem:
    """Finest block system with both seed points in one cell (union-find)."""
    a, b = seed
    if a == b:
        raise ValueError("seed points must be distinct")
    if not G.is_transitive():
        raise ValueError("minimal_block needs a transitive group")
    n = G.degree
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parent[find(b)] = find(a)
    queue = [(a, b)]
    gens = [g.images for g in G.generators]
    while queue:
        x, y = queue.pop()
        for g in gens:
            gx, gy = g[x], g[y]
            rx, ry = find(gx), find(gy)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
                queue.append((gx, gy))
    cells: dict[int, list[int]] = {}
    for x in range(n):
        cells.setdefault(find(x), []).append(x)
    return BlockSystem(tuple(sorted(tuple(c) for c in cells.values())))


def is_primitive(G: PermGroup) -> bool:
    if not G.is_transitive():
        return False
    return all(minimal_block(G, (0, j)).cell_count == 1 for j in range(1, G.degree))


def two_block_systems(G: PermGroup, max_degree: int = 16) -> list[BlockSystem]:
    """All block systems with two cells of size n/2.

    Candidate cells containing 0 are enumerated in lexicographic order and
    tested against every generator, which decides invariance exactly.
    """
    n = G.degree
    if not G.is_transitive():
        raise ValueError("two-block search needs a transitive group")
    if n % 2:
        return []
    if n > max_degree:
        raise UndecidedError(
            f"degree {n}: {comb(n - 1, n // 2 - 1)} candidate cells exceeds the enumeration bound"
        )
    gens = [g.images for g in G.generators]
    out = []
    for rest in itertools.combinations(range(1, n), n // 2 - 1):
        cell = frozenset((0,) + rest)
        other = frozenset(range(n)) - cell
        if all(frozenset(g[x] for x in cell) in (cell, other) for g in gens):
            out.append(BlockSystem((tuple(sorted(cell)), tuple(sorted(other)))))
    return out


def has_two_block_system(G: PermGroup, max_degree: int = 16) -> BlockSystem | None:
    """The lexicographically first two-cell block system, or None."""
    systems = two_block_systems(G, max_degree)
    return systems[0] if systems else None


# permutation isomorphism ----------------------------------------------------

def is_perm_isomorphic(G: PermGroup, H: PermGroup, cap: int | None = None) -> Permutation | None:
    """Find sigma with sigma^-1 G sigma == H, or None when no relabelling exists.

    Backtracks over images h_i in H of a thinned generating set g_i of G,
    restricted to matching cycle types; each choice propagates the forced
    point images sigma(g_i(x)) = h_i(sigma(x)). The search is exhaustive.
    """
    if G.degree != H.degree:
        raise ValueError(f"degree mismatch: {G.degree} vs {H.degree}")
    n = G.degree
    if G.order() != H.order():
        return None
    if sorted(map(len, G.orbits())) != sorted(map(len, H.orbits())):
        return None
    h_elems = H.elements(cap)
    g_elems = G.elements(cap)
    if Counter(g.cycle_type() for g in g_elems) != Counter(h.cycle_type() for h in h_elems):
        return None
    gens = [g.images for g in G.reduced().generators]
    if not gens:
        return Permutation.identity(n)
    by_type: dict[tuple, list[tuple]] = {}
    for h in h_elems:
        by_type.setdefault(h.cycle_type(), []).append(h.images)
    choices = [by_type.get(Permutation._raw(g).cycle_type(), []) for g in gens]

    def propagate(sig: dict, sig_inv: dict, pairs: list[tuple[tuple, tuple]]) -> bool:
        queue = list(sig)
        while queue:
            x = queue.pop()
            sx = sig[x]
            for g, h in pairs:
                y, hy = g[x], h[sx]
                if y in sig:
                    if sig[y] != hy:
                        return False
                elif hy in sig_inv:
                    return False
                else:
                    sig[y] = hy
                    sig_inv[hy] = y
                    queue.append(y)
        return True

    h_transitive = H.is_transitive()

    def complete(sig: dict, sig_inv: dict, pairs) -> dict | None:
        free = [x for x in range(n) if x not in sig]
        if not free:
            return sig
        x = free[0]
        for y in range(n):
            if y in sig_inv:
                continue
            s2, si2 = dict(sig), dict(sig_inv)
            s2[x] = y
            si2[y] = x
            if propagate(s2, si2, pairs):
                out = complete(s2, si2, pairs)
                if out is not None:
                    return out
        return None

    def search(i: int, sig: dict, sig_inv: dict, pairs: list) -> dict | None:
        if i == len(gens):
            return complete(sig, sig_inv, pairs)
        for h in choices[i]:
            s2, si2 = dict(sig), dict(sig_inv)
            p2 = pairs + [(gens[i], h)]
            if propagate(s2, si2, p2):
                out = search(i + 1, s2, si2, p2)
                if out is not None:
                    return out
        return None

    # if H is transitive and sigma works then so does sigma*h, so sigma(0)=0 is no loss
    starts = [0] if h_transitive else range(n)
    for y0 in starts:
        found = search(0, {0: y0}, {y0: 0}, [])
        if found is not None:
            sigma = Permutation([found[x] for x in range(n)])
            if G.conjugate(sigma).same_group(H):
                return sigma
    return None


def brute_force_isomorphism(G: PermGroup, H: PermGroup) -> Permutation | None:
    """Try every relabelling; only for tiny degrees (test oracle)."""
    if G.degree != H.degree or G.order() != H.order():
        return None
    for images in itertools.permutations(range(G.degree)):
        sigma = Permutation._raw(images)
        if all(H.contains(g ** sigma) for g in G.generators):
            return sigma
    return None
