"""Locally-L pairs on Praeger-Xu graphs for groups L with a two-block system.

L acts on 2k points split into blocks A and B. After relabelling, A is
{0..k-1} (the points (x, 0)) and B is {k..2k-1} (the points (x, 1)), with a
fixed h outside the block kernel K sending (x, 0) to (x, 1). Elements of K
are pairs (a, b) of permutations of Z_k acting on the two halves.

The automorphisms live on C(k, R, 1) with R = 2*l*m, vertex (x, y) at index
y*k + x, and are transported to C(k, R, m-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from ..action import Pair, arc_stabiliser
from ..graphs import PXGraph, PXVertex, induced_px_action, praeger_xu
from ..perm import Permutation
from ..permgroup import BlockSystem, PermGroup, is_perm_isomorphic


class IdentityCheckError(AssertionError):
    """An identity the construction relies on failed for a concrete input."""

    def __init__(self, name: str, detail: str = ""):
        self.name = name
        super().__init__(f"identity check failed: {name}" + (f" ({detail})" if detail else ""))


def _require(ok: bool, name: str, detail: str = "") -> None:
    if not ok:
        raise IdentityCheckError(name, detail)


@dataclass(frozen=True)
class TwoBlockInput:
    L: PermGroup                 # relabelled: A = {0..k-1}, B = {k..2k-1}
    original: PermGroup
    blocks: BlockSystem          # in the original labelling, A first
    relabel: Permutation         # original point -> new index
    h: Permutation               # relabelled; (x,0) -> (x,1) -> (r(x),0)
    r: Permutation               # on Z_k
    K: PermGroup                 # block kernel, relabelled
    kernel_pairs: tuple[tuple[Permutation, Permutation], ...]   # (a, b) per K generator
    pointwise_A: PermGroup       # L_(A), relabelled

    @property
    def k(self) -> int:
        return self.L.degree // 2

    def point_stabiliser_order(self) -> int:
        return self.L.order() // self.L.degree


def _halves(g: Permutation, k: int) -> tuple[Permutation, Permutation]:
    a = Permutation._raw(tuple(g[x] for x in range(k)))
    b = Permutation._raw(tuple(g[k + x] - k for x in range(k)))
    return a, b


def _pair_perm(a: Permutation, b: Permutation) -> Permutation:
    k = a.degree
    return Permutation._raw(tuple(a.images) + tuple(k + y for y in b.images))


def _first_outside(L: PermGroup, A: frozenset) -> Permutation:
    """First element not preserving A, in breadth-first order over words in the generators."""
    ident = Permutation.identity(L.degree)
    seen = {ident}
    layer = [ident]
    while layer:
        nxt = []
        for w in layer:
            for g in L.generators:
                e = w * g
                if e in seen:
                    continue
                if frozenset(e[x] for x in A) != A:
                    return e
                seen.add(e)
                nxt.append(e)
        layer = nxt
    raise ValueError("group preserves both blocks; not a two-block system")


def two_block_setup(L: PermGroup, blocks: BlockSystem | tuple) -> TwoBlockInput:
    """Relabel L so that the blocks become {0..k-1} and {k..2k-1}."""
    if not isinstance(blocks, BlockSystem):
        blocks = BlockSystem(tuple(tuple(sorted(c)) for c in blocks))
    n = L.degree
    if (
        blocks.cell_count != 2
        or sorted(x for c in blocks.cells for x in c) != list(range(n))
        or len(blocks.cells[0]) != len(blocks.cells[1])
    ):
        raise ValueError(f"{blocks.cells} is not a partition of {n} points into two equal cells")
    if not L.is_transitive():
        raise ValueError("L must be transitive")
    if not blocks.is_invariant(L.generators):
        raise ValueError(f"{blocks.cells} is not a block system of L")
    k = n // 2
    A = tuple(sorted(blocks.cells[0]))
    h0 = _first_outside(L, frozenset(A))
    lam = [0] * n
    for x, p in enumerate(A):
        lam[p] = x
        lam[h0[p]] = k + x
    relabel = Permutation(lam)
    L1 = L.conjugate(relabel)
    h = h0 ** relabel
    _require(all(h[x] == k + x for x in range(k)), "(x,0)^h = (x,1)")
    r = Permutation(h[k + x] for x in range(k))
    _require(h * h == _pair_perm(r, r), "h^2 = (r,r)")

    A1 = frozenset(range(k))
    K = L1.setwise_stabiliser_by_enumeration(A1)
    _require(K.order() * 2 == L1.order(), "kernel has index 2")
    pairs = tuple(_halves(g, k) for g in K.generators)
    for a, b in pairs:
        _require(_pair_perm(a, b) ** h == _pair_perm(b ** r, a), "(a,b)^h = (b^r,a)", f"a={a}, b={b}")
    LA = L1.pointwise_stabiliser(range(k))
    return TwoBlockInput(L1, L, BlockSystem((A, tuple(sorted(blocks.cells[1])))), relabel, h, r, K, pairs, LA)


# automorphisms of C(k, R, 1) ----------------------------------------------------

class _Lam:
    def __init__(self, k: int, R: int):
        self.k, self.R = k, R
        self.n = k * R

    def shift(self, j: int = 1) -> Permutation:
        k, R = self.k, self.R
        return Permutation._raw(tuple(((y + j) % R) * k + x for y in range(R) for x in range(k)))

    def reflect(self) -> Permutation:
        k, R = self.k, self.R
        return Permutation._raw(tuple(((-y) % R) * k + x for y in range(R) for x in range(k)))

    def bracket(self, c: Permutation, i: int) -> Permutation:
        k = self.k
        i %= self.R
        img = list(range(self.n))
        for x in range(k):
            img[i * k + x] = i * k + c[x]
        return Permutation._raw(tuple(img))

    def chi(self, a: Permutation, i: int, m: int) -> Permutation:
        ell = self.R // (2 * m)
        return reduce(lambda p, q: p * q, (self.bracket(a, i + 2 * j * m) for j in range(ell)))

    def identity(self) -> Permutation:
        return Permutation.identity(self.n)


def _prod(perms, ident: Permutation) -> Permutation:
    return reduce(lambda p, q: p * q, perms, ident)


def _check_identities(lam: _Lam, m: int, inp: TwoBlockInput, s, t, sigma, tau) -> None:
    k, R = lam.k, lam.R
    comps = [c for ab in inp.kernel_pairs for c in ab] + [inp.r]
    comps = list(dict.fromkeys(comps))[:4] or [Permutation.identity(k)]
    idxs = sorted({0, 1, m - 1, m, R - 1})
    for c in comps:
        for d in comps:
            for i in idxs:
                _require(lam.bracket(c, i) * lam.bracket(d, i) == lam.bracket(c * d, i), "[c]_i[d]_i = [cd]_i")
                for j in idxs:
                    if j != i:
                        _require(
                            lam.bracket(c, i) * lam.bracket(d, j) == lam.bracket(d, j) * lam.bracket(c, i),
                            "[c]_i and [d]_j commute for i != j",
                        )
        for i in idxs:
            for j in (1, 2, m):
                _require(lam.bracket(c, i) ** lam.shift(j) == lam.bracket(c, i + j), "[c]_i^(s^j) = [c]_(i+j)")
            _require(lam.bracket(c, i) ** t == lam.bracket(c, -i), "[c]_i^t = [c]_(-i)")
    _require(t * t == lam.identity(), "t^2 = 1")
    _require(t * s * t == s.inverse(), "tst = s^-1")
    for a in comps:
        for b in comps:
            for i in idxs:
                _require(lam.chi(a, i, m) == lam.chi(a, i + 2 * m, m), "chi(a,i) = chi(a,i+2m)")
                _require(lam.chi(a, i, m) * lam.chi(b, i, m) == lam.chi(a * b, i, m), "chi(a,i)chi(b,i) = chi(ab,i)")
                for j in idxs:
                    if (i - j) % (2 * m):
                        x, y = lam.chi(a, i, m), lam.chi(b, j, m)
                        _require(x * y == y * x, "chi(a,i) and chi(b,j) commute for i != j mod 2m")
                _require(lam.chi(a, i, m) ** s == lam.chi(a, i + 1, m), "chi(a,i)^s = chi(a,i+1)")
                _require(lam.chi(a, i, m) ** t == lam.chi(a, -i, m), "chi(a,i)^t = chi(a,-i)")
    r = inp.r
    _require(
        sigma * sigma ** tau == lam.chi(r, -1, m) * lam.chi(r, m - 1, m),
        "sigma sigma^tau = chi(r,-1)chi(r,m-1)",
    )


def two_block_pair(inp: TwoBlockInput, ell: int, m: int) -> Pair:
    """Locally-L pair on C(k, 2*ell*m, m-1) with |G_uv| = |L_(A)|^(2m(ell-1)) |L_w|^m."""
    if ell < 1 or m < 2:
        raise ValueError(f"need ell >= 1 and m >= 2, got ell={ell}, m={m}")
    k = inp.k
    R = 2 * ell * m
    lam = _Lam(k, R)
    ident = lam.identity()
    r = inp.r
    s, t = lam.shift(), lam.reflect()
    sigma = lam.chi(r, -1, m) * s
    tau = _prod((lam.chi(r, j, m) for j in range(m + 1, 2 * m)), ident) * t
    _check_identities(lam, m, inp, s, t, sigma, tau)

    m0 = [lam.bracket(_halves(g, k)[1], 0) for g in inp.pointwise_A.generators]
    n0 = [lam.chi(a, 0, m) * lam.chi(b, m, m) for a, b in inp.kernel_pairs]
    powers = [ident]
    for _ in range(R):
        powers.append(powers[-1] * sigma)
    M = PermGroup([g ** powers[i] for i in range(R) for g in m0], lam.n)
    N = PermGroup([g ** powers[i] for i in range(m) for g in n0], lam.n)
    MN = PermGroup(M.generators + N.generators, lam.n)

    la, kk = inp.pointwise_A.order(), inp.K.order()
    _require(M.order() == la**R, "|M| = |L_(A)|^(2lm)", f"{M.order()} vs {la**R}")
    _require(N.order() == kk**m, "|N| = |K|^m", f"{N.order()} vs {kk**m}")
    # sigma^(2m) is the chi-product times s^(2m); s^(2m) is trivial only when l = 1
    _require(N.contains(powers[2 * m] * lam.shift(-2 * m)), "sigma^(2m) s^(-2m) in N")
    _require(N.contains(powers[R]), "sigma^(2lm) in N")
    _require(N.contains(tau * tau), "tau^2 in N")
    _require(N.contains(sigma * sigma ** tau), "sigma sigma^tau in N")
    _require(M.order() * N.order() // MN.order() == la ** (2 * m), "|M cap N| = |L_(A)|^(2m)")

    G_gens = m0 + n0 + [sigma, tau]
    G = PermGroup(G_gens, lam.n)
    L_order = inp.L.order()
    expected_G = 4 * ell * m * la ** (2 * m * (ell - 1)) * (L_order // 2) ** m
    _require(G.order() == expected_G, "|G| = 4lm |L_(A)|^(2m(l-1)) (|L|/2)^m", f"{G.order()} vs {expected_G}")

    pxg = praeger_xu(k, R, m - 1)
    base_px = praeger_xu(k, R, 1) if m - 1 != 1 else pxg
    transported = [induced_px_action(k, R, m - 1, g, base_px) for g in G_gens]
    gamma_group = PermGroup(transported, pxg.n)
    pair = Pair(pxg.graph, gamma_group, label=f"two-block(k={k}, l={ell}, m={m})")

    v, minus, plus = _special_vertex(pxg, m)
    hv = induced_px_action(k, R, m - 1, tau.inverse() * powers[m], base_px)
    _require(hv[v] == v, "tau^-1 sigma^m fixes v")
    nbrs = minus + plus
    pos = {x: i for i, x in enumerate(nbrs)}
    _require(tuple(pos[hv[x]] for x in nbrs) == inp.h.images, "tau^-1 sigma^m induces h on the neighbours of v")

    local = gamma_group.point_stabiliser(v).restrict(nbrs)
    _require(local.same_group(inp.L), "local group at v equals L under the block labelling")
    _require(is_perm_isomorphic(local, inp.original) is not None, "local group permutation isomorphic to L")

    expected_uv = la ** (2 * m * (ell - 1)) * inp.point_stabiliser_order() ** m
    got_uv = arc_stabiliser(pair, v, plus[0]).order()
    _require(got_uv == expected_uv, "|G_uv| = |L_(A)|^(2m(l-1)) |L_w|^m", f"{got_uv} vs {expected_uv}")
    pair.meta.update(
        construction="two-block", k=k, ell=ell, m=m, local_group=inp.original,
        arc_stab=got_uv, expected_arc_stab=expected_uv, base_vertex=v, lambda_group=G,
    )
    return pair


def _special_vertex(pxg: PXGraph, m: int) -> tuple[int, list[int], list[int]]:
    """v = (0,1)...(0,m-1) and its neighbours, A side then B side, by x."""
    k = pxg.k
    zeros = (0,) * (m - 2)
    v = pxg.index[PXVertex(1, (0,) * (m - 1))]
    minus = [pxg.index[PXVertex(0, (x,) + zeros)] for x in range(k)]
    plus = [pxg.index[PXVertex(2, zeros + (x,))] for x in range(k)]
    return v, minus, plus


def two_block_formula(LA_order: int, stab_order: int, ell: int, m: int) -> int:
    return LA_order ** (2 * m * (ell - 1)) * stab_order**m


def two_block_vertex_count(k: int, ell: int, m: int) -> int:
    return 2 * ell * m * k ** (m - 1)
