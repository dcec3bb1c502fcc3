"""Certificates for the exponential upper bound on arc-stabiliser orders.

Starting from S_0 = {u, v}, each step takes the component of the fixed-point
set of G_k = G_(S_k) containing S_k, picks a non-fixed vertex x adjacent to it
and adds the G_k-orbit of x. Each quotient |G_k : G_(k+1)| divides |L_w|, every
orbit added has length at least p (smallest prime dividing |L_w|), so
|G_uv| <= |L_w|^m with m <= (n - 2)/p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .action import Pair, local_group
from .permgroup import PermGroup


class CertificateError(AssertionError):
    pass


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError(f"{n} has no prime factor")
    for p in range(2, math.isqrt(n) + 1):
        if n % p == 0:
            return p
    return n


def bound_exponent(n: int, p: int) -> int:
    return max(n - 2, 0) // p


def bound_value(local_stab_order: int, n: int, p: int | None = None) -> int:
    """|L_w|^floor((n-2)/p); 1 when |L_w| = 1."""
    if local_stab_order < 1:
        raise ValueError("stabiliser order must be positive")
    if local_stab_order == 1:
        return 1
    if p is None:
        p = smallest_prime_factor(local_stab_order)
    return local_stab_order ** bound_exponent(n, p)


def log_bound(local_stab_order: int, n: int, p: int | None = None) -> float:
    """Natural log of the real-exponent bound |L_w|^((n-2)/p)."""
    if local_stab_order == 1:
        return 0.0
    if p is None:
        p = smallest_prime_factor(local_stab_order)
    return (n - 2) / p * math.log(local_stab_order)


def bound_value_real(local_stab_order: int, n: int, p: int | None = None) -> float:
    try:
        return math.exp(log_bound(local_stab_order, n, p))
    except OverflowError:
        return math.inf


@dataclass(frozen=True)
class Step:
    x: int
    w: int
    orbit: tuple[int, ...]


@dataclass
class BoundCertificate:
    arc: tuple[int, int]
    n: int
    local_stab_order: int
    p: int
    sets: list[frozenset] = field(default_factory=list)
    orders: list[int] = field(default_factory=list)
    steps: list[Step] = field(default_factory=list)

    @property
    def m(self) -> int:
        return len(self.steps)

    @property
    def arc_stab_order(self) -> int:
        return self.orders[0]

    @property
    def bound(self) -> int:
        return bound_value(self.local_stab_order, self.n, self.p)

    def trace(self) -> list[str]:
        lines = [
            f"arc {self.arc}: |G_uv| = {self.orders[0]}, |L_w| = {self.local_stab_order}, p = {self.p}",
            f"S_0 = {sorted(self.sets[0])}",
        ]
        for i, st in enumerate(self.steps, start=1):
            lines.append(
                f"step {i}: x = {st.x} adjacent to w = {st.w}, orbit {list(st.orbit)}; "
                f"|S_{i}| = {len(self.sets[i])}, |G_{i}| = {self.orders[i]}, "
                f"quotient {self.orders[i - 1] // self.orders[i]}"
            )
        lines.append(
            f"m = {self.m} <= (n-2)/p = {(self.n - 2) / self.p:.3g}; "
            f"|G_uv| = {self.orders[0]} <= |L_w|^m = {self.local_stab_order ** self.m} "
            f"<= bound {self.local_stab_order}^{bound_exponent(self.n, self.p)}"
        )
        return lines

    def validate(self, graph) -> None:
        if self.sets[0] != frozenset(self.arc):
            raise CertificateError("S_0 is not the arc")
        if len(self.sets) != self.m + 1 or len(self.orders) != self.m + 1:
            raise CertificateError("sequence lengths disagree")
        for i in range(1, self.m + 1):
            if not self.sets[i - 1] <= self.sets[i]:
                raise CertificateError(f"S_{i - 1} is not contained in S_{i}")
            if len(self.sets[i]) < len(self.sets[i - 1]) + self.p:
                raise CertificateError(f"|S_{i}| grew by less than p = {self.p}")
            if self.orders[i - 1] % self.orders[i] or self.local_stab_order % (self.orders[i - 1] // self.orders[i]):
                raise CertificateError(f"|G_{i - 1} : G_{i}| does not divide |L_w|")
        for i, S in enumerate(self.sets):
            if not graph.induced_is_connected(S):
                raise CertificateError(f"S_{i} does not induce a connected subgraph")
        if self.orders[-1] != 1:
            raise CertificateError("final group is not trivial")
        if self.m > (self.n - 2) / self.p:
            raise CertificateError(f"m = {self.m} exceeds (n-2)/p")
        if self.orders[0] > self.local_stab_order**self.m or self.orders[0] > self.bound:
            raise CertificateError("arc-stabiliser order exceeds the bound")


def _fixed_points(G: PermGroup) -> set[int]:
    return set(G.fixed_points())


def exp_bound_certificate(pair: Pair, u: int, v: int) -> BoundCertificate:
    graph = pair.graph
    if not graph.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an arc")
    if not pair.arc_transitive:
        raise ValueError("pair is not arc-transitive")
    loc = local_group(pair, v).group
    stab = loc.order() // loc.degree
    p = smallest_prime_factor(stab) if stab > 1 else 2
    cert = BoundCertificate((u, v), graph.n, stab, p)
    S = frozenset((u, v))
    Gk = pair.group.pointwise_stabiliser(sorted(S))
    cert.sets.append(S)
    cert.orders.append(Gk.order())
    while True:
        fixed = _fixed_points(Gk)
        comp = frozenset(graph.component(u, within=fixed))
        if len(comp) == graph.n:
            break
        step = None
        for x in range(graph.n):
            if x in comp or x in fixed:
                continue
            ws = [w for w in graph.adj[x] if w in comp]
            if ws:
                step = (x, min(ws))
                break
        if step is None:
            raise CertificateError("no non-fixed vertex adjacent to the fixed component")
        x, w = step
        orbit = tuple(sorted(Gk.orbit(x)))
        S = comp | frozenset(orbit)
        Gk = Gk.pointwise_stabiliser(orbit)
        cert.steps.append(Step(x, w, orbit))
        cert.sets.append(S)
        cert.orders.append(Gk.order())
    cert.validate(graph)
    return cert
