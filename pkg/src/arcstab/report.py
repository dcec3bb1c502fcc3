"""Analysis rows for constructed pairs and finite-sample growth trends."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass

from . import catalog
from .action import Pair, arc_stabiliser, is_locally, local_group
from .bounds import bound_value, smallest_prime_factor
from .graphs import automorphism_search
from .permgroup import PermGroup, is_perm_isomorphic

CSV_COLUMNS = [
    "construction", "params", "n", "valency", "group_order", "vertex_stab",
    "arc_stab", "local_group", "bound_p", "bound_value", "ok",
]


@dataclass
class AnalysisReport:
    construction: str
    params: str
    n: int
    valency: int
    group_order: int
    vertex_stab: int
    arc_stab: int
    local_group: str
    bound_p: int
    bound_value: int
    ok: bool
    aut_order: int | None = None
    checks: dict | None = None

    def csv_row(self) -> dict:
        row = {k: v for k, v in asdict(self).items() if k in CSV_COLUMNS}
        row["ok"] = "true" if self.ok else "false"
        return row

    def text(self) -> str:
        lines = [
            f"construction: {self.construction} ({self.params})",
            f"n = {self.n}, valency = {self.valency}, |Aut| = {self.aut_order if self.aut_order else 'not computed'}",
            f"|G| = {self.group_order}, |G_v| = {self.vertex_stab}, |G_uv| = {self.arc_stab}",
            f"local group: {self.local_group}",
            f"bound: p = {self.bound_p}, |L_w|^floor((n-2)/p) = {self.bound_value}",
        ]
        for name, passed in (self.checks or {}).items():
            lines.append(f"  [{'pass' if passed else 'FAIL'}] {name}")
        lines.append(f"ok: {self.ok}")
        return "\n".join(lines)


def name_local_group(L: PermGroup) -> str:
    for entry in catalog.entries():
        if entry.degree == L.degree and entry.order == L.order():
            if is_perm_isomorphic(L, entry.group) is not None:
                return entry.name
    return f"order {L.order()} degree {L.degree}"


def analyze_pair(
    pair: Pair,
    construction: str = "",
    params: str = "",
    expected_local: PermGroup | None = None,
    aut_limit: int = 64,
    extra_checks: dict | None = None,
) -> AnalysisReport:
    graph, G = pair.graph, pair.group
    n = graph.n
    valency = graph.valency()
    order = G.order()
    Gv = G.point_stabiliser(0).order()
    w = graph.neighbours(0)[0]
    Guv = arc_stabiliser(pair, 0, w).order()
    loc = local_group(pair, 0).group
    stab = loc.order() // loc.degree
    p = smallest_prime_factor(stab) if stab > 1 else 2
    checks = {
        "vertex-transitive": pair.vertex_transitive,
        "arc-transitive": pair.arc_transitive,
        "|G| = n |G_v|": order == n * Gv,
        "|G| = arcs |G_uv|": order == graph.num_arcs() * Guv,
        "|G_uv| <= bound": Guv <= bound_value(stab, n, p),
    }
    if expected_local is None:
        expected_local = pair.meta.get("local_group")
    if expected_local is not None:
        checks["locally-L"] = is_locally(pair, expected_local)
    checks.update(extra_checks or {})
    aut = automorphism_search(graph).order() if n <= aut_limit else None
    return AnalysisReport(
        construction=construction or pair.meta.get("construction", pair.label or "pair"),
        params=params,
        n=n,
        valency=valency,
        group_order=order,
        vertex_stab=Gv,
        arc_stab=Guv,
        local_group=name_local_group(loc),
        bound_p=p,
        bound_value=bound_value(stab, n, p),
        ok=all(checks.values()),
        aut_order=aut,
        checks=checks,
    )


def reports_to_csv(reports: list[AnalysisReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.csv_row())
    return buf.getvalue()


# growth trends ---------------------------------------------------------------

@dataclass
class GrowthTrend:
    ns: list[int]
    arc_stabs: list[int]
    log_ratio: list[float]        # log|G_uv| / log n
    lin_ratio: list[float]        # log|G_uv| / n
    loglog_slope: float           # slope of log|G_uv| against log n over the largest half
    verdict: str

    def text(self) -> str:
        lines = ["n, |G_uv|, log|G_uv|/log n, log|G_uv|/n"]
        for n, a, r1, r2 in zip(self.ns, self.arc_stabs, self.log_ratio, self.lin_ratio):
            lines.append(f"{n}, {a}, {r1:.4f}, {r2:.5f}")
        lines.append(f"slope of log|G_uv| vs log n (largest half): {self.loglog_slope:.4f}")
        lines.append(f"trend: {self.verdict} (finite-sample trend, not a proof)")
        return "\n".join(lines)


def is_increasing(xs: list[float]) -> bool:
    return all(a < b for a, b in zip(xs, xs[1:]))


def is_decreasing(xs: list[float]) -> bool:
    return all(a > b for a, b in zip(xs, xs[1:]))


def _slope(xs: list[float], ys: list[float]) -> float:
    if len(xs) < 2:
        return 0.0
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    den = sum((x - mx) ** 2 for x in xs)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / den if den else 0.0


def growth_trend(points: list[tuple[int, int]]) -> GrowthTrend:
    """Trend of |G_uv| against n; points are (n, |G_uv|)."""
    pts = sorted(points)
    if len(pts) < 2:
        raise ValueError("need at least two sample points")
    ns = [n for n, _ in pts]
    arcs = [a for _, a in pts]
    logs = [math.log(a) for a in arcs]
    log_ratio = [la / math.log(n) for la, n in zip(logs, ns)]
    lin_ratio = [la / n for la, n in zip(logs, ns)]
    half = pts[(len(pts) - 1) // 2:]
    slope = _slope([math.log(n) for n, _ in half], [math.log(a) for _, a in half])
    tail = lin_ratio[(len(lin_ratio) - 1) // 2:]
    if len(set(arcs)) == 1:
        verdict = "Cons-like"
    elif min(tail) > 0 and min(tail) >= 0.5 * max(tail):
        verdict = "Exp-like"
    else:
        verdict = "Pol-like"
    return GrowthTrend(ns, arcs, log_ratio, lin_ratio, slope, verdict)


def read_growth_csv(text: str) -> list[tuple[int, int]]:
    reader = csv.DictReader(io.StringIO(text))
    if not reader.fieldnames or "n" not in reader.fieldnames or "arc_stab" not in reader.fieldnames:
        raise ValueError("CSV needs 'n' and 'arc_stab' columns")
    return [(int(r["n"]), int(r["arc_stab"])) for r in reader]
