"""Plain-text graph and group files, and pair bundles built from them.

Graph file: "n m" then m lines "u v" with u < v.
Group file: "degree n" then one generator per line, either n images or
"cycles: (0 2 4)(1 3 5)".
A pair bundle <stem>.pair is JSON naming the two files plus metadata.
"""

from __future__ import annotations

import json
from pathlib import Path

from .action import Pair
from .graphs import Graph
from .perm import Permutation
from .permgroup import PermGroup


class FormatError(ValueError):
    pass


def format_graph(graph: Graph) -> str:
    edges = graph.edges()
    lines = [f"{graph.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise FormatError("graph file must start with 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise FormatError(f"bad graph file: {exc}") from None
    if len(edges) != m:
        raise FormatError(f"header says {m} edges, found {len(edges)}")
    for u, v in edges:
        if not 0 <= u < v < n:
            raise FormatError(f"edge ({u}, {v}) violates 0 <= u < v < {n}")
    return Graph(n, edges)


def format_group(group: PermGroup, cycles: bool = False) -> str:
    lines = [f"degree {group.degree}"]
    for g in group.generators:
        lines.append(f"cycles: {g}" if cycles else " ".join(map(str, g.images)))
    return "\n".join(lines) + "\n"


def parse_group(text: str) -> PermGroup:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or not rows[0].startswith("degree"):
        raise FormatError("group file must start with 'degree n'")
    try:
        n = int(rows[0].split()[1])
    except (IndexError, ValueError):
        raise FormatError(f"bad degree line {rows[0]!r}") from None
    gens = []
    for row in rows[1:]:
        try:
            if row.startswith("cycles:"):
                gens.append(Permutation.parse_cycles(row[len("cycles:"):], n))
            else:
                gens.append(Permutation(int(x) for x in row.split()))
        except ValueError as exc:
            raise FormatError(f"bad generator line {row!r}: {exc}") from None
        if gens[-1].degree != n:
            raise FormatError(f"generator {row!r} has degree {gens[-1].degree}, expected {n}")
    return PermGroup(gens, n)


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def read_group(path: str | Path) -> PermGroup:
    return parse_group(Path(path).read_text())


def write_pair(pair: Pair, stem: str | Path, info: dict | None = None) -> Path:
    """Write <stem>.graph, <stem>.group and <stem>.pair; returns the .pair path."""
    stem = Path(stem)
    stem.parent.mkdir(parents=True, exist_ok=True)
    gpath, grppath, ppath = stem.with_suffix(".graph"), stem.with_suffix(".group"), stem.with_suffix(".pair")
    gpath.write_text(format_graph(pair.graph))
    grppath.write_text(format_group(pair.group))
    meta = {"label": pair.label, "graph": gpath.name, "group": grppath.name}
    local = pair.meta.get("local_group")
    if isinstance(local, PermGroup):
        meta["local_group"] = [str(g) for g in local.generators]
        meta["local_degree"] = local.degree
    meta.update(info or {})
    ppath.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return ppath


def read_pair(path: str | Path) -> tuple[Pair, dict]:
    path = Path(path)
    if path.suffix != ".pair":
        path = path.with_suffix(".pair")
    try:
        meta = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from None
    graph = read_graph(path.parent / meta["graph"])
    group = read_group(path.parent / meta["group"])
    pair = Pair(graph, group, label=meta.get("label", ""))
    if "local_group" in meta:
        d = meta["local_degree"]
        pair.meta["local_group"] = PermGroup([Permutation.parse_cycles(c, d) for c in meta["local_group"]], d)
    return pair, meta
