"""Command-line interface: build constructions, analyze pairs, sweep, explain bounds."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import catalog
from .action import NotAutomorphismError
from .bounds import CertificateError, exp_bound_certificate
from .constructions.covers import LiftError, cover_tower
from .constructions.degree6 import HypothesisError, SandwichError, degree6_pair, find_hg_pair
from .constructions.twoblock import IdentityCheckError, two_block_pair, two_block_setup
from .constructions.wreath import bipartite_base_pair, check_wreath_pair, wreath_pair
from .io import FormatError, read_graph, read_group, read_pair, write_pair
from .permgroup import BlockSystem, GroupTooLargeError, PermGroup, UndecidedError, has_two_block_system
from .report import analyze_pair, growth_trend, read_growth_csv, reports_to_csv


class CliError(Exception):
    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)


def _load_group(name: str) -> PermGroup:
    if Path(name).is_file():
        return read_group(name)
    return catalog.group(name)


def _load_graph(name: str):
    if Path(name).is_file():
        return read_graph(name)
    return catalog.get_graph(name).graph


def parse_range(text: str) -> list[int]:
    """'2..5' -> [2, 3, 4, 5]; '1,3' -> [1, 3]; '4' -> [4]."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise CliError("bad-args", f"cannot parse range {text!r}") from None


def _parse_blocks(text: str, L: PermGroup) -> BlockSystem:
    if text == "auto":
        bs = has_two_block_system(L)
        if bs is None:
            raise CliError("no-two-block-system", "group has no system of two blocks")
        return bs
    try:
        cells = tuple(tuple(sorted(int(x) for x in part.split(","))) for part in text.split("/"))
    except ValueError:
        raise CliError("bad-args", f"cannot parse blocks {text!r}; use e.g. 0,2,4/1,3,5") from None
    return BlockSystem(cells)


def _finish_build(pair, construction: str, params: str, out: str | None, extra: dict) -> int:
    report = analyze_pair(pair, construction, params, extra_checks=extra)
    stem = out or f"{construction}"
    path = write_pair(pair, stem, {"construction": construction, "params": params, "ok": report.ok})
    print(report.text())
    print(f"wrote {path}")
    return 0 if report.ok else 1


def cmd_build_wreath(args) -> int:
    R = _load_group(args.r)
    T = _load_group(args.base_t)
    base = bipartite_base_pair(T)
    tower = cover_tower(base, args.covers)
    pair = wreath_pair(R, tower[-1])
    res = check_wreath_pair(pair)
    params = f"R={args.r};T={args.base_t};covers={args.covers}"
    return _finish_build(pair, "wreath", params, args.out, {"arc-stabiliser formula": res["ok"]})


def cmd_build_two_block(args) -> int:
    L = _load_group(args.group)
    inp = two_block_setup(L, _parse_blocks(args.blocks, L))
    pair = two_block_pair(inp, args.l, args.m)
    params = f"L={args.group};l={args.l};m={args.m}"
    ok = pair.meta["arc_stab"] == pair.meta["expected_arc_stab"]
    return _finish_build(pair, "two-block", params, args.out, {"arc-stabiliser formula": ok})


def cmd_build_degree6(args) -> int:
    graph = _load_graph(args.graph)
    if args.h == "search" or args.g == "search":
        found = find_hg_pair(graph, seed=args.seed)
        if found is None:
            raise CliError("search-failed", "no arc-regular H inside a 2-arc-regular G was found")
        H, G = found
    if args.h != "search":
        H = read_group(args.h)
    if args.g != "search":
        G = read_group(args.g)
    L = _load_group(args.local)
    pair = degree6_pair(graph, H, G, L)
    params = f"graph={args.graph};L={args.local}"
    ok = pair.meta["arc_stab"] == pair.meta["expected_arc_stab"]
    return _finish_build(pair, "degree6", params, args.out, {"arc-stabiliser formula": ok})


def cmd_analyze(args) -> int:
    reports = []
    for path in args.pairs:
        pair, meta = read_pair(path)
        reports.append(analyze_pair(pair, meta.get("construction", ""), meta.get("params", "")))
    if args.csv:
        text = reports_to_csv(reports)
        if args.csv == "-":
            sys.stdout.write(text)
        else:
            Path(args.csv).write_text(text)
    else:
        print("\n\n".join(r.text() for r in reports))
    return 0 if all(r.ok for r in reports) else 1


def _sweep_point(job: tuple[str, int, int]):
    name, ell, m = job
    L = _load_group(name)
    inp = two_block_setup(L, has_two_block_system(L))
    pair = two_block_pair(inp, ell, m)
    ok = pair.meta["arc_stab"] == pair.meta["expected_arc_stab"]
    return analyze_pair(pair, "two-block", f"L={name};l={ell};m={m}", aut_limit=0,
                        extra_checks={"arc-stabiliser formula": ok})


def cmd_sweep_two_block(args) -> int:
    L = _load_group(args.group)
    if has_two_block_system(L) is None:
        raise CliError("no-two-block-system", "group has no system of two blocks")
    jobs = [(args.group, ell, m) for ell in parse_range(args.l) for m in parse_range(args.m)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_sweep_point, jobs))
    else:
        reports = [_sweep_point(j) for j in jobs]
    text = reports_to_csv(reports)
    if args.csv and args.csv != "-":
        Path(args.csv).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.ok for r in reports) else 1


def cmd_classify_growth(args) -> int:
    points = read_growth_csv(Path(args.csv).read_text())
    print(growth_trend(points).text())
    return 0


def cmd_explain_bound(args) -> int:
    pair, _ = read_pair(args.pair)
    if args.arc:
        try:
            u, v = (int(x) for x in args.arc.split(","))
        except ValueError:
            raise CliError("bad-args", f"cannot parse arc {args.arc!r}; use u,v") from None
    else:
        u, v = 0, pair.graph.neighbours(0)[0]
    cert = exp_bound_certificate(pair, u, v)
    print("\n".join(cert.trace()))
    return 0


def cmd_catalog_list(args) -> int:
    if args.graphs:
        for g in catalog.graph_entries():
            print(f"{g.name}\t|Aut|={g.aut_order}\tnullity={g.nullity}\t{g.note}")
        return 0
    for e in catalog.entries():
        print(f"{e.name}\tdegree={e.degree}\torder={e.order}\t{e.graph_type}\t{e.note}")
    return 0


def cmd_classify(args) -> int:
    tag, reason = catalog.classify_with_reason(_load_group(args.group))
    print(f"{tag}\t{reason}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arcstab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="build a construction and write pair files")
    bsub = build.add_subparsers(dest="kind", required=True)

    w = bsub.add_parser("wreath", help="cover tower over K_{k,k} followed by a wreath product")
    w.add_argument("--r", default="Z2", help="group name or group file for R")
    w.add_argument("--base-t", default="S3", help="group name for T")
    w.add_argument("--covers", type=int, default=0)
    w.add_argument("--out")
    w.set_defaults(func=cmd_build_wreath)

    t = bsub.add_parser("two-block", help="pair on a Praeger-Xu graph for a two-block group")
    t.add_argument("--group", required=True)
    t.add_argument("--blocks", default="auto", help="auto or cells like 0,2,4/1,3,5")
    t.add_argument("--l", type=int, default=1)
    t.add_argument("--m", type=int, default=2)
    t.add_argument("--out")
    t.set_defaults(func=cmd_build_two_block)

    d = bsub.add_parser("degree6", help="pair on Gamma[2K1] for a degree-6 local group")
    d.add_argument("--graph", required=True)
    d.add_argument("--h", default="search", help="group file or 'search'")
    d.add_argument("--g", default="search", help="group file or 'search'")
    d.add_argument("--local", required=True)
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--out")
    d.set_defaults(func=cmd_build_degree6)

    a = sub.add_parser("analyze", help="report on pair files")
    a.add_argument("pairs", nargs="+")
    a.add_argument("--csv", help="write CSV to this path ('-' for stdout)")
    a.set_defaults(func=cmd_analyze)

    sw = sub.add_parser("sweep", help="parameter sweeps")
    swsub = sw.add_subparsers(dest="kind", required=True)
    st = swsub.add_parser("two-block")
    st.add_argument("--group", required=True)
    st.add_argument("--m", default="2..4")
    st.add_argument("--l", default="1")
    st.add_argument("--csv")
    st.add_argument("--jobs", type=int, default=1)
    st.set_defaults(func=cmd_sweep_two_block)

    g = sub.add_parser("classify-growth", help="finite-sample growth trend of a sweep CSV")
    g.add_argument("csv")
    g.set_defaults(func=cmd_classify_growth)

    e = sub.add_parser("explain-bound", help="print the bound certificate for an arc")
    e.add_argument("pair")
    e.add_argument("--arc")
    e.set_defaults(func=cmd_explain_bound)

    c = sub.add_parser("catalog", help="embedded groups and graphs")
    csub = c.add_subparsers(dest="kind", required=True)
    cl = csub.add_parser("list")
    cl.add_argument("--graphs", action="store_true")
    cl.set_defaults(func=cmd_catalog_list)

    cg = sub.add_parser("classify", help="predicted graph-type of a group of degree <= 7")
    cg.add_argument("--group", required=True)
    cg.set_defaults(func=cmd_classify)
    return parser


_ERROR_CODES = [
    (CliError, None),
    (catalog.UnknownEntryError, "unknown-name"),
    (HypothesisError, None),
    (IdentityCheckError, "identity-check"),
    (SandwichError, "sandwich"),
    (CertificateError, "certificate"),
    (GroupTooLargeError, "too-large"),
    (UndecidedError, "undecided"),
    (NotAutomorphismError, "not-automorphism"),
    (LiftError, "lift"),
    (FormatError, "bad-file"),
    (OSError, "io"),
    (AssertionError, "invariant"),
    (ValueError, "bad-input"),
]


def _error_line(exc: Exception) -> str:
    for cls, code in _ERROR_CODES:
        if isinstance(exc, cls):
            if isinstance(exc, CliError):
                code = exc.code
            elif isinstance(exc, HypothesisError):
                return f"error: hypothesis-{exc.code}: {str(exc).split(': ', 1)[-1]}"
            msg = exc.args[0] if exc.args else type(exc).__name__
            return f"error: {code}: {msg}"
    raise exc


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:  # noqa: BLE001 - mapped to single-line error codes
        print(_error_line(exc).replace("\n", " "), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
