"""Embedded transitive groups of small degree and small cubic arc-transitive graphs.

Graph-type tags: "Cons", "Pol", "Exp" and "Subexp or Exp" (undecided).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import graphs as gr
from .perm import Permutation
from .permgroup import PermGroup, is_perm_isomorphic, is_primitive, two_block_systems

CONS, POL, EXP, UNDECIDED = "Cons", "Pol", "Exp", "Subexp or Exp"


class UnknownEntryError(KeyError):
    pass


class UnsupportedDegreeError(ValueError):
    pass


def _p(text: str, n: int) -> Permutation:
    return Permutation.parse_cycles(text, n)


# the degree-6 generators; the five groups between A4(6) and 2S4(6) are built from them
a6 = _p("(0 2 4)(1 3 5)", 6)
b6 = _p("(1 5)(2 4)", 6)
e6 = _p("(1 4)(2 5)", 6)
f6 = _p("(0 3)", 6)


@dataclass
class CatalogEntry:
    name: str
    degree: int
    generators: list[Permutation]
    order: int
    graph_type: str
    note: str
    primitive: bool = False
    regular: bool = False
    two_block: bool = False
    _group: PermGroup | None = field(default=None, repr=False)

    @property
    def group(self) -> PermGroup:
        if self._group is None:
            self._group = PermGroup(self.generators, self.degree)
        return self._group

    def verify(self) -> None:
        G = self.group
        problems = []
        if G.order() != self.order:
            problems.append(f"order {G.order()} != declared {self.order}")
        if not G.is_transitive():
            problems.append("not transitive")
        if is_primitive(G) != self.primitive:
            problems.append(f"primitive={not self.primitive} but declared {self.primitive}")
        if (G.order() == G.degree) != self.regular:
            problems.append(f"regular flag {self.regular} is wrong")
        if bool(two_block_systems(G)) != self.two_block:
            problems.append(f"two-block flag {self.two_block} is wrong")
        if problems:
            raise AssertionError(f"catalog entry {self.name}: " + "; ".join(problems))


def _entry(name, degree, gens, order, gtype, note, **flags) -> CatalogEntry:
    return CatalogEntry(name, degree, [_p(g, degree) if isinstance(g, str) else g for g in gens],
                        order, gtype, note, **flags)


_GROUPS: list[CatalogEntry] = [
    # spot examples of the regular / primitive bucket
    _entry("Z2", 2, ["(0 1)"], 2, CONS, "regular", primitive=True, regular=True, two_block=True),
    _entry("Z3", 3, ["(0 1 2)"], 3, CONS, "regular", primitive=True, regular=True),
    _entry("S3", 3, ["(0 1 2)", "(0 1)"], 6, CONS, "natural action, primitive", primitive=True),
    _entry("Z4", 4, ["(0 1 2 3)"], 4, CONS, "regular", regular=True, two_block=True),
    _entry("V4", 4, ["(0 1)(2 3)", "(0 2)(1 3)"], 4, CONS, "regular", regular=True, two_block=True),
    _entry("A4", 4, ["(0 1 2)", "(1 2 3)"], 12, CONS, "natural action, primitive", primitive=True),
    _entry("S4", 4, ["(0 1 2 3)", "(0 1)"], 24, CONS, "natural action, primitive", primitive=True),
    _entry("D5", 5, ["(0 1 2 3 4)", "(1 4)(2 3)"], 10, CONS, "prime degree", primitive=True),
    _entry("A5", 5, ["(0 1 2 3 4)", "(0 1 2)"], 60, CONS, "natural action, primitive", primitive=True),
    _entry("C6", 6, ["(0 1 2 3 4 5)"], 6, CONS, "regular", regular=True, two_block=True),
    _entry("S3(6)", 6, ["(0 2 4)(1 5 3)", "(0 1)(2 5)(3 4)"], 6, CONS, "regular action of S3",
           regular=True, two_block=True),
    _entry("PSL(2,5)", 6, ["(0 1 2 3 4)", "(0 5)(1 4)"], 60, CONS, "projective line over F5, primitive",
           primitive=True),
    _entry("F21", 7, ["(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"], 21, CONS, "affine, prime degree", primitive=True),
    _entry("PSL(3,2)", 7, ["(0 1 2 3 4 5 6)", "(2 4)(5 6)"], 168, CONS, "Fano plane, primitive", primitive=True),
    # imprimitive, degree 4 and 6
    _entry("D4", 4, ["(0 1 2 3)", "(1 3)"], 8, EXP, "permutation isomorphic to Z2 wr Z2", two_block=True),
    _entry("D6", 6, ["(0 1 2 3 4 5)", "(1 5)(2 4)"], 12, POL, "dihedral; two-block system with trivial L_(A)",
           two_block=True),
    _entry("Z3wrZ2", 6, ["(0 1 2)", "(0 3)(1 4)(2 5)"], 18, EXP, "imprimitive wreath product", two_block=True),
    _entry("S3wrZ2", 6, ["(0 1 2)", "(0 1)", "(0 3)(1 4)(2 5)"], 72, EXP, "imprimitive wreath product",
           two_block=True),
    _entry("F18(6):2", 6, ["(0 1 2)", "(3 4 5)", "(0 1)(3 4)", "(0 3)(1 4)(2 5)"], 36, EXP,
           "two-block system with nontrivial L_(A)", two_block=True),
    _entry("F36(6)", 6, ["(0 1 2)", "(3 4 5)", "(0 3 1 4)(2 5)"], 36, EXP,
           "two-block system with nontrivial L_(A)", two_block=True),
    _entry("A4(6)", 6, [a6, e6], 12, UNDECIDED, "<a,e>; index 2 in Z2 wr Z3"),
    _entry("2A4(6)", 6, [a6, e6, f6], 24, EXP, "<a,e,f>; the intermediate with centre of order 2, "
           "permutation isomorphic to Z2 wr Z3"),
    _entry("S4(6d*)", 6, [a6, e6, b6], 24, UNDECIDED,
           "<a,e,b>; centre-free intermediate inside A6 (c/d naming is a convention)"),
    _entry("S4(6c*)", 6, [a6, e6, f6 * b6], 24, UNDECIDED,
           "<a,e,fb>; centre-free intermediate not inside A6 (c/d naming is a convention)"),
    _entry("2S4(6)", 6, [f6, a6, b6], 48, EXP, "<f,a,b>; permutation isomorphic to Z2 wr S3"),
]

_ALIASES = {
    "Z2wrZ2": "D4", "Z2wrZ3": "2A4(6)", "Z2wrS3": "2S4(6)", "S4(6d)": "S4(6d*)", "S4(6c)": "S4(6c*)",
}

_BY_NAME = {e.name: e for e in _GROUPS}


def get(name: str) -> CatalogEntry:
    key = _ALIASES.get(name, name)
    if key not in _BY_NAME:
        raise UnknownEntryError(f"unknown group {name!r}; available: {', '.join(names())}")
    return _BY_NAME[key]


def names() -> list[str]:
    return [e.name for e in _GROUPS]


def entries() -> list[CatalogEntry]:
    return list(_GROUPS)


def group(name: str) -> PermGroup:
    return get(name).group


def intermediate_names() -> list[str]:
    """The five groups L with A4(6) <= L <= 2S4(6)."""
    return ["A4(6)", "2A4(6)", "S4(6d*)", "S4(6c*)", "2S4(6)"]


# classification ---------------------------------------------------------------

def classify_with_reason(L: PermGroup) -> tuple[str, str]:
    n = L.degree
    if n > 7:
        raise UnsupportedDegreeError(f"classification covers degree <= 7, got {n}")
    if not L.is_transitive():
        raise ValueError("classification needs a transitive group")
    if n <= 1 or L.order() == n:
        return CONS, "regular"
    if is_primitive(L):
        return CONS, "primitive"
    if n == 4:
        return EXP, "degree 4, imprimitive and not regular: permutation isomorphic to Z2 wr Z2"
    # remaining case: degree 6, imprimitive, not regular
    systems = two_block_systems(L)
    if systems:
        for bs in systems:
            if L.pointwise_stabiliser(bs.cells[0]).order() > 1:
                return EXP, f"two-block system {bs.cells} with nontrivial pointwise stabiliser of a block"
        if is_perm_isomorphic(L, group("D6")) is None:
            raise AssertionError("two-block group with trivial block stabiliser is not D6")
        return POL, "two-block system, every block has trivial pointwise stabiliser (D6)"
    from .constructions.wreath import wreath_product

    z2 = PermGroup([_p("(0 1)", 2)])
    for top in ("S3", "Z3"):
        if is_perm_isomorphic(L, wreath_product(z2, group(top))) is not None:
            return EXP, f"no two-block system; permutation isomorphic to Z2 wr {top}"
    return UNDECIDED, "no two-block system and not a wreath product"


def classify_group(L: PermGroup) -> str:
    return classify_with_reason(L)[0]


# cubic graphs -------------------------------------------------------------------

@dataclass(frozen=True)
class GraphEntry:
    name: str
    build: Callable[[], gr.Graph]
    aut_order: int
    nullity: int
    note: str

    @property
    def graph(self) -> gr.Graph:
        return self.build()


_GRAPHS: list[GraphEntry] = [
    GraphEntry("K4", lambda: gr.complete_graph(4), 24, 0, "complete graph"),
    GraphEntry("K33", lambda: gr.complete_bipartite(3), 72, 4, "complete bipartite"),
    GraphEntry("cube", lambda: gr.lcf_graph([3, -3], 4), 48, 0, "3-cube"),
    GraphEntry("Petersen", lambda: gr.generalized_petersen(5, 2), 120, 4, "generalized Petersen GP(5,2)"),
    GraphEntry("Heawood", lambda: gr.lcf_graph([5, -5], 7), 336, 6, "LCF [5,-5]^7"),
    GraphEntry("Moebius-Kantor", lambda: gr.lcf_graph([5, -5], 8), 96, 0, "LCF [5,-5]^8"),
    GraphEntry("Pappus", lambda: gr.lcf_graph([5, 7, -7, 7, -7, -5], 3), 216, 4, "LCF [5,7,-7,7,-7,-5]^3"),
    GraphEntry("Desargues", lambda: gr.lcf_graph([5, -5, 9, -9], 5), 240, 8, "LCF [5,-5,9,-9]^5"),
    GraphEntry("dodecahedron", lambda: gr.lcf_graph([10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2), 120, 4,
               "LCF [10,7,4,-4,-7,10,-4,7,-7,4]^2"),
]

_GRAPH_ALIASES = {"K3,3": "K33", "Mobius-Kantor": "Moebius-Kantor", "MK": "Moebius-Kantor"}
_GRAPHS_BY_NAME = {g.name: g for g in _GRAPHS}


def get_graph(name: str) -> GraphEntry:
    key = _GRAPH_ALIASES.get(name, name)
    if key not in _GRAPHS_BY_NAME:
        raise UnknownEntryError(f"unknown graph {name!r}; available: {', '.join(graph_names())}")
    return _GRAPHS_BY_NAME[key]


def graph_names() -> list[str]:
    return [g.name for g in _GRAPHS]


def graph_entries() -> list[GraphEntry]:
    return list(_GRAPHS)
