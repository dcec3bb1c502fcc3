from __future__ import annotations

import time

import pytest

from arcstab import catalog
from arcstab.constructions.covers import cover_tower
from arcstab.constructions.degree6 import all_hg_pairs, degree6_pair
from arcstab.constructions.twoblock import two_block_pair, two_block_setup
from arcstab.constructions.wreath import bipartite_base_pair, wreath_pair
from arcstab.f2linalg import nullity
from arcstab.graphs import automorphism_search
from arcstab.permgroup import has_two_block_system

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}

# fixture name -> wall-clock build time in seconds
BUILD_TIMES: dict[str, float] = {}

DEGREE6_LOCALS = ["A4(6)", "2A4(6)", "S4(6d*)", "S4(6c*)", "2S4(6)"]


def _two_block(name: str, ell: int, m: int):
    L = catalog.group(name)
    return two_block_pair(two_block_setup(L, has_two_block_system(L)), ell, m)


@pytest.fixture(scope="session")
def d6_sweep():
    start = time.perf_counter()
    out = {m: _two_block("D6", 1, m) for m in (2, 3, 4, 5)}
    BUILD_TIMES["d6_sweep"] = time.perf_counter() - start
    return out


@pytest.fixture(scope="session")
def d4_sweep():
    return {ell: _two_block("D4", ell, 2) for ell in (1, 2, 3)}


@pytest.fixture(scope="session")
def s3_tower():
    start = time.perf_counter()
    out = cover_tower(bipartite_base_pair(catalog.group("S3")), 1)
    BUILD_TIMES["s3_tower"] = time.perf_counter() - start
    return out


@pytest.fixture(scope="session")
def wreath_pairs(s3_tower):
    R = catalog.group("Z2")
    return [wreath_pair(R, base) for base in s3_tower]


@pytest.fixture(scope="session")
def hg_triples():
    """(graph name, graph, H, G) for every oracle hit on a catalog graph with nontrivial nullity."""
    out = []
    for entry in catalog.graph_entries():
        graph = entry.graph
        if graph.n > 20 or nullity(graph) == 0:
            continue
        for H, G in all_hg_pairs(graph, automorphism_search(graph)):
            out.append((entry.name, graph, H, G))
    return out


@pytest.fixture(scope="session")
def degree6_pairs(hg_triples):
    out = []
    for name, graph, H, G in hg_triples:
        for lname in DEGREE6_LOCALS:
            out.append((name, lname, degree6_pair(graph, H, G, catalog.group(lname))))
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
