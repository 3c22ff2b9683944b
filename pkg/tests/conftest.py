from __future__ import annotations

import itertools
import sys

import pytest

from gendw.branching import Branching
from gendw.census import CENSUS, load_triangulation
from gendw.triangulation import EDGE_INDEX, SWAP23, mirror

CENSUS_NAMES = [n for n, e in CENSUS.items() if e.isosig]
ALL_NAMES = list(CENSUS)

# the Gieseking manifold: one tetrahedron, all six edges in one class, non-orientable
GIESEKING = {
    "tets": 1,
    "gluings": [[
        {"tet": 0, "perm": [1, 2, 0, 3]},
        {"tet": 0, "perm": [2, 0, 1, 3]},
        {"tet": 0, "perm": [0, 2, 3, 1]},
        {"tet": 0, "perm": [0, 3, 1, 2]},
    ]],
}


def all_branchings(tri):
    """Every branching, by brute force over all edge-orientation vectors."""
    out = []
    for bits in itertools.product((1, -1), repeat=len(tri.edge_classes)):
        try:
            out.append(Branching(tri, bits))
        except ValueError:
            pass
    return out


def mirrored_branching(b: Branching):
    """The mirror triangulation with the same edge directions carried over."""
    tri = b.triangulation
    m = mirror(tri)
    # label x of every tet becomes SWAP23[x]
    bits = [0] * len(m.edge_classes)
    for t in range(tri.tet_count):
        for a in range(4):
            for c in range(a + 1, 4):
                sa, sc = SWAP23[a], SWAP23[c]
                cls, s = m.edge_lookup[(t, EDGE_INDEX[(sa, sc)])]
                bits[cls] = s if b.points_up(t, a, c) == (sa < sc) else -s
    return m, Branching(m, tuple(bits))


@pytest.fixture(scope="session")
def census():
    return {name: load_triangulation(name) for name in ALL_NAMES}


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
