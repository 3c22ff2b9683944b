"""Bundled fixtures: census triangulations, reduced formulas, reference values.

The gluing tables were decoded from the isomorphism signatures of the
orientable cusped census (see ``tools/make_fixtures.py``).  Reduced formulas
are sums over parametrized colorings of products of cocycle values, as
written out by hand for these manifolds; reference values are the closed
forms quoted alongside them, for the cyclic group ``Z_m`` listed here and a
generator of H^3(Z_m, U(1)).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .statesum import ReducedFormula
from .triangulation import Triangulation, parse_triangulation

__all__ = ["CENSUS", "CensusEntry", "load_formula", "load_triangulation", "pairs"]

_R5 = math.sqrt(5)
_R3 = math.sqrt(3)


@dataclass(frozen=True)
class CensusEntry:
    name: str
    isosig: str
    group_order: int
    reference: complex | None
    # a known number of positive (2,3) moves that reaches an orderable triangulation
    witness_moves: int | None = None


CENSUS: dict[str, CensusEntry] = {
    "m003": CensusEntry("m003", "cPcbbbudh_abBb", 5,
                        complex((5 + _R5) / 2, math.sqrt(10 + 2 * _R5) / 2), 5),
    "m004": CensusEntry("m004", "cPcbbblxu_bBba", 5, 1 + 0j, 0),
    "m006": CensusEntry("m006", "dwQacccjjsk_abBb", 5,
                        complex(-_R5 / 2, (math.sqrt(10 + 2 * _R5) - math.sqrt(10 - 2 * _R5)) / 4)),
    "m007": CensusEntry("m007", "dzQbcccxmgw_baab", 5, 1 + 0j),
    "m009": CensusEntry("m009", "dLQbcccxhwg_baBb", 3, 1 + 0j),
    "m010": CensusEntry("m010", "dLQbcccxhbr_bBba", 3, complex(0, -_R3)),
    "s778": CensusEntry("s778", "gvLQQddfeeffknaknaa_bBba", 12, -6 + 0j, 2),
    "s788": CensusEntry("s788", "gvLQQfcfdfeehrqrxrw_bBab", 12, complex(3 - 2 * _R3, 0), 3),
    "s3_double": CensusEntry("s3_double", "", 3, None),
}


def pairs() -> list[tuple[str, str]]:
    """Census pairs with equal volume that the invariant separates."""
    return [("m003", "m004"), ("m006", "m007"), ("m009", "m010"), ("s778", "s788")]


@lru_cache(maxsize=None)
def load_triangulation(name: str) -> Triangulation:
    path = resources.files("gendw") / "data" / "census" / f"{name}.json"
    return parse_triangulation(path.read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def load_formula(name: str) -> ReducedFormula:
    path = resources.files("gendw") / "data" / "formulas" / f"{name}.json"
    return ReducedFormula.from_json(path.read_text(encoding="utf-8"))
