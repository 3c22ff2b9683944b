"""Acceptance criteria, one test each.

Every test records a one-line verdict; the lines are printed in the pytest
terminal summary (and directly when this file is run as a script).
"""
from __future__ import annotations

import math
import time
from fractions import Fraction

import numpy as np
import pytest

from gendw.branching import find_branching, make_orderable
from gendw.census import CENSUS, load_formula, load_triangulation
from gendw.cohomology import (
    coboundary2,
    cochain_product,
    cyclic_generator_cocycle,
    cyclic_group,
    is_cocycle,
    random_cochain2,
)
from gendw.cyclotomic import CyclotomicNumber
from gendw.pachner import random_moves
from gendw.report import reproduce
from gendw.statesum import invariant, reduced_sum_oracle
from gendw.triangulation import mirror

RESULTS: dict[int, str] = {}
FIXTURES = list(CENSUS)
PAIRS = [("m003", "m004", 5), ("m006", "m007", 5), ("m009", "m010", 3), ("s778", "s788", 12)]


def record(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def Z(name: str, m: int, p: int, tri=None):
    return invariant(tri or load_triangulation(name), cyclic_group(m), cyclic_generator_cocycle(m, p))


def test_criterion_01_rock_solid_values():
    cases = [("m004", m) for m in (2, 3, 5, 12)] + [("m007", 5), ("m009", 3)]
    bad, slow = [], []
    for name, m in cases:
        for p in range(m):
            start = time.perf_counter()
            z = Z(name, m, p)
            elapsed = time.perf_counter() - start
            if z != 1:
                bad.append(f"{name}/Z{m}/p={p}: {z.approx()}")
            if elapsed >= 1.0:
                slow.append(f"{name}/Z{m}/p={p}: {elapsed:.2f}s")
    record(1, not bad and not slow,
           f"Z(m004)=1 over Z2,Z3,Z5,Z12; Z(m007)=1 over Z5; Z(m009)=1 over Z3 for all p"
           + (f"; wrong {bad}" if bad else "") + (f"; slow {slow}" if slow else ""))


def test_criterion_02_closed_forms():
    sweeps = {"m003": [1, 2, 3, 4], "m006": [1, 2, 3, 4], "m010": [1, 2],
              "s778": [1, 5, 7, 11], "s788": [1, 5, 7, 11]}
    verdicts, ok = [], True
    for name, powers in sweeps.items():
        rep = reproduce(name)
        hits = [p for p in rep.matching_powers if p in powers]
        if hits:
            verdicts.append(f"{name} matched at p={hits}")
            continue
        # fallback: no p matches, acceptable only if the state sum equals the formula everywhere
        agree = all(rep.formula_agrees)
        verdicts.append(f"{name} no p matches, state sum {'=' if agree else '!='} formula")
        ok &= agree
    record(2, ok, "; ".join(verdicts))


def test_criterion_03_distinguishing_power():
    start = time.perf_counter()
    same = []
    for a, b, m in PAIRS:
        for p in range(1, m):
            if math.gcd(p, m) != 1:
                continue
            if Z(a, m, p) == Z(b, m, p):
                same.append(f"{a}/{b} p={p}")
    elapsed = time.perf_counter() - start
    record(3, not same and elapsed < 10,
           f"pairs differ for every generator power p (gcd(p, m) = 1), {elapsed:.2f}s"
           + (f"; equal at {same}" if same else ""))


def test_criterion_04_oracle_equivalence():
    bad = []
    for name in [n for n in CENSUS if CENSUS[n].isosig]:
        rep = reproduce(name)
        wrong = [p for p, ok in enumerate(rep.formula_agrees) if not ok]
        if wrong:
            bad.append(f"{name} p={wrong}")
    record(4, not bad, "state sum = hand-written reduced formula for all p"
           + (f"; disagree at {'; '.join(bad)}" if bad else ""))


def test_criterion_05_move_invariance():
    bad, checks = [], 0
    for name in FIXTURES:
        m = CENSUS[name].group_order
        tri = load_triangulation(name)
        base = Z(name, m, 1)
        for seed in range(20):
            checks += 1
            if Z(name, m, 1, random_moves(tri, 4, seed=seed)) != base:
                bad.append(f"{name} seed {seed}")
    record(5, not bad, f"{checks} random (1,4)/(2,3)/(3,2) sequences"
           + (f"; changed at {bad[:3]}" if bad else ""))


def test_criterion_06_cohomology_invariance():
    rng = np.random.default_rng(2024)
    bad, checks = [], 0
    for name in FIXTURES:
        m = CENSUS[name].group_order
        group, alpha = cyclic_group(m), cyclic_generator_cocycle(m, 1)
        tri = load_triangulation(name)
        base = invariant(tri, group, alpha)
        for i in range(10):
            twisted = cochain_product(alpha, coboundary2(group, random_cochain2(group, m * m, rng)))
            checks += 1
            if invariant(tri, group, twisted) != base:
                bad.append(f"{name} #{i}")
    record(6, not bad, f"{checks} alpha vs alpha*d(beta) comparisons"
           + (f"; changed at {bad[:3]}" if bad else ""))


def test_criterion_07_mirror_law():
    bad = []
    for name in FIXTURES:
        m = CENSUS[name].group_order
        tri = load_triangulation(name)
        for p in range(m):
            if Z(name, m, p, mirror(tri)) != Z(name, m, p).conjugate():
                bad.append(f"{name} p={p}")
    record(7, not bad, "Z(-M) = conj Z(M) on all fixtures, all p"
           + (f"; broken at {bad}" if bad else ""))


def test_criterion_08_closed_manifold():
    bad = []
    for m in (2, 3, 5):
        for p in range(m):
            z = Z("s3_double", m, p)
            if z != CyclotomicNumber.from_rational(Fraction(1, m)):
                bad.append(f"Z{m} p={p}: {z}")
    record(8, not bad, "double-tetrahedron S^3 gives 1/|G| over Z2, Z3, Z5"
           + (f"; got {bad}" if bad else ""))


def test_criterion_09_cocycle_condition():
    bad, timing = [], {}
    for m in (2, 3, 5, 12):
        start = time.perf_counter()
        for p in range(m):
            if not is_cocycle(cyclic_group(m), cyclic_generator_cocycle(m, p)):
                bad.append(f"m={m} p={p}")
        timing[m] = time.perf_counter() - start
    record(9, not bad and timing[12] < 30,
           f"generator cocycles pass the full G^4 check, m=12 in {timing[12]:.2f}s"
           + (f"; failed {bad}" if bad else ""))


def test_criterion_10_ordering_pipeline():
    problems = []
    for name in ("m003", "s778", "s788"):
        if find_branching(load_triangulation(name)) is not None:
            problems.append(f"{name} unexpectedly orderable")
    if find_branching(load_triangulation("m004")) is None:
        problems.append("m004 not orderable")
    used = {}
    for name, bound in (("m003", 5), ("s778", 2), ("s788", 3)):
        _, moves, _ = make_orderable(load_triangulation(name))
        used[name] = len(moves)
        if len(moves) > bound:
            problems.append(f"{name} needed {len(moves)} > {bound}")
    record(10, not problems,
           "m003, s778, s788 not orderable, m004 orderable; moves used "
           + ", ".join(f"{k}={v}" for k, v in used.items())
           + (f"; {problems}" if problems else ""))


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
