"""Property suites over the bundled fixtures.

Each suite returns a :class:`SuiteResult`; the first exact mismatch stops
the suite and is kept as the counterexample.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .census import CENSUS, load_formula, load_triangulation
from .cohomology import (
    coboundary2,
    cochain_product,
    cyclic_generator_cocycle,
    cyclic_group,
    random_cochain2,
)
from .pachner import random_moves
from .statesum import compute, derive_formula, invariant, reduced_sum_oracle, state_sum
from .triangulation import mirror

__all__ = ["SUITES", "SuiteResult", "run_suite"]

MOVE_SEQUENCES = 20
MOVES_PER_SEQUENCE = 4
COBOUNDARIES = 10


@dataclass
class SuiteResult:
    suite: str
    checks: int = 0
    counterexample: str | None = None
    lines: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def report(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = [f"suite {self.suite}: {status} ({self.checks} checks)", *self.lines]
        if self.counterexample:
            out.append(f"counterexample: {self.counterexample}")
        return "\n".join(out)


def _fixtures(names: Iterable[str] | None):
    for name in names or CENSUS:
        m = CENSUS[name].group_order
        yield name, load_triangulation(name), cyclic_group(m), cyclic_generator_cocycle(m, 1)


def suite_moves(seed: int = 0, names=None) -> SuiteResult:
    res = SuiteResult("moves")
    for name, tri, group, alpha in _fixtures(names):
        base = invariant(tri, group, alpha)
        for i in range(MOVE_SEQUENCES):
            s = seed * 1000 + i
            moved = random_moves(tri, MOVES_PER_SEQUENCE, seed=s)
            value = invariant(moved, group, alpha)
            res.checks += 1
            if value != base:
                res.counterexample = f"{name} seed {s}: {value.approx()} != {base.approx()}"
                return res
        res.lines.append(f"  {name}: {MOVE_SEQUENCES} sequences, Z = {base.approx()}")
    return res


def suite_cohomology(seed: int = 0, names=None) -> SuiteResult:
    res = SuiteResult("cohomology")
    rng = np.random.default_rng(seed)
    for name, tri, group, alpha in _fixtures(names):
        base = invariant(tri, group, alpha)
        for i in range(COBOUNDARIES):
            beta = random_cochain2(group, alpha.modulus, rng)
            twisted = cochain_product(alpha, coboundary2(group, beta))
            value = invariant(tri, group, twisted)
            res.checks += 1
            if value != base:
                res.counterexample = f"{name} coboundary {i}: {value.approx()} != {base.approx()}"
                return res
        res.lines.append(f"  {name}: {COBOUNDARIES} coboundaries")
    return res


def suite_mirror(seed: int = 0, names=None) -> SuiteResult:
    res = SuiteResult("mirror")
    for name, tri, group, alpha in _fixtures(names):
        for p in range(group.order):
            alpha = cyclic_generator_cocycle(group.order, p)
            z = invariant(tri, group, alpha)
            zm = invariant(mirror(tri), group, alpha)
            res.checks += 1
            if zm != z.conjugate():
                res.counterexample = f"{name} p={p}: Z(-M) = {zm.approx()}, Z(M) = {z.approx()}"
                return res
        res.lines.append(f"  {name}: p = 0..{group.order - 1}")
    return res


def suite_oracle(seed: int = 0, names=None) -> SuiteResult:
    """State sum against the reduced formula derived from the same ordering."""
    res = SuiteResult("oracle")
    for name, tri, group, _ in _fixtures(names):
        branching = compute(tri, group, cyclic_generator_cocycle(group.order, 0)).branching
        formula = derive_formula(branching, name)
        for p in range(group.order):
            alpha = cyclic_generator_cocycle(group.order, p)
            z = state_sum(branching, group, alpha)
            o = reduced_sum_oracle(formula, group, alpha)
            res.checks += 1
            if z != o:
                res.counterexample = f"{name} p={p}: state sum {z.approx()} != oracle {o.approx()}"
                return res
        res.lines.append(f"  {name}: {len(formula.variables)} free variables, "
                         f"{len(formula.constraints)} constraints")
    return res


def suite_reference(seed: int = 0, names=None) -> SuiteResult:
    """State sum against the bundled hand-written reduced formulas."""
    res = SuiteResult("reference")
    for name, tri, group, _ in _fixtures(names or [n for n in CENSUS if CENSUS[n].isosig]):
        formula = load_formula(name)
        for p in range(group.order):
            alpha = cyclic_generator_cocycle(group.order, p)
            z = invariant(tri, group, alpha)
            o = reduced_sum_oracle(formula, group, alpha)
            res.checks += 1
            if z != o:
                res.counterexample = f"{name} p={p}: state sum {z.approx()} != formula {o.approx()}"
                return res
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "moves": suite_moves,
    "cohomology": suite_cohomology,
    "mirror": suite_mirror,
    "oracle": suite_oracle,
    "reference": suite_reference,
}


def run_suite(name: str, seed: int = 0, names=None) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(seed=seed, names=names)
