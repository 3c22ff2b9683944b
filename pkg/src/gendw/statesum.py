"""Colorings, tetrahedron symbols and the generalized Dijkgraaf-Witten sum.

A coloring assigns to each edge class a group element read along the
class's canonical direction.  Around every face a<b<c it satisfies
phi(a->b) phi(b->c) = phi(a->c), where reading an edge against a direction
inverts its color.  With the branching order v0<v1<v2<v3 of a tetrahedron
its symbol is alpha(phi(v0->v1), phi(v1->v2), phi(v2->v3)) ** eps.
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Iterator, Sequence

from .branching import DEFAULT_MAX_MOVES, Branching, face_constraints, find_branching, make_orderable
from .cohomology import Cochain3, FiniteGroup, check_cocycle
from .cyclotomic import CyclotomicNumber, root_of_unity
from .triangulation import EDGE_INDEX, Triangulation

__all__ = [
    "Coloring",
    "InvariantResult",
    "ReducedFormula",
    "compute",
    "derive_formula",
    "enumerate_colorings",
    "invariant",
    "parse_word",
    "reduced_sum_oracle",
    "state_sum",
    "symbol",
    "symbol_exponent",
]

Coloring = tuple[int, ...]


def enumerate_colorings(tri: Triangulation, group: FiniteGroup) -> list[Coloring]:
    """All colorings, in lexicographic order of the color tuple.

    Depth-first over edge classes (most constrained first); a face with two
    known edges forces the third.
    """
    mul = group.table.tolist()
    inv = group.inverse.tolist()
    n_edges = len(tri.edge_classes)
    constraints = face_constraints(tri)
    touching: list[list[int]] = [[] for _ in range(n_edges)]
    for i, cons in enumerate(constraints):
        for c in {c for c, _ in cons}:
            touching[c].append(i)
    order = sorted(range(n_edges), key=lambda c: (-len(touching[c]), c))
    color = [-1] * n_edges
    found: list[Coloring] = []

    def along(c: int, s: int) -> int:
        return color[c] if s > 0 else inv[color[c]]

    def propagate(start: int, trail: list[int]) -> bool:
        stack = [start]
        while stack:
            c0 = stack.pop()
            for i in touching[c0]:
                (ca, sa), (cb, sb), (cc, sc) = constraints[i]
                known = (color[ca] >= 0, color[cb] >= 0, color[cc] >= 0)
                if all(known):
                    if mul[along(ca, sa)][along(cb, sb)] != along(cc, sc):
                        return False
                    continue
                missing = [k for k, ok in enumerate(known) if not ok]
                if len({constraints[i][k][0] for k in missing}) != 1 or len(missing) != 1:
                    continue
                k = missing[0]
                if k == 0:
                    x = mul[along(cc, sc)][inv[along(cb, sb)]]
                elif k == 1:
                    x = mul[inv[along(ca, sa)]][along(cc, sc)]
                else:
                    x = mul[along(ca, sa)][along(cb, sb)]
                c, s = constraints[i][k]
                color[c] = x if s > 0 else inv[x]
                trail.append(c)
                stack.append(c)
        return True

    def search(pos: int) -> None:
        while pos < n_edges and color[order[pos]] >= 0:
            pos += 1
        if pos == n_edges:
            found.append(tuple(color))
            return
        c = order[pos]
        for g in range(group.order):
            color[c] = g
            trail = [c]
            if propagate(c, trail):
                search(pos + 1)
            for d in trail:
                color[d] = -1

    search(0)
    found.sort()
    return found


def _tet_readers(branching: Branching) -> list[tuple[tuple[int, bool], ...]]:
    # for each tet: (class, invert?) for the edges v0v1, v1v2, v2v3
    tri = branching.triangulation
    out = []
    for t, order in enumerate(branching.vertex_orders):
        spec = []
        for a, b in zip(order, order[1:]):
            c, s = tri.edge_lookup[(t, EDGE_INDEX[(a, b)])]
            spec.append((c, (s > 0) != (a < b)))
        out.append(tuple(spec))
    return out


def symbol_exponent(branching: Branching, t: int, coloring: Coloring, group: FiniteGroup,
                    alpha: Cochain3) -> int:
    """Exponent of zeta_N in the symbol of tetrahedron ``t``."""
    args = []
    for c, flip in _tet_readers(branching)[t]:
        args.append(group.inv(coloring[c]) if flip else coloring[c])
    return branching.signs[t] * alpha(*args) % alpha.modulus


def symbol(branching: Branching, t: int, coloring: Coloring, group: FiniteGroup,
           alpha: Cochain3) -> CyclotomicNumber:
    return root_of_unity(alpha.modulus, symbol_exponent(branching, t, coloring, group, alpha))


def state_sum(branching: Branching, group: FiniteGroup, alpha: Cochain3,
              colorings: Sequence[Coloring] | None = None) -> CyclotomicNumber:
    """|G|^-a times the sum over colorings of the product of symbols."""
    tri = branching.triangulation
    if colorings is None:
        colorings = enumerate_colorings(tri, group)
    inv = group.inverse.tolist()
    e = alpha.exponents
    n = alpha.modulus
    readers = _tet_readers(branching)
    signs = branching.signs
    counts = [0] * n
    for col in colorings:
        total = 0
        for spec, eps in zip(readers, signs):
            g, h, k = (inv[col[c]] if flip else col[c] for c, flip in spec)
            total += eps * int(e[g, h, k])
        counts[total % n] += 1
    value = CyclotomicNumber.from_exponent_counts(n, counts)
    a = tri.interior_vertex_count
    return value.scale(Fraction(1, group.order ** a)) if a else value


@dataclass
class InvariantResult:
    value: CyclotomicNumber
    triangulation: Triangulation
    branching: Branching
    moves: list[tuple[int, int]] = field(default_factory=list)
    coloring_count: int = 0


def compute(tri: Triangulation, group: FiniteGroup, alpha: Cochain3,
            max_moves: int = DEFAULT_MAX_MOVES) -> InvariantResult:
    """Evaluate the invariant, ordering the triangulation first if needed.

    Raises NotACocycle, NonOrientable or SearchExhausted.
    """
    check_cocycle(group, alpha)
    tri.orientation  # raises NonOrientable
    ordered, moves, branching = _ordering(tri, max_moves)
    colorings = _colorings(ordered, group)
    value = state_sum(branching, group, alpha, colorings)
    return InvariantResult(value, ordered, branching, list(moves), len(colorings))


# sweeps over cocycles reuse the ordering and the colorings
@lru_cache(maxsize=128)
def _ordering(tri: Triangulation, max_moves: int):
    branching = find_branching(tri)
    if branching is not None:
        return tri, (), branching
    ordered, moves, branching = make_orderable(tri, max_moves)
    return ordered, tuple(moves), branching


@lru_cache(maxsize=128)
def _colorings(tri: Triangulation, group: FiniteGroup) -> tuple[Coloring, ...]:
    return tuple(enumerate_colorings(tri, group))


def invariant(tri: Triangulation, group: FiniteGroup, alpha: Cochain3,
              max_moves: int = DEFAULT_MAX_MOVES) -> CyclotomicNumber:
    return compute(tri, group, alpha, max_moves).value


# reduced formulas -------------------------------------------------------

_TOKEN = re.compile(r"^([A-Za-z_]\w*)(?:\^\{?(-?\d+)\}?)?$")


def parse_word(word: str) -> list[tuple[str, int]]:
    """Parse ``"b^3 c^-1"`` into ``[("b", 3), ("c", -1)]``; ``"1"`` is empty."""
    out = []
    for tok in word.replace("*", " ").split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"malformed word token {tok!r} in {word!r}")
        out.append((m.group(1), int(m.group(2) or 1)))
    return out


@dataclass(frozen=True)
class ReducedFormula:
    """sum over tuples satisfying ``constraints`` of a product of alpha-factors.

    ``constraints`` are words equal to the identity (``"lhs = rhs"`` is
    read as ``lhs rhs^-1``); ``factors`` are ``(w1, w2, w3, power)``.
    """

    variables: tuple[str, ...]
    constraints: tuple[str, ...]
    factors: tuple[tuple[str, str, str, int], ...]
    name: str = ""
    # the oracle divides by |G| ** interior_vertices
    interior_vertices: int = 0

    def __post_init__(self):
        known = set(self.variables)
        words = [w for c in self.constraints for w in c.split("=")]
        words += [w for f in self.factors for w in f[:3]]
        for w in words:
            for var, _ in parse_word(w):
                if var not in known:
                    raise ValueError(f"unknown variable {var!r} in {w!r}")
        for c in self.constraints:
            if c.count("=") > 1:
                raise ValueError(f"malformed constraint {c!r}")
        for f in self.factors:
            if f[3] not in (1, -1):
                raise ValueError(f"factor power must be +1 or -1, got {f[3]}")

    @classmethod
    def from_dict(cls, data: dict) -> ReducedFormula:
        factors = []
        for item in data["factors"]:
            if isinstance(item, dict):
                args, power = item["args"], item.get("power", 1)
            else:
                args, power = item[0], item[1] if len(item) > 1 else 1
            if len(args) != 3:
                raise ValueError(f"factor needs three arguments, got {args!r}")
            factors.append((*map(str, args), int(power)))
        return cls(tuple(data["vars"]), tuple(data.get("constraints", ())), tuple(factors),
                   data.get("name", ""), int(data.get("interior_vertices", 0)))

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "vars": list(self.variables),
            "constraints": list(self.constraints),
            "factors": [[list(f[:3]), f[3]] for f in self.factors],
        }
        if self.interior_vertices:
            out["interior_vertices"] = self.interior_vertices
        return out

    @classmethod
    def from_json(cls, text: str) -> ReducedFormula:
        return cls.from_dict(json.loads(text))


def _evaluate(word: list[tuple[str, int]], env: dict[str, int], group: FiniteGroup) -> int:
    out = group.identity
    for var, k in word:
        out = group.mul(out, group.power(env[var], k))
    return out


def reduced_sum_oracle(formula: ReducedFormula, group: FiniteGroup,
                       alpha: Cochain3) -> CyclotomicNumber:
    """Brute-force evaluation of a reduced formula over all variable tuples."""
    cons = []
    for c in formula.constraints:
        lhs, _, rhs = c.partition("=")
        word = parse_word(lhs) + [(v, -k) for v, k in reversed(parse_word(rhs))]
        cons.append(word)
    facs = [([parse_word(w) for w in f[:3]], f[3]) for f in formula.factors]
    counts = [0] * alpha.modulus
    for values in itertools.product(range(group.order), repeat=len(formula.variables)):
        env = dict(zip(formula.variables, values))
        if any(_evaluate(w, env, group) != group.identity for w in cons):
            continue
        total = sum(power * alpha(*(_evaluate(w, env, group) for w in args)) for args, power in facs)
        counts[total % alpha.modulus] += 1
    value = CyclotomicNumber.from_exponent_counts(alpha.modulus, counts)
    if formula.interior_vertices:
        value = value.scale(Fraction(1, group.order ** formula.interior_vertices))
    return value


# symbolic colorings -----------------------------------------------------

Word = tuple[tuple[int, int], ...]


def _reduce_word(letters) -> Word:
    out: list[tuple[int, int]] = []
    for var, k in letters:
        if out and out[-1][0] == var and out[-1][1] == -k:
            out.pop()
        else:
            out.append((var, k))
    return tuple(out)


def _inverse_word(w: Word) -> Word:
    return tuple((v, -k) for v, k in reversed(w))


def _format_word(w: Word, names: Sequence[str]) -> str:
    if not w:
        return "1"
    parts = []
    for var, k in w:
        # merge runs of the same letter into powers
        if parts and parts[-1][0] == var:
            parts[-1][1] += k
        else:
            parts.append([var, k])
    text = [names[v] if k == 1 else f"{names[v]}^{k}" for v, k in parts if k]
    return " ".join(text) or "1"


def derive_formula(branching: Branching, name: str = "") -> ReducedFormula:
    """Reduced formula read off an ordered triangulation.

    Edge classes are visited in the enumeration order; a class not forced by
    a face becomes a free variable, other classes are words in the free
    variables, and face relations that do not hold identically become
    constraints.  Its oracle sum equals ``state_sum`` for every group and
    cocycle.
    """
    tri = branching.triangulation
    n_edges = len(tri.edge_classes)
    constraints = face_constraints(tri)
    touching: list[list[int]] = [[] for _ in range(n_edges)]
    for i, cons in enumerate(constraints):
        for c in {c for c, _ in cons}:
            touching[c].append(i)
    order = sorted(range(n_edges), key=lambda c: (-len(touching[c]), c))
    words: list[Word | None] = [None] * n_edges
    relators: list[Word] = []
    n_vars = 0

    def along(c: int, s: int) -> Word:
        return words[c] if s > 0 else _inverse_word(words[c])

    def propagate(start: int) -> None:
        stack = [start]
        while stack:
            for i in touching[stack.pop()]:
                (ca, sa), (cb, sb), (cc, sc) = constraints[i]
                missing = [k for k, (c, _) in enumerate(constraints[i]) if words[c] is None]
                if not missing:
                    rel = _reduce_word(along(ca, sa) + along(cb, sb) + _inverse_word(along(cc, sc)))
                    if rel and rel not in relators and _inverse_word(rel) not in relators:
                        relators.append(rel)
                    continue
                if len(missing) != 1:
                    continue
                k = missing[0]
                if k == 0:
                    w = along(cc, sc) + _inverse_word(along(cb, sb))
                elif k == 1:
                    w = _inverse_word(along(ca, sa)) + along(cc, sc)
                else:
                    w = along(ca, sa) + along(cb, sb)
                c, s = constraints[i][k]
                w = _reduce_word(w)
                words[c] = w if s > 0 else _inverse_word(w)
                stack.append(c)

    for c in order:
        if words[c] is None:
            words[c] = ((n_vars, 1),)
            n_vars += 1
            propagate(c)

    letters = "abcdefghjkmnpqrstuvwxyz"
    names = [letters[i] if n_vars <= len(letters) else f"x{i}" for i in range(n_vars)]
    factors = []
    for spec, eps in zip(_tet_readers(branching), branching.signs):
        args = [_format_word(_inverse_word(words[c]) if flip else words[c], names)
                for c, flip in spec]
        factors.append((*args, eps))
    return ReducedFormula(tuple(names), tuple(_format_word(r, names) for r in relators),
                          tuple(factors), name, tri.interior_vertex_count)


