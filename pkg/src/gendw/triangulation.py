"""Ideal and generalized ideal triangulations as face-gluing tables.

Conventions
-----------
* Face ``f`` of a tetrahedron is the face opposite vertex ``f``.
* Edge ``i`` joins the vertex pair ``EDGES[i]``:
  (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
* ``gluings[t][f] = (u, perm)`` glues face ``f`` of ``t`` to face
  ``perm[f]`` of ``u``, sending vertex ``x`` of ``t`` to vertex ``perm[x]``
  of ``u``.
* The orientation of a connected triangulation is the one in which the
  vertex labelling 0,1,2,3 of tetrahedron 0 is positive.  Every gluing of
  an oriented triangulation whose tetrahedra are all positive is odd.
"""
from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

__all__ = [
    "EDGES",
    "EDGE_INDEX",
    "EdgeClass",
    "NonOrientable",
    "ParseError",
    "Triangulation",
    "TriangulationError",
    "VertexClass",
    "canonical_form",
    "edge_classes",
    "euler_characteristic",
    "face_classes",
    "is_isomorphic",
    "mirror",
    "orient",
    "parse_triangulation",
    "perm_compose",
    "perm_inverse",
    "perm_sign",
    "relabel",
    "validate_orientation",
    "vertex_classes",
]

Perm = tuple[int, int, int, int]

EDGES: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {pair: i for i, pair in enumerate(EDGES)}
EDGE_INDEX.update({(b, a): i for (a, b), i in list(EDGE_INDEX.items())})

IDENTITY: Perm = (0, 1, 2, 3)
SWAP23: Perm = (0, 1, 3, 2)
EVEN_PERMS = tuple(p for p in itertools.permutations(range(4)) if sum(
    1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j]) % 2 == 0)
ALL_PERMS = tuple(itertools.permutations(range(4)))


class TriangulationError(ValueError):
    pass


class ParseError(TriangulationError):
    pass


class NonOrientable(TriangulationError):
    pass


def perm_inverse(p: Sequence[int]) -> Perm:
    inv = [0] * 4
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def perm_compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """x -> p[q[x]]."""
    return tuple(p[q[x]] for x in range(4))


def perm_sign(p: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class EdgeClass:
    """An edge of the triangulation.

    ``members`` holds ``(tet, edge, sign)`` triples sorted lexicographically.
    ``sign`` is +1 when the member's low-to-high direction agrees with that
    of the first member, which fixes the canonical direction of the class.
    """

    members: tuple[tuple[int, int, int], ...]

    @property
    def valence(self) -> int:
        return len(self.members)

    @property
    def representative(self) -> tuple[int, int]:
        t, e, _ = self.members[0]
        return t, e


@dataclass(frozen=True)
class VertexClass:
    members: tuple[tuple[int, int], ...]
    link_euler: int

    @property
    def kind(self) -> str:
        return "interior" if self.link_euler == 2 else "ideal"

    @property
    def is_ideal(self) -> bool:
        return self.link_euler != 2


@dataclass(frozen=True)
class Triangulation:
    """A closed 3-dimensional pseudo-manifold given by its gluing table.

    Construction validates completeness and the involution property; the
    derived identification data are computed lazily and cached.
    """

    gluings: tuple[tuple[tuple[int, Perm], ...], ...]

    def __post_init__(self):
        norm = []
        n = len(self.gluings)
        if n == 0:
            raise TriangulationError("a triangulation needs at least one tetrahedron")
        for t, row in enumerate(self.gluings):
            if len(row) != 4:
                raise TriangulationError(f"tetrahedron {t} has {len(row)} gluing entries, expected 4")
            out = []
            for f, entry in enumerate(row):
                if entry is None:
                    raise TriangulationError(f"face ({t}, {f}) is unglued; boundary faces are not supported")
                u, perm = entry
                u, perm = int(u), tuple(int(x) for x in perm)
                if not 0 <= u < n:
                    raise TriangulationError(f"face ({t}, {f}) glued to missing tetrahedron {u}")
                if sorted(perm) != [0, 1, 2, 3]:
                    raise TriangulationError(f"face ({t}, {f}) has invalid permutation {list(perm)}")
                out.append((u, perm))
            norm.append(tuple(out))
        for t in range(n):
            for f in range(4):
                u, perm = norm[t][f]
                if (u, perm[f]) == (t, f):
                    raise TriangulationError(f"face ({t}, {f}) is glued to itself")
                if norm[u][perm[f]] != (t, perm_inverse(perm)):
                    raise TriangulationError(
                        f"gluing of face ({t}, {f}) is not an involution: "
                        f"({u}, {perm[f]}) does not glue back")
        object.__setattr__(self, "gluings", tuple(norm))

    @property
    def tet_count(self) -> int:
        return len(self.gluings)

    def glue(self, t: int, f: int) -> tuple[int, Perm]:
        return self.gluings[t][f]

    # derived data ---------------------------------------------------------

    @cached_property
    def edge_classes(self) -> tuple[EdgeClass, ...]:
        return _edge_classes(self)

    @cached_property
    def edge_lookup(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Map ``(tet, edge)`` to ``(class index, sign)``."""
        return {(t, e): (i, s) for i, ec in enumerate(self.edge_classes) for t, e, s in ec.members}

    @cached_property
    def vertex_classes(self) -> tuple[VertexClass, ...]:
        return _vertex_classes(self)

    @cached_property
    def face_classes(self) -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]:
        out = []
        for t in range(self.tet_count):
            for f in range(4):
                u, perm = self.gluings[t][f]
                if (t, f) < (u, perm[f]):
                    out.append(((t, f), (u, perm[f])))
        return tuple(out)

    @cached_property
    def orientation(self) -> tuple[int, ...]:
        return _orientation(self)

    @property
    def interior_vertex_count(self) -> int:
        return sum(1 for v in self.vertex_classes if not v.is_ideal)

    @property
    def ideal_vertex_count(self) -> int:
        return sum(1 for v in self.vertex_classes if v.is_ideal)

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            t = stack.pop()
            for u, _ in self.gluings[t]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.tet_count

    # serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "tets": self.tet_count,
            "gluings": [[{"tet": u, "perm": list(p)} for u, p in row] for row in self.gluings],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> Triangulation:
        try:
            n = int(data["tets"])
            rows = data["gluings"]
            if len(rows) != n:
                raise ParseError(f"'tets' is {n} but {len(rows)} gluing rows given")
            gluings = tuple(
                tuple((int(entry["tet"]), tuple(int(x) for x in entry["perm"])) for entry in row)
                for row in rows
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise ParseError(f"malformed triangulation document: {exc!r}") from exc
        return cls(gluings)

    @classmethod
    def from_json(cls, text: str) -> Triangulation:
        return parse_triangulation(text)


def parse_triangulation(text: str) -> Triangulation:
    """Parse the JSON gluing format ``{"tets": N, "gluings": [...]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("triangulation document must be a JSON object")
    return Triangulation.from_dict(data)


def _edge_classes(tri: Triangulation) -> tuple[EdgeClass, ...]:
    seen: dict[tuple[int, int], int] = {}
    classes = []
    for t0 in range(tri.tet_count):
        for e0 in range(6):
            if (t0, e0) in seen:
                continue
            seen[(t0, e0)] = 1
            members = [(t0, e0, 1)]
            queue = deque([(t0, e0, 1)])
            while queue:
                t, e, s = queue.popleft()
                a, b = EDGES[e]
                for f in range(4):
                    if f in (a, b):
                        continue
                    u, perm = tri.gluings[t][f]
                    pa, pb = perm[a], perm[b]
                    e2 = EDGE_INDEX[(pa, pb)]
                    s2 = s if pa < pb else -s
                    if (u, e2) in seen:
                        if seen[(u, e2)] != s2:
                            raise NonOrientable(
                                f"edge ({t0}, {e0}) is identified with itself in reverse")
                        continue
                    seen[(u, e2)] = s2
                    members.append((u, e2, s2))
                    queue.append((u, e2, s2))
            classes.append(EdgeClass(tuple(sorted(members))))
    return tuple(classes)


def _vertex_classes(tri: Triangulation) -> tuple[VertexClass, ...]:
    # link vertices: union-find on corners (t, v, w) = end of edge vw at v
    parent: dict[tuple[int, int, int], tuple[int, int, int]] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in range(tri.tet_count):
        for v in range(4):
            for w in range(4):
                if w == v:
                    continue
                for f in range(4):
                    if f in (v, w):
                        continue
                    u, perm = tri.gluings[t][f]
                    ra, rb = find((t, v, w)), find((u, perm[v], perm[w]))
                    if ra != rb:
                        parent[ra] = rb

    seen: set[tuple[int, int]] = set()
    classes = []
    for t0 in range(tri.tet_count):
        for v0 in range(4):
            if (t0, v0) in seen:
                continue
            seen.add((t0, v0))
            members = [(t0, v0)]
            stack = [(t0, v0)]
            while stack:
                t, v = stack.pop()
                for f in range(4):
                    if f == v:
                        continue
                    u, perm = tri.gluings[t][f]
                    if (u, perm[v]) not in seen:
                        seen.add((u, perm[v]))
                        members.append((u, perm[v]))
                        stack.append((u, perm[v]))
            link_vertices = {find((t, v, w)) for t, v in members for w in range(4) if w != v}
            faces = len(members)
            euler = len(link_vertices) - 3 * faces // 2 + faces
            classes.append(VertexClass(tuple(sorted(members)), euler))
    return tuple(classes)


def _orientation(tri: Triangulation) -> tuple[int, ...]:
    signs = [0] * tri.tet_count
    for start in range(tri.tet_count):
        if signs[start]:
            continue
        signs[start] = 1
        stack = [start]
        while stack:
            t = stack.pop()
            for f in range(4):
                u, perm = tri.gluings[t][f]
                want = -signs[t] * perm_sign(perm)
                if signs[u] == 0:
                    signs[u] = want
                    stack.append(u)
                elif signs[u] != want:
                    raise NonOrientable(f"gluing of face ({t}, {f}) contradicts the orientation")
    return tuple(signs)


def edge_classes(tri: Triangulation) -> tuple[EdgeClass, ...]:
    return tri.edge_classes


def vertex_classes(tri: Triangulation) -> tuple[VertexClass, ...]:
    return tri.vertex_classes


def face_classes(tri: Triangulation):
    return tri.face_classes


def validate_orientation(tri: Triangulation) -> tuple[int, ...]:
    """Per-tetrahedron signs making every gluing orientation-reversing.

    The lowest-indexed tetrahedron of each component gets +1.  Raises
    NonOrientable when no consistent assignment exists.
    """
    return tri.orientation


def euler_characteristic(tri: Triangulation) -> int:
    """V - E + F - T of the pseudo-manifold."""
    return (len(tri.vertex_classes) - len(tri.edge_classes)
            + len(tri.face_classes) - tri.tet_count)


def relabel(tri: Triangulation, perms: Sequence[Sequence[int]],
            order: Sequence[int] | None = None) -> Triangulation:
    """Rename vertex ``x`` of tet ``t`` to ``perms[t][x]`` and tet ``t`` to ``order[t]``."""
    n = tri.tet_count
    order = list(range(n)) if order is None else list(order)
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the tetrahedra")
    rows: list[list] = [[None] * 4 for _ in range(n)]
    for t in range(n):
        st = perms[t]
        st_inv = perm_inverse(st)
        for f_new in range(4):
            f = st_inv[f_new]
            u, p = tri.gluings[t][f]
            rows[order[t]][f_new] = (order[u], perm_compose(perms[u], perm_compose(p, st_inv)))
    return Triangulation(tuple(tuple(r) for r in rows))


def orient(tri: Triangulation) -> Triangulation:
    """Relabel negatively oriented tetrahedra so that every gluing is odd."""
    signs = tri.orientation
    if all(s == 1 for s in signs):
        return tri
    return relabel(tri, [IDENTITY if s == 1 else SWAP23 for s in signs])


def mirror(tri: Triangulation) -> Triangulation:
    """The same pseudo-manifold with the opposite orientation."""
    return relabel(tri, [SWAP23] * tri.tet_count)


def canonical_form(tri: Triangulation, oriented: bool = True) -> tuple:
    """Isomorphism invariant of a connected triangulation.

    With ``oriented`` only orientation-preserving relabellings are
    considered, so a chiral triangulation and its mirror differ.
    """
    if not tri.is_connected():
        raise TriangulationError("canonical_form requires a connected triangulation")
    if oriented:
        tri = orient(tri)
    starts = EVEN_PERMS if oriented else ALL_PERMS
    best = None
    n = tri.tet_count
    for t0 in range(n):
        for s0 in starts:
            index = {t0: 0}
            labels = {t0: s0}
            queue = [t0]
            code = []
            for t in queue:
                st = labels[t]
                st_inv = perm_inverse(st)
                for f_new in range(4):
                    u, p = tri.gluings[t][st_inv[f_new]]
                    if u not in index:
                        index[u] = len(queue)
                        queue.append(u)
                        labels[u] = perm_compose(st, perm_inverse(p))
                    code.append((index[u], perm_compose(labels[u], perm_compose(p, st_inv))))
            code = tuple(code)
            if best is None or code < best:
                best = code
    return (n, best)


def is_isomorphic(a: Triangulation, b: Triangulation, oriented: bool = True) -> bool:
    return a.tet_count == b.tet_count and canonical_form(a, oriented) == canonical_form(b, oriented)
