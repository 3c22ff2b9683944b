"""Local orders (branchings) and the positive (2,3)-move search.

A branching orients every edge class so that no face is a directed
3-cycle.  Inside each tetrahedron the vertices are then ordered
v0 < v1 < v2 < v3, where v_i is the vertex with exactly i outgoing edges.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .pachner import pachner_23
from .triangulation import EDGE_INDEX, Triangulation, canonical_form, perm_sign

__all__ = [
    "Branching",
    "SearchExhausted",
    "find_branching",
    "face_constraints",
    "make_orderable",
    "tet_signs",
]

DEFAULT_MAX_MOVES = 8


class SearchExhausted(RuntimeError):
    pass


def face_constraints(tri: Triangulation) -> list[tuple[tuple[int, int], ...]]:
    """For each face class: ((class, sign) for the edges ab, bc, ac), a<b<c.

    ``sign`` relates the low-to-high direction of the edge inside the face
    to the canonical direction of its class.
    """
    out = []
    for (t, f), _ in tri.face_classes:
        a, b, c = (v for v in range(4) if v != f)
        out.append(tuple(tri.edge_lookup[(t, EDGE_INDEX[pair])] for pair in ((a, b), (b, c), (a, c))))
    return out


def _cyclic(d_ab: int, d_bc: int, d_ac: int) -> bool:
    # +1 = low-to-high inside the face
    return d_ab == d_bc == -d_ac


@dataclass(frozen=True)
class Branching:
    """Edge orientations of ``triangulation``: +1 keeps the canonical direction."""

    triangulation: Triangulation
    edge_orientation: tuple[int, ...]

    def __post_init__(self):
        tri = self.triangulation
        if len(self.edge_orientation) != len(tri.edge_classes):
            raise ValueError("need one orientation per edge class")
        for cons in face_constraints(tri):
            if _cyclic(*(s * self.edge_orientation[c] for c, s in cons)):
                raise ValueError("edge orientations make a face cyclic")

    def points_up(self, t: int, a: int, b: int) -> bool:
        """Whether the branching arrow on edge {a, b} of tet t goes a -> b."""
        c, s = self.triangulation.edge_lookup[(t, EDGE_INDEX[(a, b)])]
        d = s * self.edge_orientation[c]
        return d > 0 if a < b else d < 0

    @cached_property
    def vertex_orders(self) -> tuple[tuple[int, int, int, int], ...]:
        """Per tetrahedron, its vertex labels listed as (v0, v1, v2, v3)."""
        orders = []
        for t in range(self.triangulation.tet_count):
            out = [sum(1 for w in range(4) if w != v and self.points_up(t, v, w)) for v in range(4)]
            order = sorted(range(4), key=out.__getitem__)
            if [out[v] for v in order] != [0, 1, 2, 3]:
                raise AssertionError(f"tetrahedron {t} is not linearly ordered")
            orders.append(tuple(order))
        return tuple(orders)

    @cached_property
    def signs(self) -> tuple[int, ...]:
        return tet_signs(self.triangulation, self)


def tet_signs(tri: Triangulation, branching: Branching) -> tuple[int, ...]:
    """+1 where the order v0<v1<v2<v3 agrees with the orientation of tri."""
    return tuple(s * perm_sign(order)
                 for s, order in zip(tri.orientation, branching.vertex_orders))


def find_branching(tri: Triangulation) -> Branching | None:
    """Lexicographically first branching (+1 tried first), or None."""
    n_edges = len(tri.edge_classes)
    constraints = face_constraints(tri)
    # constraints become checkable once their largest class is assigned
    ready: list[list[tuple]] = [[] for _ in range(n_edges)]
    for cons in constraints:
        ready[max(c for c, _ in cons)].append(cons)
    orient = [0] * n_edges

    def search(i: int) -> bool:
        if i == n_edges:
            return True
        for d in (1, -1):
            orient[i] = d
            if not any(_cyclic(*(s * orient[c] for c, s in cons)) for cons in ready[i]):
                if search(i + 1):
                    return True
        orient[i] = 0
        return False

    if not search(0):
        return None
    return Branching(tri, tuple(orient))


def make_orderable(tri: Triangulation, max_moves: int = DEFAULT_MAX_MOVES
                   ) -> tuple[Triangulation, list[tuple[int, int]], Branching]:
    """Reach an orderable triangulation by positive (2,3) moves.

    Iterative deepening over faces in lexicographic order, so the returned
    move list is as short as possible.  Each move ``(t, f)`` refers to the
    triangulation produced by the previous ones.
    """
    found = find_branching(tri)
    if found is not None:
        return tri, [], found
    for depth in range(1, max_moves + 1):
        seen: dict[tuple, int] = {}

        def search(cur: Triangulation, left: int):
            key = canonical_form(cur)
            if seen.get(key, -1) >= left:
                return None
            seen[key] = left
            for (t, f), (u, _) in cur.face_classes:
                if t == u:
                    continue
                nxt = pachner_23(cur, t, f)
                if left == 1:
                    b = find_branching(nxt)
                    if b is not None:
                        return nxt, [(t, f)], b
                else:
                    hit = search(nxt, left - 1)
                    if hit is not None:
                        return hit[0], [(t, f)] + hit[1], hit[2]
            return None

        hit = search(tri, depth)
        if hit is not None:
            return hit
    raise SearchExhausted(f"no orderable triangulation within {max_moves} positive (2,3) moves")
