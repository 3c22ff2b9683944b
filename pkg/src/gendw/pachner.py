"""Pachner moves: (2,3), its inverse (3,2), and (1,4).

Every move first orients its input (all gluings odd), keeps surviving
tetrahedra in their original order with their original labels, and appends
the new tetrahedra, each labelled positively.  The output therefore carries
the orientation of the input.
"""
from __future__ import annotations

import random
from typing import Sequence

from .triangulation import (
    EDGES,
    Triangulation,
    TriangulationError,
    orient,
    perm_compose,
    perm_inverse,
    perm_sign,
)

__all__ = [
    "EdgeNotTrivalent",
    "FaceSelfAdjacent",
    "PachnerError",
    "TetrahedraNotDistinct",
    "pachner_14",
    "pachner_23",
    "pachner_32",
    "random_moves",
    "trivalent_edges",
]


class PachnerError(TriangulationError):
    pass


class FaceSelfAdjacent(PachnerError):
    pass


class EdgeNotTrivalent(PachnerError):
    pass


class TetrahedraNotDistinct(PachnerError):
    pass


def _retriangulate(tri: Triangulation, doomed: dict[int, Sequence[str]],
                   new_tets: list[list[str]]) -> Triangulation:
    """Replace the ball formed by ``doomed`` with ``new_tets``.

    ``doomed`` maps each removed tetrahedron to the names of its vertices
    (by label); ``new_tets`` lists the vertex names of each replacement
    tetrahedron.  Names are local to the ball.  Faces are matched by their
    name sets, so inner faces of either side need no explicit description.
    """
    survivors = [t for t in range(tri.tet_count) if t not in doomed]
    new_index = {t: i for i, t in enumerate(survivors)}
    base = len(survivors)

    def boundary_source(names: frozenset[str]):
        for d, dn in doomed.items():
            if names <= set(dn):
                (missing,) = set(dn) - names
                return d, dn.index(missing)
        raise AssertionError(f"face {sorted(names)} not found on either side of the move")

    def new_face(names: frozenset[str], skip: int | None = None):
        for j, tn in enumerate(new_tets):
            if j != skip and names <= set(tn):
                return j
        return None

    # orient the new tetrahedra consistently with the doomed ones
    for j, tn in enumerate(new_tets):
        for a in range(4):
            face = frozenset(tn) - {tn[a]}
            if new_face(face, skip=j) is None:
                d, df = boundary_source(face)
                mu = [0] * 4
                for v in range(4):
                    mu[v] = df if v == a else doomed[d].index(tn[v])
                if perm_sign(mu) < 0:
                    tn[2], tn[3] = tn[3], tn[2]
                break

    rows: list[list] = [
        [(new_index[u], p) if u not in doomed else None for u, p in tri.gluings[t]]
        for t in survivors
    ] + [[None] * 4 for _ in new_tets]
    for j, tn in enumerate(new_tets):
        for a in range(4):
            face = frozenset(tn) - {tn[a]}
            k = new_face(face, skip=j)
            if k is not None:
                other = new_tets[k]
                perm = [0] * 4
                for v in range(4):
                    perm[v] = other.index(tn[v]) if v != a else other.index(
                        (set(other) - face).pop())
                rows[base + j][a] = (base + k, tuple(perm))
                continue
            d, df = boundary_source(face)
            u, sigma = tri.gluings[d][df]
            perm = [0] * 4
            if u in doomed:
                target_names = frozenset(doomed[u][sigma[doomed[d].index(x)]] for x in face)
                k = new_face(target_names)
                other = new_tets[k]
                for v in range(4):
                    if v != a:
                        perm[v] = other.index(doomed[u][sigma[doomed[d].index(tn[v])]])
                perm[a] = other.index((set(other) - target_names).pop())
                rows[base + j][a] = (base + k, tuple(perm))
            else:
                for v in range(4):
                    perm[v] = sigma[doomed[d].index(tn[v])] if v != a else sigma[df]
                perm = tuple(perm)
                rows[base + j][a] = (new_index[u], perm)
                rows[new_index[u]][perm[a]] = (base + j, perm_inverse(perm))
    return Triangulation(tuple(tuple(r) for r in rows))


def pachner_23(tri: Triangulation, t: int, f: int) -> Triangulation:
    """Replace the two tetrahedra meeting at face ``(t, f)`` by three.

    The three new tetrahedra are appended; the new edge is edge 0 (vertices
    0 and 1) of each of them.
    """
    tri = orient(tri)
    u, perm = tri.gluings[t][f]
    if u == t:
        raise FaceSelfAdjacent(f"face ({t}, {f}) joins tetrahedron {t} to itself")
    xs = [v for v in range(4) if v != f]
    names_t = ["N"] * 4
    for i, v in enumerate(xs):
        names_t[v] = f"x{i}"
    names_u = ["S"] * 4
    for v in xs:
        names_u[perm[v]] = names_t[v]
    new = [["N", "S", f"x{(i + 1) % 3}", f"x{(i + 2) % 3}"] for i in range(3)]
    return _retriangulate(tri, {t: names_t, u: names_u}, new)


def trivalent_edges(tri: Triangulation) -> list[int]:
    """Indices of edge classes admitting a (3,2) move."""
    return [i for i, ec in enumerate(tri.edge_classes)
            if ec.valence == 3 and len({m[0] for m in ec.members}) == 3]


def pachner_32(tri: Triangulation, edge: int) -> Triangulation:
    """Replace the three tetrahedra around a valence-3 edge class by two."""
    tri = orient(tri)
    ec = tri.edge_classes[edge]
    if ec.valence != 3:
        raise EdgeNotTrivalent(f"edge class {edge} has valence {ec.valence}")
    if len({m[0] for m in ec.members}) != 3:
        raise TetrahedraNotDistinct(f"edge class {edge} meets a tetrahedron more than once")
    t0, e0, _ = ec.members[0]
    p, q = EDGES[e0]
    r, s = [v for v in range(4) if v not in (p, q)]
    names0 = [None] * 4
    names0[p], names0[q], names0[r], names0[s] = "N", "S", "y0", "y1"
    doomed = {t0: names0}
    # walk around the edge: cross the face opposite `far`, name the new apex
    cur, far = t0, "y0"
    for fresh in ("y2", "y0"):
        here = doomed[cur]
        u, perm = tri.gluings[cur][here.index(far)]
        if u in doomed:
            raise TetrahedraNotDistinct(f"edge class {edge} meets a tetrahedron more than once")
        names = [None] * 4
        for v in range(4):
            names[perm[v]] = here[v] if here[v] != far else fresh
        doomed[u] = names
        far = next(x for x in here if x not in ("N", "S", far))
        cur = u
    here = doomed[cur]
    u, perm = tri.gluings[cur][here.index(far)]
    if u != t0 or any(names0[perm[v]] != here[v] for v in range(4) if here[v] != far):
        raise TetrahedraNotDistinct(f"edge class {edge} does not close up around three tetrahedra")
    new = [["N", "y0", "y1", "y2"], ["S", "y0", "y1", "y2"]]
    return _retriangulate(tri, doomed, new)


def pachner_14(tri: Triangulation, t: int) -> Triangulation:
    """Cone tetrahedron ``t`` from a new interior vertex."""
    tri = orient(tri)
    names = ["v0", "v1", "v2", "v3"]
    new = [[("c" if v == k else names[v]) for v in range(4)] for k in range(4)]
    return _retriangulate(tri, {t: names}, new)


def random_moves(tri: Triangulation, n: int, seed: int,
                 weights: tuple[float, float, float] = (0.5, 0.3, 0.2)) -> Triangulation:
    """Apply ``n`` pseudo-random admissible moves: (2,3), (3,2), (1,4).

    Move types with no admissible candidate are skipped; the sequence is a
    deterministic function of ``seed``.
    """
    rng = random.Random(seed)
    for _ in range(n):
        faces = [(t, f) for (t, f), (u, _) in tri.face_classes if t != u]
        edges = trivalent_edges(tri)
        options = [(w, kind) for w, kind, ok in
                   zip(weights, ("23", "32", "14"), (bool(faces), bool(edges), True)) if ok]
        kind = rng.choices([k for _, k in options], weights=[w for w, _ in options])[0]
        if kind == "23":
            tri = pachner_23(tri, *rng.choice(faces))
        elif kind == "32":
            tri = pachner_32(tri, rng.choice(edges))
        else:
            tri = pachner_14(tri, rng.randrange(tri.tet_count))
    return tri
