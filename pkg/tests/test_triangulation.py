from __future__ import annotations

import json
from pathlib import Path

import pytest

from conftest import ALL_NAMES, CENSUS_NAMES, GIESEKING
from gendw.census import CENSUS
from gendw.isosig import from_isosig
from gendw.triangulation import (
    IDENTITY,
    NonOrientable,
    ParseError,
    Triangulation,
    TriangulationError,
    canonical_form,
    edge_classes,
    euler_characteristic,
    is_isomorphic,
    mirror,
    parse_triangulation,
    validate_orientation,
    vertex_classes,
)

DATA = Path(__file__).resolve().parents[1] / "src" / "gendw" / "data" / "census"


def doc(rows):
    return json.dumps({"tets": len(rows),
                       "gluings": [[{"tet": u, "perm": list(p)} for u, p in r] for r in rows]})


def test_parse_m004(census):
    tri = parse_triangulation((DATA / "m004.json").read_text())
    assert tri.tet_count == 2
    assert tri == census["m004"]
    # involution, checked independently of the constructor
    for t, row in enumerate(tri.gluings):
        for f, (u, p) in enumerate(row):
            back_u, back_p = tri.gluings[u][p[f]]
            assert back_u == t
            assert all(back_p[p[v]] == v for v in range(4))


def test_parse_double_tetrahedron(census):
    tri = census["s3_double"]
    assert tri.tet_count == 2
    assert all(u == 1 - t and p == IDENTITY for t, row in enumerate(tri.gluings) for u, p in row)


def test_self_gluing_rejected():
    with pytest.raises(TriangulationError, match="itself"):
        parse_triangulation(doc([[(0, IDENTITY)] * 4]))


def test_involution_violation_reports_face():
    rows = [[(1, IDENTITY)] * 4, [(0, IDENTITY)] * 3 + [(0, (1, 0, 2, 3))]]
    with pytest.raises(TriangulationError, match=r"\(1, 3\)|\(0, 3\)"):
        parse_triangulation(doc(rows))


@pytest.mark.parametrize("text", [
    "not json",
    "[1, 2]",
    '{"tets": 1, "gluings": [[{"tet": 0, "perm": [0, 1, 2, 3]}]]}',
    '{"tets": 2, "gluings": [[{"tet": 5, "perm": [0, 1, 2, 3]}]]}',
])
def test_malformed_documents(text):
    with pytest.raises(TriangulationError):
        parse_triangulation(text)


def test_json_round_trip(census):
    for name in ALL_NAMES:
        tri = census[name]
        assert parse_triangulation(tri.to_json()) == tri


@pytest.mark.parametrize("name", CENSUS_NAMES)
def test_bundled_tables_match_isosigs(name, census):
    assert from_isosig(CENSUS[name].isosig) == census[name]


def test_isosig_rejects_garbage():
    with pytest.raises(ParseError):
        from_isosig("b")


def test_edge_classes_m004(census):
    classes = edge_classes(census["m004"])
    assert len(classes) == 2
    assert [c.valence for c in classes] == [6, 6]


def test_edge_classes_double_tetrahedron(census):
    classes = edge_classes(census["s3_double"])
    assert len(classes) == 6
    assert all(c.valence == 2 for c in classes)


def test_edge_classes_gieseking():
    tri = Triangulation.from_dict(GIESEKING)
    classes = edge_classes(tri)
    assert len(classes) == 1 and classes[0].valence == 6
    assert vertex_classes(tri)[0].link_euler == 0  # Klein bottle cusp
    with pytest.raises(NonOrientable):
        validate_orientation(tri)


def test_edge_class_members_are_consistent(census):
    for name in ALL_NAMES:
        tri = census[name]
        classes = edge_classes(tri)
        members = [(t, e) for c in classes for t, e, _ in c.members]
        assert sorted(members) == [(t, e) for t in range(tri.tet_count) for e in range(6)]
        for c in classes:
            assert c.members[0][2] == 1
            assert c.representative == min((t, e) for t, e, _ in c.members)


def test_vertex_classes(census):
    (v,) = vertex_classes(census["m004"])
    assert v.kind == "ideal" and v.link_euler == 0
    vs = vertex_classes(census["s3_double"])
    assert len(vs) == 4
    assert all(v.kind == "interior" and v.link_euler == 2 for v in vs)


@pytest.mark.parametrize("name", CENSUS_NAMES)
def test_census_fixtures_have_one_torus_cusp(name, census):
    tri = census[name]
    (v,) = tri.vertex_classes
    assert v.is_ideal and v.link_euler == 0
    assert len(tri.face_classes) == 2 * tri.tet_count


def test_euler_characteristic_counts_cusps(census):
    # V - E + F - T = sum over vertex classes of (1 - chi(link) / 2)
    for name in ALL_NAMES:
        tri = census[name]
        expected = sum(1 - v.link_euler // 2 for v in tri.vertex_classes)
        assert euler_characteristic(tri) == expected
    assert euler_characteristic(census["s3_double"]) == 0
    assert euler_characteristic(census["m004"]) == 1


def test_orientation(census):
    assert validate_orientation(census["m004"])[0] == 1
    assert validate_orientation(census["s3_double"]) == (1, -1)


def test_flipped_parity_is_non_orientable(census):
    rows = [list(r) for r in census["s3_double"].gluings]
    swap = (1, 0, 2, 3)
    # faces 2 and 3 of tet 0 glued with an odd permutation, the others even
    rows[0][3] = (1, swap)
    rows[1][3] = (0, swap)
    with pytest.raises(NonOrientable):
        validate_orientation(parse_triangulation(doc(rows)))


def test_mirror(census):
    for name in ALL_NAMES:
        tri = census[name]
        m = mirror(tri)
        assert len(m.edge_classes) == len(tri.edge_classes)
        assert is_isomorphic(mirror(m), tri)
    assert is_isomorphic(mirror(census["s3_double"]), census["s3_double"])


def test_chirality_detected(census):
    # m003 admits an orientation-reversing symmetry, m004's census table too
    # (the figure-eight knot is amphichiral), s788 does not
    assert is_isomorphic(mirror(census["m003"]), census["m003"])
    assert is_isomorphic(mirror(census["m004"]), census["m004"])
    assert not is_isomorphic(mirror(census["s788"]), census["s788"])


def test_canonical_form_ignores_labelling(census):
    from gendw.triangulation import EVEN_PERMS, relabel

    tri = census["s778"]
    perms = [EVEN_PERMS[(3 * t + 1) % 12] for t in range(tri.tet_count)]
    order = list(reversed(range(tri.tet_count)))
    assert canonical_form(relabel(tri, perms, order)) == canonical_form(tri)
