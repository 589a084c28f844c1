import pytest

from conftest import FREE, S3_2, SOLID_TORUS, corpus_items
from trikit.triangulation import (
    ParseError,
    Triangulation,
    boundary_components,
    euler_characteristic,
    parse,
    parse_document,
    serialize,
    validate,
)


def test_free_tetrahedron_parses():
    tri = parse(FREE)
    assert tri.size == 1
    assert tri.boundary_faces() == [(0, 0), (0, 1), (0, 2), (0, 3)]


def test_serialize_is_bit_exact():
    for text in (FREE, S3_2, SOLID_TORUS):
        assert serialize(parse(text)) == text


@pytest.mark.parametrize("name,tri", corpus_items())
def test_corpus_round_trip(name, tri):
    again = parse(serialize(tri))
    assert again == tri
    assert serialize(again) == serialize(tri)


def test_comments_and_pattern_line():
    doc = parse_document("# a ball\ntri v1\ntets=1\n0: _ | _ | _ | _\npattern: 0.0 0.1 0.3\n")
    assert doc.pattern == ((0, 0), (0, 1), (0, 3))
    assert serialize(doc.tri, doc.pattern).endswith("pattern: 0.0 0.1 0.3\n")


def test_involutivity_violation_reports_line():
    text = "tri v1\ntets=2\n0: 1:0123 | _ | _ | _\n1: 0:0132 | _ | _ | _\n"
    with pytest.raises(ParseError, match="involutivity") as info:
        parse(text)
    assert info.value.line == 3


@pytest.mark.parametrize("text,needle", [
    ("tri v2\ntets=1\n0: _ | _ | _ | _\n", "tri v1"),
    ("tri v1\ntets=x\n", "count"),
    ("tri v1\ntets=2\n0: _ | _ | _ | _\n", "expected 2"),
    ("tri v1\ntets=1\n0: _ | _ | _\n", "4 face fields"),
    ("tri v1\ntets=1\n0: _ | _ | _ | 3:0123\n", "out-of-range"),
    ("tri v1\ntets=1\n0: _ | _ | _ | 0:0124\n", "bad gluing"),
    ("tri v1\ntets=1\n0: _ | _ | _ | _\npattern: 0.9\n", "out of range"),
])
def test_malformed_documents(text, needle):
    with pytest.raises(ParseError, match=needle):
        parse(text)


def test_two_tetrahedron_closed(s3_2):
    assert s3_2.is_closed
    assert validate(s3_2) == []
    assert euler_characteristic(s3_2) == 0
    assert boundary_components(s3_2) == []


def test_validate_free_is_empty(free):
    assert validate(free) == []


def test_reversed_edge_is_reported():
    # faces 012 and 013 glued by 1032: edge 01 is identified with itself reversed
    tri = parse("tri v1\ntets=1\n0: _ | _ | 0:1032 | 0:1032\n")
    report = validate(tri)
    assert report
    assert "edge" in report[0]


def test_folded_ball_is_valid():
    # the same faces glued by 0132 fold the tetrahedron onto a ball
    tri = parse("tri v1\ntets=1\n0: _ | _ | 0:0132 | 0:0132\n")
    assert validate(tri) == []
    assert euler_characteristic(tri) == 1


def test_euler_free(free):
    assert euler_characteristic(free) == 1


@pytest.mark.parametrize("name,tri", corpus_items())
def test_closed_corpus_has_euler_zero(name, tri):
    if tri.is_closed:
        assert euler_characteristic(tri) == 0


def test_boundary_free(free):
    (comp,) = boundary_components(free)
    assert comp.euler == 2 and comp.faces == 4 and comp.orientable


def test_boundary_solid_torus(solid_torus):
    (comp,) = boundary_components(solid_torus)
    assert comp.euler == 0 and comp.faces == 2 and comp.orientable
    assert comp.genus == 1


def test_relabel_keeps_validity(s3_2):
    tri = s3_2.relabel([1, 0], [(1, 0, 2, 3), (0, 1, 3, 2)])
    assert validate(tri) == []
    assert Triangulation(tri.gluings).size == 2
