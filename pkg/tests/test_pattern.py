import pytest

from trikit.normal import enumerate_fundamental, normal_sum, tri_index, vertex_link
from trikit.pattern import BoundaryPattern, iota, is_pure, pattern_degrees, validate_pattern

FACE3 = [(0, 0), (0, 1), (0, 3)]  # edges 01, 02, 12 bound face 3


def unit(k):
    v = [0] * 7
    v[k] = 1
    return tuple(v)


def test_empty_pattern(free):
    p = BoundaryPattern()
    assert validate_pattern(free, p) == []
    for k in range(7):
        assert iota(free, p, unit(k)) == 0
        assert is_pure(free, p, unit(k))


def test_triangle_pattern_is_valid(free):
    p = BoundaryPattern.from_slots(free, FACE3)
    assert validate_pattern(free, p) == []
    assert set(pattern_degrees(free, p).values()) == {2}


def test_isolated_edge_is_invalid(free):
    report = validate_pattern(free, BoundaryPattern.from_slots(free, [(0, 0)]))
    assert len(report) == 2
    assert all("pattern degree 1" in line for line in report)


def test_interior_edge_is_invalid(s3_2):
    report = validate_pattern(s3_2, BoundaryPattern.from_slots(s3_2, [(0, 0)]))
    assert report and "not on the boundary" in report[0]


def test_bad_slot(free):
    with pytest.raises(ValueError):
        BoundaryPattern.from_slots(free, [(0, 7)])


@pytest.mark.parametrize("corner,expected", [(0, 2), (1, 2), (2, 2), (3, 0)])
def test_triangle_meets_face_pattern(free, corner, expected):
    p = BoundaryPattern.from_slots(free, FACE3)
    assert iota(free, p, unit(tri_index(0, corner))) == expected


def test_quad_meets_face_pattern(free):
    p = BoundaryPattern.from_slots(free, FACE3)
    # quad 01|23 crosses edges 02 and 12 of face 3; 02|13 crosses 01 and 12
    assert iota(free, p, unit(4)) == 2
    assert iota(free, p, unit(5)) == 2


def test_link_of_vertex_off_pattern_is_pure(free):
    p = BoundaryPattern.from_slots(free, FACE3)
    vclass = free.skeleton.vert_of[0][3]
    assert is_pure(free, p, vertex_link(free, vclass))
    assert not is_pure(free, p, unit(tri_index(0, 0)))


def test_additive_over_sums(solid_torus):
    sk = solid_torus.skeleton
    boundary = [c for c in range(sk.num_edges) if sk.edge_boundary[c]]
    p = BoundaryPattern(frozenset(boundary))
    fund = enumerate_fundamental(solid_torus, 8)
    for a in fund:
        for b in fund:
            s = normal_sum(solid_torus, a, b)
            if s:
                assert iota(solid_torus, p, s) == iota(solid_torus, p, a) + iota(solid_torus, p, b)
