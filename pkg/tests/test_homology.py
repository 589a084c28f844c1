import pytest

from conftest import corpus_items, rows_of
from oracles.homology import betti1
from trikit.homology import homology


def test_free(free):
    h = homology(free)
    assert (h.b1_z, h.b1_z2) == (0, 0)
    assert str(h) == "0"


def test_solid_torus(solid_torus):
    h = homology(solid_torus)
    assert h.b1_z == 1
    assert betti1(rows_of(solid_torus)) == 1


@pytest.mark.parametrize("name,tri", corpus_items())
def test_matches_rank_oracle(name, tri):
    h = homology(tri)
    rows = rows_of(tri)
    assert h.b1_z == betti1(rows)
    assert h.b1_z2 == betti1(rows, mod=2)


@pytest.mark.parametrize("prefix,expected", [
    ("ball", "0"), ("folded_ball", "0"), ("s3", "0"), ("solid_torus", "Z"),
    ("l41", "Z_4"), ("l52", "Z_5"),
])
def test_known_groups(prefix, expected):
    items = [tri for name, tri in corpus_items() if name.rsplit("_", 1)[0] == prefix]
    assert items
    for tri in items:
        assert str(homology(tri)) == expected
