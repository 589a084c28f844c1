import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).resolve().parent
sys.path.insert(0, str(TESTS))

from trikit import census  # noqa: E402
from trikit.triangulation import Triangulation, parse  # noqa: E402

FREE = "tri v1\ntets=1\n0: _ | _ | _ | _\n"
S3_2 = "tri v1\ntets=2\n0: 1:0123 | 1:0123 | 1:0123 | 1:0123\n1: 0:0123 | 0:0123 | 0:0123 | 0:0123\n"
SOLID_TORUS = "tri v1\ntets=1\n0: _ | _ | 0:2031 | 0:1302\n"


@pytest.fixture
def free():
    return Triangulation.free_tetrahedron()


@pytest.fixture
def s3_2():
    return parse(S3_2)


@pytest.fixture
def solid_torus():
    return parse(SOLID_TORUS)


def corpus_items(max_size=None):
    return [(n, census.load(n)) for n in census.names() if max_size is None or census.load(n).size <= max_size]


def rows_of(tri):
    return [list(r) for r in tri.gluings]


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
