"""Permutations of the four vertices of a tetrahedron.

A permutation is a plain tuple ``p`` of length 4 where ``p[i]`` is the image
of vertex ``i``.  Hot loops index into the precomputed tables below instead
of building tuples.
"""

from itertools import permutations

Perm = tuple

PERMS = tuple(permutations(range(4)))
PERM_INDEX = {p: k for k, p in enumerate(PERMS)}
IDENTITY = (0, 1, 2, 3)

# edge index 0..5 <-> vertex pairs (01, 02, 03, 12, 13, 23)
EDGE_VERTS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {}
for _k, (_a, _b) in enumerate(EDGE_VERTS):
    EDGE_INDEX[_a, _b] = _k
    EDGE_INDEX[_b, _a] = _k

# quadrilateral types are the pairings 01|23, 02|13, 03|12, in that order
QUAD_PAIRS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))
QUAD_OF_PAIR = {}
for _q, (_x, _y) in enumerate(QUAD_PAIRS):
    for _a, _b in (_x, _y):
        QUAD_OF_PAIR[_a, _b] = _q
        QUAD_OF_PAIR[_b, _a] = _q


def compose(p, q):
    """Return ``p o q`` (apply ``q`` first)."""
    return (p[q[0]], p[q[1]], p[q[2]], p[q[3]])


def inverse(p):
    inv = [0, 0, 0, 0]
    for i, pi in enumerate(p):
        inv[pi] = i
    return tuple(inv)


def sign(p):
    s = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] > p[j]:
                s = -s
    return s


def parse_perm(text):
    if len(text) != 4 or sorted(text) != ["0", "1", "2", "3"]:
        raise ValueError(f"not a permutation of 0123: {text!r}")
    return tuple(int(c) for c in text)


def perm_str(p):
    return "".join(str(i) for i in p)


def face_verts(f):
    """Vertices of face ``f`` (the face opposite vertex ``f``) in increasing order."""
    return tuple(v for v in range(4) if v != f)


def other_two(a, b):
    """The two vertices not in ``{a, b}``, in increasing order."""
    return tuple(v for v in range(4) if v != a and v != b)


INV_TABLE = tuple(PERM_INDEX[inverse(p)] for p in PERMS)
COMPOSE_TABLE = tuple(tuple(PERM_INDEX[compose(p, q)] for q in PERMS) for p in PERMS)
