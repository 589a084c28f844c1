"""Euler characteristic and weight of a normal surface counted cell by cell."""

from oracles.homology import cells


def _sep(a, b, q):
    # quad type q splits {0,1,2,3} as 0x|yz with x = q + 1
    side = {0, q + 1}
    return (a in side) != (b in side)


def edge_points(v, i, a, b):
    t = v[7 * i: 7 * i + 7]
    return t[a] + t[b] + sum(t[4 + q] for q in range(3) if _sep(a, b, q))


def face_arcs(v, i, f):
    t = v[7 * i: 7 * i + 7]
    total = 0
    for c in range(4):
        if c == f:
            continue
        total += t[c] + sum(t[4 + q] for q in range(3) if not _sep(c, f, q))
    return total


def weight(rows, v):
    vd, ed, sign, verts, edges, faces = cells(rows)
    return sum(edge_points(v, *e) for e in edges)


def euler(rows, v):
    vd, ed, sign, verts, edges, faces = cells(rows)
    points = sum(edge_points(v, *e) for e in edges)
    arcs = sum(face_arcs(v, i, f) for i, f in faces)
    return points - arcs + sum(v)
