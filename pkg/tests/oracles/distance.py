"""Exact move distance by exhaustive breadth-first search from one side.

States are deduplicated by a naive canonical form (least relabelled gluing
list over every choice of starting tetrahedron and vertex labelling), which
shares no code with the library's signature.
"""

from itertools import permutations

from oracles.iso import _compose, _inverse

PERMS4 = list(permutations(range(4)))


def _root_key(rows, r, p0):
    # invariant of a root: which new faces are boundary or glued to the same tetrahedron
    pinv = _inverse(p0)
    return tuple(
        0 if g is None else (1 if g[0] == r else 2) for g in (rows[r][pinv[F]] for F in range(4))
    )


def _code(rows, r, p0):
    """Gluing list relabelled breadth-first from tet ``r`` with labelling ``p0``."""
    # new labelling of old tet i is perm[i]: old vertex v -> new perm[i][v]
    order, perm, pos = [r], {r: p0}, {r: 0}
    code = []
    k = 0
    while k < len(order):
        i = order[k]
        p = perm[i]
        pinv = _inverse(p)
        for F in range(4):
            g = rows[i][pinv[F]]
            if g is None:
                code.append((-1, ()))
                continue
            j, q = g
            if j not in perm:
                # label j so that the gluing reads as the identity
                perm[j] = _compose(p, _inverse(q))
                pos[j] = len(order)
                order.append(j)
            code.append((pos[j], _compose(perm[j], _compose(q, pinv))))
        k += 1
    if len(order) != len(rows):
        raise ValueError("only connected triangulations are supported")
    return tuple(code)


def canonical(rows):
    roots = [(r, p0) for r in range(len(rows)) for p0 in PERMS4]
    keys = {root: _root_key(rows, *root) for root in roots}
    low = min(keys.values())
    return min(_code(rows, *root) for root in roots if keys[root] == low)


def distance(a, b, kinds, max_tets, max_depth, step):
    """Least number of moves from ``a`` to ``b`` or None beyond ``max_depth``.

    ``step(rows, kinds)`` must yield the gluing rows of every neighbour.
    """
    goal = canonical(b)
    start = canonical(a)
    if start == goal:
        return 0
    seen = {start}
    layer = [a]
    for d in range(1, max_depth + 1):
        nxt = []
        for rows in layer:
            for nb in step(rows, kinds):
                if len(nb) > max_tets:
                    continue
                c = canonical(nb)
                if c == goal:
                    return d
                if c not in seen:
                    seen.add(c)
                    nxt.append(nb)
        layer = nxt
    return None
