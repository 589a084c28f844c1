"""Canonical signatures for triangulations up to combinatorial isomorphism.

Every choice of a starting tetrahedron and a vertex labelling for it induces
a breadth-first relabelling of the whole component; the signature is the
least resulting gluing code.  Roots are first filtered by the degree pattern
of their six edges, which is invariant under relabelling and cheap.
"""

from functools import lru_cache

from trikit.perm import COMPOSE_TABLE, EDGE_INDEX, EDGE_VERTS, INV_TABLE, PERM_INDEX, PERMS

PREFIX = "s1:"
_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


def _indexed(tri):
    return [
        [None if g is None else (g[0], PERM_INDEX[g[1]]) for g in row] for row in tri.gluings
    ]


# FACE_EDGES[f]: local edges on face f; EDGE_IMAGE[p][e]: edge index of p(e)
FACE_EDGES = tuple(tuple(e for e, (a, b) in enumerate(EDGE_VERTS) if f not in (a, b)) for f in range(4))
EDGE_IMAGE = tuple(tuple(EDGE_INDEX[p[a], p[b]] for a, b in EDGE_VERTS) for p in PERMS)


def edge_degrees(G, n):
    """Degree of the edge class through every (tetrahedron, edge) slot."""
    parent = list(range(6 * n))
    # union-find with path halving, inlined: this runs once per signature
    for i in range(n):
        row = G[i]
        for f in range(4):
            g = row[f]
            if g is None or g[0] < i:
                continue
            j, p = g
            img = EDGE_IMAGE[p]
            for e in FACE_EDGES[f]:
                a = 6 * i + e
                while parent[a] != a:
                    parent[a] = a = parent[parent[a]]
                b = 6 * j + img[e]
                while parent[b] != b:
                    parent[b] = b = parent[parent[b]]
                if a != b:
                    parent[b] = a
    roots = []
    count = {}
    for x in range(6 * n):
        while parent[x] != x:
            x = parent[x]
        roots.append(x)
        count[x] = count.get(x, 0) + 1
    return [[count[roots[6 * i + e]] for e in range(6)] for i in range(n)]


def _components(tri):
    seen = [False] * tri.size
    comps = []
    for s in range(tri.size):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            i = stack.pop()
            comp.append(i)
            for g in tri.gluings[i]:
                if g is not None and not seen[g[0]]:
                    seen[g[0]] = True
                    stack.append(g[0])
        comps.append(sorted(comp))
    return comps


def _root_keys(tri, tets, G, deg):
    """Roots whose relabelled edge-degree and boundary pattern is minimal.

    The first key entry is the degree of the new edge 01, so only roots that
    send 01 onto an edge of least degree can win; their full keys decide.
    """
    low = min(min(deg[r]) for r in tets)
    keys = {}
    for r in tets:
        d = deg[r]
        if low not in d:
            continue
        free = [g is None for g in G[r]]
        at = d.__getitem__
        for pi, img in enumerate(EDGE_IMAGE):
            if d[img[0]] != low:
                continue
            keys[r, pi] = (tuple(map(at, img)), tuple(map(free.__getitem__, PERMS[pi])))
    best = min(keys.values())
    return [root for root, key in keys.items() if key == best]


def _canonical_codes(tri, tets, G, deg):
    best = None
    for root in _root_keys(tri, tets, G, deg):
        codes = _encode_with_abort(G, root, best)
        if codes is not None and (best is None or codes < best):
            best = codes
    return best


def _encode_with_abort(G, root, best):
    """BFS code from ``root``; None as soon as it is known to exceed ``best``."""
    r, p0 = root
    order = [r]
    perm_of = {r: p0}
    idx_of = {r: 0}
    codes = []
    decided = best is None  # True once codes is already strictly below best
    compose, inv = COMPOSE_TABLE, INV_TABLE
    n = 0
    while n < len(order):
        o = order[n]
        p = perm_of[o]
        pp = PERMS[p]
        row = G[o]
        for F in range(4):
            g = row[pp[F]]
            if g is None:
                code = 0
            else:
                j, s = g
                sp = compose[s][p]
                k = idx_of.get(j)
                if k is None:
                    k = idx_of[j] = len(order)
                    order.append(j)
                    perm_of[j] = sp
                code = 1 + 24 * k + compose[inv[perm_of[j]]][sp]
            if not decided:
                b = best[len(codes)]
                if code > b:
                    return None
                if code < b:
                    decided = True
            codes.append(code)
        n += 1
    return codes


@lru_cache(maxsize=None)
def _code_table(width):
    digits = []
    for c in range(62 ** width):
        out = ""
        for _ in range(width):
            c, d = divmod(c, 62)
            out = _ALPHABET[d] + out
        digits.append(out)
    return digits


def _pack(t, codes):
    width = 1
    while 62 ** width <= 24 * t + 1:
        width += 1
    if width <= 2:
        table = _code_table(width)
        return f"{t}:" + "".join([table[c] for c in codes])
    out = []
    for c in codes:
        digits = []
        for _ in range(width):
            c, d = divmod(c, 62)
            digits.append(_ALPHABET[d])
        out.append("".join(reversed(digits)))
    return f"{t}:" + "".join(out)


def signature(tri):
    """Canonical string; equal exactly for isomorphic triangulations."""
    G = _indexed(tri)
    deg = edge_degrees(G, tri.size)
    if tri.size:
        # the common connected case needs no component split
        codes = _canonical_codes(tri, range(tri.size), G, deg)
        if len(codes) == 4 * tri.size:
            return PREFIX + _pack(tri.size, codes)
    parts = []
    for comp in _components(tri):
        codes = _canonical_codes(tri, comp, G, deg)
        parts.append(_pack(len(comp), codes))
    parts.sort()
    return PREFIX + "+".join(parts)


def is_isomorphic(a, b):
    if a.size != b.size:
        return False
    return signature(a) == signature(b)
