"""Isomorphism by trying every image of tetrahedron 0 and propagating."""

from itertools import permutations

PERMS4 = list(permutations(range(4)))


def _compose(p, q):
    # (p o q)(x) = p[q[x]]
    return tuple(p[q[x]] for x in range(4))


def _inverse(p):
    out = [0] * 4
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _try(A, B, j0, p0):
    """Extend tet 0 -> (j0, p0) to a full map A -> B, or return None."""
    n = len(A)
    tmap = {0: j0}
    pmap = {0: p0}
    used = {j0}
    stack = [0]
    while stack:
        i = stack.pop()
        p = pmap[i]
        for f in range(4):
            ga = A[i][f]
            gb = B[tmap[i]][p[f]]
            if (ga is None) != (gb is None):
                return None
            if ga is None:
                continue
            k, q = ga
            l, r = gb
            # B-gluing r sends p(v) to r(p(v)); the image labelling of k must be r o p o q^-1
            want = _compose(r, _compose(p, _inverse(q)))
            if k in tmap:
                if tmap[k] != l or pmap[k] != want:
                    return None
            else:
                if l in used:
                    return None
                tmap[k] = l
                pmap[k] = want
                used.add(l)
                stack.append(k)
    if len(tmap) != n:
        return None
    return tmap, pmap


def isomorphic(A, B):
    """True iff the connected gluing tables A and B are isomorphic."""
    if len(A) != len(B):
        return False
    if sorted(sum(g is None for g in row) for row in A) != sorted(sum(g is None for g in row) for row in B):
        return False
    for j0 in range(len(B)):
        for p0 in PERMS4:
            if _try(A, B, j0, p0) is not None:
                return True
    return False


def relabel(A, tet_map, perms):
    """Apply tet i -> tet_map[i] with vertex labels through perms[i]."""
    n = len(A)
    out = [[None] * 4 for _ in range(n)]
    for i in range(n):
        p = perms[i]
        for f in range(4):
            g = A[i][f]
            if g is None:
                continue
            k, q = g
            # new gluing: new face p(f) of tet_map[i] -> tet_map[k], perm pk o q o p^-1
            out[tet_map[i]][p[f]] = (tet_map[k], _compose(perms[k], _compose(q, _inverse(p))))
    return out
