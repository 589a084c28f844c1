"""Fundamental normal surfaces by brute force over a box of coordinates.

Every vector with entries in ``0..cap`` is tried (split in two halves that
are matched on their equation residuals), and the nonzero admissible
solutions that dominate no other solution are kept.  Inside a box, a vector
is a sum of two nonzero admissible solutions exactly when it dominates a
smaller nonzero solution, so this is the fundamental set.
"""

import numpy as np

QUAD = {frozenset(s): q for q, pair in enumerate(((0, 1), (0, 2), (0, 3))) for s in
        (pair, tuple(x for x in range(4) if x not in pair))}


def equations(rows):
    """Rows of the matching matrix, one per interior face pair and corner."""
    n = len(rows)
    done = set()
    eqs = []
    for i in range(n):
        for f in range(4):
            g = rows[i][f]
            if g is None or (i, f) in done:
                continue
            j, p = g
            done.add((i, f))
            done.add((j, p[f]))
            for v in range(4):
                if v == f:
                    continue
                row = np.zeros(7 * n, dtype=np.int64)
                row[7 * i + v] += 1
                row[7 * i + 4 + QUAD[frozenset((v, f))]] += 1
                row[7 * j + p[v]] -= 1
                row[7 * j + 4 + QUAD[frozenset((p[v], p[f]))]] -= 1
                eqs.append(row)
    return np.array(eqs, dtype=np.int64).reshape(len(eqs), 7 * n)


def _box(n_tets, cap):
    """All admissible blocks for ``n_tets`` tetrahedra, as an int64 array."""
    one = np.indices((cap + 1,) * 7).reshape(7, -1).T
    quads = (one[:, 4:] > 0).sum(axis=1)
    one = one[quads <= 1]
    out = np.zeros((1, 0), dtype=np.int64)
    for _ in range(n_tets):
        a = np.repeat(out, len(one), axis=0)
        b = np.tile(one, (len(out), 1))
        out = np.hstack([a, b])
    return out


def brute_fundamentals(rows, cap):
    n = len(rows)
    A = equations(rows)
    left_t = (n + 1) // 2
    L = _box(left_t, cap)
    R = _box(n - left_t, cap)
    rl = L @ A[:, : 7 * left_t].T if len(A) else np.zeros((len(L), 0), dtype=np.int64)
    rr = -(R @ A[:, 7 * left_t:].T) if len(A) else np.zeros((len(R), 0), dtype=np.int64)
    index = {}
    for k, key in enumerate(map(bytes, rr)):
        index.setdefault(key, []).append(k)
    sols = []
    for k, key in enumerate(map(bytes, rl)):
        for m in index.get(key, ()):
            sols.append(np.concatenate([L[k], R[m]]))
    sols = [s for s in sols if s.any()]
    sols.sort(key=lambda s: (int(s.sum()), tuple(int(x) for x in s)))
    minimal = []
    for s in sols:
        if minimal and np.all(np.array(minimal) <= s, axis=1).any():
            continue
        minimal.append(s)
    return sorted(tuple(int(x) for x in s) for s in minimal)
