"""Pachner moves and single-tetrahedron boundary moves.

Interior moves are modelled on the boundary of the 4-simplex with vertex
labels 0..4, whose facets are named by the label they omit.  A k-(5-k) move
locates k facets of that boundary (the disc being replaced) as distinct
tetrahedra of the triangulation, then swaps them for the complementary
5-k facets.  The same routine handles all four interior kinds.

Boundary moves attach a new tetrahedron along K boundary faces or remove a
tetrahedron that meets the boundary in 4-K faces; on the boundary surface
they act as the 2-dimensional 1-3, 2-2 and 3-1 moves.
"""

import enum
from dataclasses import dataclass, field
from functools import cached_property

from trikit.perm import EDGE_INDEX, EDGE_VERTS, face_verts, inverse, parse_perm, perm_str
from trikit.triangulation import Triangulation, boundary_neighbour


class MoveError(ValueError):
    """Raised when a move site does not apply to a triangulation."""


class MoveKind(enum.Enum):
    OneFour = "14"
    FourOne = "41"
    TwoThree = "23"
    ThreeTwo = "32"
    BdyAttach1 = "bA1"
    BdyAttach2 = "bA2"
    BdyAttach3 = "bA3"
    BdyRemove1 = "bR1"
    BdyRemove2 = "bR2"
    BdyRemove3 = "bR3"

    @property
    def order(self):
        return _KIND_ORDER[self]

    @property
    def delta(self):
        return _DELTA[self]

    @property
    def inverse(self):
        return _INVERSE[self]

    @property
    def is_boundary(self):
        return self.value.startswith("b")

    @classmethod
    def parse(cls, text):
        for k in cls:
            if text in (k.value, k.name):
                return k
        raise ValueError(f"unknown move kind {text!r}")


_KIND_ORDER = {k: n for n, k in enumerate(MoveKind)}
_DELTA = {
    MoveKind.OneFour: 3, MoveKind.FourOne: -3, MoveKind.TwoThree: 1, MoveKind.ThreeTwo: -1,
    MoveKind.BdyAttach1: 1, MoveKind.BdyAttach2: 1, MoveKind.BdyAttach3: 1,
    MoveKind.BdyRemove1: -1, MoveKind.BdyRemove2: -1, MoveKind.BdyRemove3: -1,
}
_INVERSE = {
    MoveKind.OneFour: MoveKind.FourOne, MoveKind.FourOne: MoveKind.OneFour,
    MoveKind.TwoThree: MoveKind.ThreeTwo, MoveKind.ThreeTwo: MoveKind.TwoThree,
    MoveKind.BdyAttach1: MoveKind.BdyRemove1, MoveKind.BdyRemove1: MoveKind.BdyAttach1,
    MoveKind.BdyAttach2: MoveKind.BdyRemove2, MoveKind.BdyRemove2: MoveKind.BdyAttach2,
    MoveKind.BdyAttach3: MoveKind.BdyRemove3, MoveKind.BdyRemove3: MoveKind.BdyAttach3,
}
INTERIOR_KINDS = frozenset(
    (MoveKind.OneFour, MoveKind.FourOne, MoveKind.TwoThree, MoveKind.ThreeTwo)
)
BOUNDARY_KINDS = frozenset(k for k in MoveKind if k.is_boundary)
ATTACH_K = {MoveKind.BdyAttach1: 1, MoveKind.BdyAttach2: 2, MoveKind.BdyAttach3: 3}
REMOVE_K = {MoveKind.BdyRemove1: 1, MoveKind.BdyRemove2: 2, MoveKind.BdyRemove3: 3}
_ATTACH_OF = {k: kind for kind, k in ATTACH_K.items()}
_REMOVE_OF = {k: kind for kind, k in REMOVE_K.items()}

_ANCHOR_TAG = {
    MoveKind.OneFour: "t", MoveKind.FourOne: "v", MoveKind.TwoThree: "f", MoveKind.ThreeTwo: "e",
}


@dataclass(frozen=True)
class MoveSite:
    """Where a move happens.

    ``anchor`` is ``(index,)`` for interior kinds (a tetrahedron for OneFour,
    otherwise a skeleton class) and for removals (a tetrahedron); attachments
    use ``(faces, perm)`` where ``perm`` maps the new tetrahedron's vertices
    onto the first listed face.
    """

    kind: MoveKind
    anchor: tuple

    def sort_key(self):
        return (self.kind.order, self.anchor)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def token(self):
        k = self.kind
        if k in ATTACH_K:
            faces, perm = self.anchor
            return f"{k.value}@" + ",".join(f"{i}.{f}" for i, f in faces) + f":{perm_str(perm)}"
        if k in REMOVE_K:
            return f"{k.value}@t:{self.anchor[0]}"
        return f"{k.value}@{_ANCHOR_TAG[k]}:{self.anchor[0]}"

    __str__ = token

    @classmethod
    def parse(cls, token):
        head, at, rest = token.strip().partition("@")
        if not at:
            raise ValueError(f"bad move token {token!r}")
        kind = MoveKind.parse(head)
        try:
            if kind in ATTACH_K:
                slots, colon, perm = rest.rpartition(":")
                faces = tuple(tuple(int(x) for x in s.split(".")) for s in slots.split(","))
                if len(faces) != ATTACH_K[kind] or any(len(f) != 2 for f in faces):
                    raise ValueError
                return cls(kind, (faces, parse_perm(perm)))
            tag, colon, idx = rest.partition(":")
            want = "t" if kind in REMOVE_K else _ANCHOR_TAG[kind]
            if tag != want or not colon:
                raise ValueError
            return cls(kind, (int(idx),))
        except ValueError:
            raise ValueError(f"bad move token {token!r}") from None


@dataclass(frozen=True, eq=False)
class MoveRecord:
    site: MoveSite
    source: Triangulation
    result: Triangulation
    fresh: tuple  # indices of created tetrahedra in the result
    compaction: dict = field(repr=False)  # provisional label -> final index (None if deleted)
    _inverse_hint: tuple = field(repr=False, default=())

    @cached_property
    def inverse(self):
        return _inverse_site(self)


# --- 4-simplex model for interior moves ---------------------------------------

_MODEL_A = {
    MoveKind.OneFour: (4,),
    MoveKind.TwoThree: (3, 4),
    MoveKind.ThreeTwo: (0, 1, 2),
    MoveKind.FourOne: (0, 1, 2, 3),
}
# psi_l: new tetrahedron for facet l has vertex m labelled _PSI[l][m]
_PSI = tuple(tuple(x for x in range(5) if x != l) for l in range(5))
_PSI_INV = tuple({x: m for m, x in enumerate(_PSI[l])} for l in range(5))


def _missing(phi):
    return 10 - sum(phi)


def _embed(tri, tet, phi, labels):
    """Locate the facets ``labels`` as distinct tetrahedra, starting from
    tetrahedron ``tet`` with vertex labelling ``phi``; ``None`` on failure."""
    G = tri.gluings
    A = set(labels)
    start = _missing(phi)
    placed = {start: (tet, phi)}
    label_of = {tet: start}
    stack = [(tet, phi)]
    while stack:
        i, ph = stack.pop()
        a = _missing(ph)
        for m in range(4):
            l = ph[m]
            if l not in A:
                continue
            g = G[i][m]
            if g is None:
                return None
            j, s = g
            psi = [0, 0, 0, 0]
            for k in range(4):
                psi[s[k]] = a if k == m else ph[k]
            psi = tuple(psi)
            have = label_of.get(j)
            if have is None:
                if l in placed:
                    return None
                placed[l] = (j, psi)
                label_of[j] = l
                stack.append((j, psi))
            elif have != l or placed[l][1] != psi:
                return None
    if len(placed) != len(A):
        return None
    return placed


def _interior_start(tri, site):
    sk = tri.skeleton
    kind = site.kind
    c = site.anchor[0]
    if kind is MoveKind.OneFour:
        if not 0 <= c < tri.size:
            raise MoveError(f"{site}: no tetrahedron {c}")
        return c, (0, 1, 2, 3)
    if kind is MoveKind.TwoThree:
        if not 0 <= c < sk.num_faces:
            raise MoveError(f"{site}: no face class {c}")
        if sk.face_boundary[c]:
            raise MoveError(f"{site}: face {c} is on the boundary")
        i, f = sk.faces[c][0]
        phi = [0, 0, 0, 0]
        phi[f] = 3
        for n, v in enumerate(face_verts(f)):
            phi[v] = n
        return i, tuple(phi)
    if kind is MoveKind.ThreeTwo:
        if not 0 <= c < sk.num_edges:
            raise MoveError(f"{site}: no edge class {c}")
        if sk.edge_boundary[c] or len(sk.edges[c]) != 3:
            raise MoveError(f"{site}: edge {c} is not an interior edge of degree 3")
        i, e = sk.edges[c][0]
        u, v = EDGE_VERTS[e]
        phi = [0, 0, 0, 0]
        phi[u], phi[v] = 3, 4
        w, x = (y for y in range(4) if y not in (u, v))
        phi[w], phi[x] = 1, 2
        return i, tuple(phi)
    if kind is MoveKind.FourOne:
        if not 0 <= c < sk.num_vertices:
            raise MoveError(f"{site}: no vertex class {c}")
        if sk.vertex_boundary[c] or len(sk.vertices[c]) != 4:
            raise MoveError(f"{site}: vertex {c} is not an interior vertex of degree 4")
        i, v = sk.vertices[c][0]
        phi = [0, 0, 0, 0]
        phi[v] = 4
        for n, w in enumerate(y for y in range(4) if y != v):
            phi[w] = n + 1
        return i, tuple(phi)
    raise MoveError(f"{site}: not an interior move")


def _apply_interior(tri, site):
    i, phi = _interior_start(tri, site)
    A = _MODEL_A[site.kind]
    placed = _embed(tri, i, phi, A)
    if placed is None:
        raise MoveError(
            f"{site}: the tetrahedra around the site are not {len(A)} distinct tetrahedra "
            f"glued as in the boundary of a 4-simplex"
        )
    G = tri.gluings
    n = tri.size
    new_labels = [l for l in range(5) if l not in A]
    removed = {placed[a][0] for a in A}
    label_of = {placed[a][0]: a for a in A}
    survivors = [k for k in range(n) if k not in removed]
    final = {k: idx for idx, k in enumerate(survivors)}
    new_index = {l: len(survivors) + r for r, l in enumerate(new_labels)}

    rows = []
    for k in survivors:
        row = []
        for f, g in enumerate(G[k]):
            if g is None:
                row.append(None)
                continue
            j, s = g
            if j not in removed:
                row.append((final[j], s))
                continue
            kk = label_of[j]
            phk = placed[kk][1]
            l = phk[s[f]]
            psi_inv = _PSI_INV[l]
            perm = [0, 0, 0, 0]
            for w in range(4):
                perm[w] = psi_inv[kk] if w == f else psi_inv[phk[s[w]]]
            row.append((new_index[l], tuple(perm)))
        rows.append(row)

    for l in new_labels:
        psi = _PSI[l]
        row = []
        for m in range(4):
            k = psi[m]  # face m of the new tetrahedron is opposite label k
            if k not in A:
                inv_k = _PSI_INV[k]
                perm = tuple(inv_k[l] if w == m else inv_k[psi[w]] for w in range(4))
                row.append((new_index[k], perm))
                continue
            a, pha = placed[k]
            pha_inv = {x: y for y, x in enumerate(pha)}
            h = pha_inv[l]
            g = G[a][h]
            if g is None:
                row.append(None)
                continue
            x, tau = g
            if x not in removed:
                perm = tuple(tau[h] if w == m else tau[pha_inv[psi[w]]] for w in range(4))
                row.append((final[x], perm))
                continue
            kx = label_of[x]
            phx = placed[kx][1]
            lx = phx[tau[h]]
            inv_x = _PSI_INV[lx]
            perm = tuple(
                inv_x[kx] if w == m else inv_x[phx[tau[pha_inv[psi[w]]]]] for w in range(4)
            )
            row.append((new_index[lx], perm))
        rows.append(row)

    result = Triangulation._trusted(rows)
    compaction = {k: final.get(k) for k in range(n)}
    for r, l in enumerate(new_labels):
        compaction[n + r] = new_index[l]
    fresh = tuple(new_index[l] for l in new_labels)
    return MoveRecord(site, tri, result, fresh, compaction)


# --- boundary moves -----------------------------------------------------------


def _face_edge_classes(tri, i, f):
    sk = tri.skeleton
    x, y, z = face_verts(f)
    return [sk.edge_of[i][EDGE_INDEX[a, b]] for a, b in ((x, y), (x, z), (y, z))]


def _remaining(a, b, c):
    return 6 - a - b - c


def _attach_plan(tri, kind, faces, perm):
    """Gluings of the new tetrahedron as ``[(its face, (i, f), perm)]``; raises
    MoveError naming the failed precondition."""
    K = ATTACH_K[kind]
    G = tri.gluings
    if len(faces) != K:
        raise MoveError(f"{kind.value} needs {K} boundary faces")
    for i, f in faces:
        if not (0 <= i < tri.size and 0 <= f < 4):
            raise MoveError(f"face {i}.{f} does not exist")
        if G[i][f] is not None:
            raise MoveError(f"face {i}.{f} is not a boundary face")
    if len(set(faces)) != K:
        raise MoveError("the boundary faces must be distinct")
    i, f = faces[0]
    p = perm
    if K == 1:
        if p[3] != f:
            raise MoveError(f"perm {perm_str(p)} does not carry face 3 onto face {f}")
        return [(3, (i, f), p)]
    if K == 2:
        if p[3] != f:
            raise MoveError(f"perm {perm_str(p)} does not carry face 3 onto face {f}")
        j, g, a2, b2 = boundary_neighbour(tri, i, f, p[0], p[1])
        if (j, g) != tuple(faces[1]):
            raise MoveError(f"faces {i}.{f} and {faces[1][0]}.{faces[1][1]} are not adjacent along the attaching edge")
        p2 = (a2, b2, g, _remaining(a2, b2, g))
        e1 = _face_edge_classes(tri, i, f)
        e2 = _face_edge_classes(tri, j, g)
        if len(set(e1)) != 3 or len(set(e2)) != 3:
            raise MoveError("each attaching face must have three distinct edges")
        if len(set(e1) & set(e2)) != 1:
            raise MoveError("the two boundary faces must share exactly one edge")
        return [(3, (i, f), p), (2, (j, g), p2)]
    # K == 3: the new vertex 3 sits at the boundary vertex of degree 3
    if p[2] != f:
        raise MoveError(f"perm {perm_str(p)} does not carry face 2 onto face {f}")
    j, g, a1, b1 = boundary_neighbour(tri, i, f, p[0], p[3])
    p1 = (a1, g, _remaining(a1, b1, g), b1)
    k, h, a0, b0 = boundary_neighbour(tri, i, f, p[1], p[3])
    p0 = (h, a0, _remaining(a0, b0, h), b0)
    jj, gg, c2, c3 = boundary_neighbour(tri, j, g, p1[2], p1[3])
    if (jj, gg, c2, c3) != (k, h, p0[2], p0[3]):
        raise MoveError("the boundary vertex does not have degree 3")
    got = sorted([(i, f), (j, g), (k, h)])
    if len(set(got)) != 3 or got != sorted(tuple(x) for x in faces):
        raise MoveError("the three faces do not surround a boundary vertex of degree 3")
    return [(2, (i, f), p), (1, (j, g), p1), (0, (k, h), p0)]


def _apply_attach(tri, site):
    faces, perm = site.anchor
    plan = _attach_plan(tri, site.kind, tuple(tuple(x) for x in faces), tuple(perm))
    n = tri.size
    rows = [list(r) for r in tri.gluings]
    new_row = [None] * 4
    for h, (i, f), p in plan:
        new_row[h] = (i, p)
        rows[i][f] = (n, inverse(p))
    rows.append(new_row)
    result = Triangulation._trusted(rows)
    compaction = {k: k for k in range(n + 1)}
    return MoveRecord(site, tri, result, (n,), compaction)


def _removal_problem(tri, N, K):
    """Why tetrahedron N cannot be removed by BdyRemoveK (None if it can)."""
    G = tri.gluings
    if not 0 <= N < tri.size:
        return f"no tetrahedron {N}"
    if tri.size < 2:
        return "cannot remove the only tetrahedron"
    glued = [f for f in range(4) if G[N][f] is not None]
    if len(glued) != K:
        return f"tetrahedron {N} meets the boundary in {4 - len(glued)} faces, not {4 - K}"
    if any(G[N][f][0] == N for f in glued):
        return f"tetrahedron {N} is glued to itself"
    sk = tri.skeleton
    if K == 1:
        apex = glued[0]
        if len(sk.vertices[sk.vert_of[N][apex]]) != 1:
            return f"the free vertex {apex} of tetrahedron {N} lies in other tetrahedra"
        return None
    if K == 2:
        r, s = glued
        p, q = (v for v in range(4) if v not in glued)
        if len(sk.edges[sk.edge_of[N][EDGE_INDEX[r, s]]]) != 1:
            return f"the boundary edge {r}{s} of tetrahedron {N} lies in other tetrahedra"
        if sk.edge_boundary[sk.edge_of[N][EDGE_INDEX[p, q]]]:
            return f"edge {p}{q} of tetrahedron {N} is on the boundary"
        cls = lambda a, b: sk.edge_of[N][EDGE_INDEX[a, b]]
        side_r = {cls(p, s), cls(q, s)}
        side_s = {cls(p, r), cls(q, r)}
        if len(side_r) != 2 or len(side_s) != 2 or side_r & side_s:
            return "the exposed faces would not share exactly one edge"
        return None
    w = next(v for v in range(4) if v not in glued)
    vc = sk.vert_of[N][w]
    if sk.vertex_boundary[vc]:
        return f"vertex {w} of tetrahedron {N} is not interior"
    if any(sk.vert_of[N][v] == vc for v in glued):
        return f"vertex {w} of tetrahedron {N} meets the tetrahedron more than once"
    return None


def _apply_remove(tri, site):
    K = REMOVE_K[site.kind]
    N = site.anchor[0]
    why = _removal_problem(tri, N, K)
    if why is not None:
        raise MoveError(f"{site}: {why}")
    n = tri.size
    final = {k: (k if k < N else k - 1) for k in range(n) if k != N}
    exposed = []
    rows = []
    for k in range(n):
        if k == N:
            continue
        row = []
        for f, g in enumerate(tri.gluings[k]):
            if g is None:
                row.append(None)
            elif g[0] == N:
                row.append(None)
                exposed.append((g[1][f], (final[k], f)))
            else:
                row.append((final[g[0]], g[1]))
        rows.append(row)
    result = Triangulation._trusted(rows)
    compaction = dict(final)
    compaction[N] = None
    exposed.sort()
    return MoveRecord(site, tri, result, (), compaction, tuple(x for _, x in exposed))


# --- canonical attachment sites -----------------------------------------------


def _attach1_site(tri, face):
    i, f = face
    return MoveSite(MoveKind.BdyAttach1, ((face,), (*face_verts(f), f)))


def _attach2_site(tri, f1, f2):
    """Canonical BdyAttach2 site for two boundary faces, or None."""
    if f2 < f1:
        f1, f2 = f2, f1
    i, f = f1
    x, y, z = face_verts(f)
    for a, b in ((x, y), (x, z), (y, z)):
        j, g, _, _ = boundary_neighbour(tri, i, f, a, b)
        if (j, g) == f2:
            site = MoveSite(MoveKind.BdyAttach2, ((f1, f2), (a, b, _remaining(a, b, f), f)))
            try:
                _attach_plan(tri, site.kind, site.anchor[0], site.anchor[1])
            except MoveError:
                continue
            return site
    return None


def _attach3_site(tri, faces, vclass):
    faces = tuple(sorted(faces))
    i, f = faces[0]
    sk = tri.skeleton
    corner = [u for u in face_verts(f) if sk.vert_of[i][u] == vclass]
    if len(corner) != 1:
        return None
    u = corner[0]
    a, b = (v for v in range(4) if v not in (u, f))
    site = MoveSite(MoveKind.BdyAttach3, (faces, (a, b, f, u)))
    try:
        _attach_plan(tri, site.kind, faces, site.anchor[1])
    except MoveError:
        return None
    return site


def _inverse_site(record):
    kind = record.site.kind
    res = record.result
    if kind in ATTACH_K:
        return MoveSite(_REMOVE_OF[ATTACH_K[kind]], (record.fresh[0],))
    if kind in REMOVE_K:
        faces = record._inverse_hint
        K = REMOVE_K[kind]
        if K == 1:
            return _attach1_site(res, faces[0])
        if K == 2:
            return _attach2_site(res, faces[0], faces[1])
        i, f = faces[0]
        # the vertex opposite the surviving boundary face of the removed tetrahedron
        src = record.source
        N = record.site.anchor[0]
        w = next(v for v in range(4) if src.gluings[N][v] is None)
        j, p = src.gluings[N][next(v for v in range(4) if v != w)]
        old_tet = j
        new_tet = record.compaction[old_tet]
        vclass = res.skeleton.vert_of[new_tet][p[w]]
        return _attach3_site(res, faces, vclass)
    sk = res.skeleton
    fresh = record.fresh
    if kind is MoveKind.OneFour:
        return MoveSite(MoveKind.FourOne, (sk.vert_of[fresh[0]][3],))
    if kind is MoveKind.TwoThree:
        return MoveSite(MoveKind.ThreeTwo, (sk.edge_of[fresh[0]][5],))
    if kind is MoveKind.ThreeTwo:
        return MoveSite(MoveKind.TwoThree, (sk.face_of[fresh[0]][3],))
    return MoveSite(MoveKind.OneFour, (fresh[0],))


# --- public interface ---------------------------------------------------------


def enumerate_moves(tri, kinds=None):
    """All applicable move sites of the given kinds, sorted by kind then anchor."""
    kinds = set(MoveKind) if kinds is None else set(kinds)
    sk = tri.skeleton
    G = tri.gluings
    sites = []
    if MoveKind.OneFour in kinds:
        sites += [MoveSite(MoveKind.OneFour, (i,)) for i in range(tri.size)]
    if MoveKind.FourOne in kinds:
        for c, slots in enumerate(sk.vertices):
            if len(slots) == 4 and not sk.vertex_boundary[c]:
                site = MoveSite(MoveKind.FourOne, (c,))
                if _embed(tri, *_interior_start(tri, site), _MODEL_A[site.kind]) is not None:
                    sites.append(site)
    if MoveKind.TwoThree in kinds:
        for c, slots in enumerate(sk.faces):
            if len(slots) == 2 and slots[0][0] != slots[1][0]:
                sites.append(MoveSite(MoveKind.TwoThree, (c,)))
    if MoveKind.ThreeTwo in kinds:
        for c, slots in enumerate(sk.edges):
            if len(slots) == 3 and not sk.edge_boundary[c]:
                site = MoveSite(MoveKind.ThreeTwo, (c,))
                if _embed(tri, *_interior_start(tri, site), _MODEL_A[site.kind]) is not None:
                    sites.append(site)
    bfaces = tri.boundary_faces() if kinds & BOUNDARY_KINDS else []
    if MoveKind.BdyAttach1 in kinds:
        sites += [_attach1_site(tri, bf) for bf in bfaces]
    if MoveKind.BdyAttach2 in kinds:
        for f1 in bfaces:
            i, f = f1
            x, y, z = face_verts(f)
            for a, b in ((x, y), (x, z), (y, z)):
                j, g, _, _ = boundary_neighbour(tri, i, f, a, b)
                if (j, g) > f1:
                    site = _attach2_site(tri, f1, (j, g))
                    if site is not None and site.anchor[0][1] == (j, g):
                        sites.append(site)
    if MoveKind.BdyAttach3 in kinds:
        corners = {}
        for i, f in bfaces:
            for u in face_verts(f):
                corners.setdefault(sk.vert_of[i][u], []).append((i, f))
        for vclass in sorted(corners):
            fs = corners[vclass]
            if len(fs) == 3 and len(set(fs)) == 3:
                site = _attach3_site(tri, fs, vclass)
                if site is not None:
                    sites.append(site)
    for kind, K in REMOVE_K.items():
        if kind in kinds:
            for N in range(tri.size):
                if _removal_problem(tri, N, K) is None:
                    sites.append(MoveSite(kind, (N,)))
    sites = sorted(set(sites))
    return sites


def apply_move(tri, site):
    """Apply ``site`` to ``tri``; returns ``(result, record)``."""
    if isinstance(site, str):
        site = MoveSite.parse(site)
    kind = site.kind
    if kind in INTERIOR_KINDS:
        if kind is MoveKind.TwoThree:
            sk = tri.skeleton
            c = site.anchor[0]
            if 0 <= c < sk.num_faces and len(sk.faces[c]) == 2 and sk.faces[c][0][0] == sk.faces[c][1][0]:
                raise MoveError(f"{site}: both sides of face {c} belong to one tetrahedron")
        record = _apply_interior(tri, site)
    elif kind in ATTACH_K:
        try:
            record = _apply_attach(tri, site)
        except MoveError as exc:
            raise MoveError(f"{site}: {exc}") from None
    else:
        record = _apply_remove(tri, site)
    return record.result, record


def invert(record):
    return record.inverse
