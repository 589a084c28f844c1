"""Gluing-table triangulations of compact 3-manifolds.

A triangulation is a list of tetrahedra; face ``f`` of tetrahedron ``i`` (the
face opposite vertex ``f``) is either on the boundary or glued to face
``p[f]`` of tetrahedron ``j`` through the vertex map ``p``.  Faces of the same
tetrahedron may be glued together, so the triangulation need not be
combinatorial.
"""

from dataclasses import dataclass
from functools import cached_property

from trikit.perm import (
    EDGE_INDEX,
    EDGE_VERTS,
    IDENTITY,
    face_verts,
    inverse,
    parse_perm,
    perm_str,
    sign,
)


class TriangulationError(ValueError):
    """A gluing table that does not describe a triangulation."""


class ParseError(TriangulationError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Triangulation:
    """Immutable gluing table.

    ``gluings[i][f]`` is ``None`` for a boundary face, otherwise a pair
    ``(j, perm)``.  Derived combinatorics live on :attr:`skeleton`.
    """

    __slots__ = ("_gluings", "__dict__")

    def __init__(self, gluings, check=True):
        self._gluings = tuple(
            tuple(None if g is None else (int(g[0]), tuple(g[1])) for g in row)
            for row in gluings
        )
        if check:
            check_gluings(self._gluings)

    @classmethod
    def _trusted(cls, rows):
        """Wrap rows of ``(int, tuple)`` entries built by the move engine."""
        obj = cls.__new__(cls)
        obj._gluings = tuple(tuple(row) for row in rows)
        return obj

    @classmethod
    def free_tetrahedron(cls):
        return cls([[None] * 4])

    @property
    def gluings(self):
        return self._gluings

    @property
    def size(self):
        return len(self._gluings)

    def __len__(self):
        return len(self._gluings)

    def adjacent(self, tet, face):
        return self._gluings[tet][face]

    def boundary_faces(self):
        return [
            (i, f) for i, row in enumerate(self._gluings) for f in range(4) if row[f] is None
        ]

    @property
    def is_closed(self):
        return all(g is not None for row in self._gluings for g in row)

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self._gluings == other._gluings

    def __hash__(self):
        return hash(self._gluings)

    def __repr__(self):
        return f"<Triangulation t={self.size} boundary_faces={len(self.boundary_faces())}>"

    def relabel(self, tet_map, perms=None):
        """Rename tetrahedron ``i`` to ``tet_map[i]``, relabelling its
        vertices by ``perms[i]`` (old vertex ``v`` becomes ``perms[i][v]``)."""
        n = self.size
        if perms is None:
            perms = [IDENTITY] * n
        rows = [None] * n
        for i, row in enumerate(self._gluings):
            pi = perms[i]
            pinv = inverse(pi)
            new_row = [None] * 4
            for f, g in enumerate(row):
                if g is None:
                    continue
                j, s = g
                pj = perms[j]
                # new vertex w of i -> old pi^-1(w) -> s -> pj
                new_row[pi[f]] = (tet_map[j], tuple(pj[s[pinv[w]]] for w in range(4)))
            rows[tet_map[i]] = new_row
        return Triangulation(rows, check=False)

    @cached_property
    def skeleton(self):
        return Skeleton(self)

    @cached_property
    def is_orientable(self):
        orient = [0] * self.size
        for start in range(self.size):
            if orient[start]:
                continue
            orient[start] = 1
            stack = [start]
            while stack:
                i = stack.pop()
                for g in self._gluings[i]:
                    if g is None:
                        continue
                    j, p = g
                    want = -orient[i] * sign(p)
                    if orient[j] == 0:
                        orient[j] = want
                        stack.append(j)
                    elif orient[j] != want:
                        return False
        return True


def check_gluings(gluings):
    """Raise TriangulationError unless the table is involutive and in range."""
    n = len(gluings)
    if n < 1:
        raise TriangulationError("a triangulation needs at least one tetrahedron")
    for i, row in enumerate(gluings):
        if len(row) != 4:
            raise TriangulationError(f"tetrahedron {i} must have 4 faces")
        for f, g in enumerate(row):
            if g is None:
                continue
            j, p = g
            if not 0 <= j < n:
                raise TriangulationError(f"face {i}.{f} glued to missing tetrahedron {j}")
            if sorted(p) != [0, 1, 2, 3]:
                raise TriangulationError(f"face {i}.{f} has a bad permutation {p}")
            h = p[f]
            if j == i and h == f and all(p[v] == v for v in range(4)):
                raise TriangulationError(f"face {i}.{f} glued to itself by the identity")
            back = gluings[j][h]
            if back is None or back[0] != i or tuple(back[1]) != inverse(p):
                raise TriangulationError(
                    f"involutivity: face {i}.{f} -> {j}.{h} via {perm_str(p)} "
                    f"is not matched by {j}.{h} -> {i}.{f} via {perm_str(inverse(p))}"
                )


# --- text format --------------------------------------------------------------


@dataclass(frozen=True)
class Document:
    tri: Triangulation
    pattern: tuple = ()  # (tet, edge) slots


def parse_document(text):
    lines = [
        (k + 1, line.rstrip("\n"))
        for k, line in enumerate(text.splitlines())
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines or lines[0][1].strip() != "tri v1":
        raise ParseError("expected header 'tri v1'", lines[0][0] if lines else 1)
    if len(lines) < 2 or not lines[1][1].startswith("tets="):
        raise ParseError("expected 'tets=<t>'", lines[1][0] if len(lines) > 1 else 2)
    lineno, header = lines[1]
    try:
        t = int(header[5:])
    except ValueError:
        raise ParseError(f"bad tetrahedron count {header[5:]!r}", lineno) from None
    if t < 1:
        raise ParseError("tetrahedron count must be at least 1", lineno)
    body = lines[2:]
    if len(body) < t:
        raise ParseError(f"expected {t} tetrahedron lines, found {len(body)}", lines[-1][0])
    rows = []
    where = {}
    for k in range(t):
        lineno, line = body[k]
        where[k] = lineno
        head, sep, rest = line.partition(": ")
        if not sep or head.strip() != str(k):
            raise ParseError(f"expected '{k}: ...'", lineno)
        fields = rest.split(" | ")
        if len(fields) != 4:
            raise ParseError("expected 4 face fields separated by ' | '", lineno)
        row = []
        for f, field in enumerate(fields):
            field = field.strip()
            if field == "_":
                row.append(None)
                continue
            j, sep, p = field.partition(":")
            try:
                j = int(j)
                p = parse_perm(p)
            except ValueError:
                raise ParseError(f"bad gluing {field!r} on face {f}", lineno) from None
            if not sep:
                raise ParseError(f"bad gluing {field!r} on face {f}", lineno)
            if not 0 <= j < t:
                raise ParseError(f"face {k}.{f} glued to out-of-range tetrahedron {j}", lineno)
            row.append((j, p))
        rows.append(row)
    pattern = ()
    for lineno, line in body[t:]:
        if not line.startswith("pattern:"):
            raise ParseError(f"unexpected line {line!r}", lineno)
        try:
            pattern = parse_slots(line[len("pattern:"):], t)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    for i, row in enumerate(rows):
        try:
            check_gluings_row(rows, i)
        except TriangulationError as exc:
            raise ParseError(str(exc), where[i]) from None
    return Document(Triangulation(rows, check=False), pattern)


def check_gluings_row(rows, i):
    n = len(rows)
    for f, g in enumerate(rows[i]):
        if g is None:
            continue
        j, p = g
        h = p[f]
        if j == i and h == f and p == IDENTITY:
            raise TriangulationError(f"face {i}.{f} glued to itself by the identity")
        back = rows[j][h] if 0 <= j < n else None
        if back is None or back[0] != i or tuple(back[1]) != inverse(p):
            raise TriangulationError(
                f"involutivity: face {i}.{f} -> {j}.{h} via {perm_str(p)} "
                f"is not matched by the entry for face {j}.{h}"
            )


def parse_slots(text, t=None):
    slots = []
    for tok in text.split():
        a, dot, b = tok.partition(".")
        if not dot:
            raise ValueError(f"bad edge slot {tok!r}")
        i, e = int(a), int(b)
        if not 0 <= e < 6 or i < 0 or (t is not None and i >= t):
            raise ValueError(f"edge slot {tok!r} out of range")
        slots.append((i, e))
    return tuple(slots)


def parse(text):
    return parse_document(text).tri


def serialize(tri, pattern=None):
    lines = ["tri v1", f"tets={tri.size}"]
    for i, row in enumerate(tri.gluings):
        fields = ["_" if g is None else f"{g[0]}:{perm_str(g[1])}" for g in row]
        lines.append(f"{i}: " + " | ".join(fields))
    if pattern:
        lines.append("pattern: " + " ".join(f"{i}.{e}" for i, e in pattern))
    return "\n".join(lines) + "\n"


def load(path):
    with open(path) as fh:
        return parse_document(fh.read())


# --- skeleton -----------------------------------------------------------------


class _UnionFind:
    __slots__ = ("parent", "parity")

    def __init__(self, n):
        self.parent = list(range(n))
        self.parity = [0] * n

    def find(self, x):
        parent, parity = self.parent, self.parity
        path = []
        while parent[x] != x:
            path.append(x)
            x = parent[x]
        # compress, accumulating parity towards the root
        acc = 0
        for y in reversed(path):
            acc ^= parity[y]
            parity[y] = acc
            parent[y] = x
        return x

    def union(self, a, b, rel=0):
        """Merge with parity(a) ^ parity(b) == rel; False on a contradiction."""
        ra, rb = self.find(a), self.find(b)
        pa, pb = self.parity[a], self.parity[b]
        if ra == rb:
            return (pa ^ pb) == rel
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ rel
        return True


class Skeleton:
    """Vertex, edge and face classes of a triangulation.

    Classes are numbered in order of their first slot, scanning tetrahedra and
    then local indices in increasing order.  Edge and face slots carry a sign
    giving their orientation relative to the first slot of their class.
    """

    def __init__(self, tri):
        n = tri.size
        G = tri.gluings
        vuf = _UnionFind(4 * n)
        euf = _UnionFind(6 * n)
        fuf = _UnionFind(4 * n)
        bad_edge_slots = set()
        for i in range(n):
            for f in range(4):
                g = G[i][f]
                if g is None:
                    continue
                j, p = g
                h = p[f]
                if (j, h) < (i, f):
                    continue
                fv = face_verts(f)
                img = (p[fv[0]], p[fv[1]], p[fv[2]])
                fuf.union(4 * i + f, 4 * j + h, 0 if sign_of_images(img) > 0 else 1)
                for v in fv:
                    vuf.union(4 * i + v, 4 * j + p[v])
                for a, b in ((fv[0], fv[1]), (fv[0], fv[2]), (fv[1], fv[2])):
                    pa, pb = p[a], p[b]
                    ok = euf.union(6 * i + EDGE_INDEX[a, b], 6 * j + EDGE_INDEX[pa, pb],
                                   0 if pa < pb else 1)
                    if not ok:
                        bad_edge_slots.add(6 * i + EDGE_INDEX[a, b])

        self.size = n
        self.vertices, self.vert_of, _ = _classes(vuf, n, 4)
        self.edges, self.edge_of, self.edge_sign = _classes(euf, n, 6)
        self.faces, self.face_of, self.face_sign = _classes(fuf, n, 4)
        self.invalid_edges = sorted({self.edge_of[s // 6][s % 6] for s in bad_edge_slots})

        self.face_boundary = [G[s[0][0]][s[0][1]] is None for s in self.faces]
        edge_bdy = [False] * len(self.edges)
        vert_bdy = [False] * len(self.vertices)
        for i in range(n):
            for f in range(4):
                if G[i][f] is None:
                    fv = face_verts(f)
                    for v in fv:
                        vert_bdy[self.vert_of[i][v]] = True
                    for a, b in ((fv[0], fv[1]), (fv[0], fv[2]), (fv[1], fv[2])):
                        edge_bdy[self.edge_of[i][EDGE_INDEX[a, b]]] = True
        self.edge_boundary = edge_bdy
        self.vertex_boundary = vert_bdy

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return len(self.edges)

    @property
    def num_faces(self):
        return len(self.faces)

    def edge_ends(self, c):
        """Vertex classes at the start and end of edge class ``c``."""
        i, e = self.edges[c][0]
        a, b = EDGE_VERTS[e]
        return self.vert_of[i][a], self.vert_of[i][b]

    def vertex_link_euler(self):
        """Euler characteristic and closedness of every vertex link."""
        nv = len(self.vertices)
        tri_count = [len(s) for s in self.vertices]
        link_edges = [0] * nv
        link_verts = [0] * nv
        closed = [not b for b in self.vertex_boundary]
        for c, slots in enumerate(self.faces):
            i, f = slots[0]
            for v in face_verts(f):
                link_edges[self.vert_of[i][v]] += 1
        for c in range(len(self.edges)):
            a, b = self.edge_ends(c)
            link_verts[a] += 1
            link_verts[b] += 1
        return [(link_verts[k] - link_edges[k] + tri_count[k], closed[k]) for k in range(nv)]


def sign_of_images(img):
    """Sign of the permutation sorting the three face-vertex images."""
    s = 1
    for x in range(3):
        for y in range(x + 1, 3):
            if img[x] > img[y]:
                s = -s
    return s


def _classes(uf, n, per):
    classes = []
    cls_of_root = {}
    of = [[0] * per for _ in range(n)]
    sgn = [[1] * per for _ in range(n)]
    root_parity = {}
    for i in range(n):
        for k in range(per):
            s = per * i + k
            r = uf.find(s)
            c = cls_of_root.get(r)
            if c is None:
                c = cls_of_root[r] = len(classes)
                classes.append([])
                root_parity[r] = uf.parity[s]
            classes[c].append((i, k))
            of[i][k] = c
            sgn[i][k] = -1 if uf.parity[s] ^ root_parity[r] else 1
    return classes, of, sgn


# --- validity and invariants --------------------------------------------------


def validate(tri):
    """List every violated manifold condition; an empty list means valid."""
    sk = tri.skeleton
    report = []
    for c in sk.invalid_edges:
        i, e = sk.edges[c][0]
        report.append(f"edge {c} ({i}.{e}): identified with itself in reverse")
    for i, row in enumerate(tri.gluings):
        for f, g in enumerate(row):
            if g is not None and g[0] == i and g[1][f] == f:
                report.append(f"face {i}.{f}: glued to itself")
    if sk.invalid_edges:
        return report
    for c, (chi, closed) in enumerate(sk.vertex_link_euler()):
        if closed and chi != 2:
            report.append(f"vertex {c}: link is a closed surface with euler characteristic {chi}, not a sphere")
        elif not closed and chi != 1:
            report.append(f"vertex {c}: link is a bounded surface with euler characteristic {chi}, not a disc")
    return report


def is_valid(tri):
    return not validate(tri)


def euler_characteristic(tri):
    sk = tri.skeleton
    return sk.num_vertices - sk.num_edges + sk.num_faces - tri.size


def boundary_neighbour(tri, i, f, a, b):
    """Walk around edge ``ab`` of boundary face ``(i, f)`` to the next boundary face.

    Returns ``(j, g, a2, b2)``: the boundary face reached and the images of
    ``a`` and ``b`` in tetrahedron ``j``.
    """
    G = tri.gluings
    k = i
    came = f
    for _ in range(6 * tri.size + 1):
        x = 6 - a - b - came  # the remaining vertex; its opposite face is next
        g = G[k][x]
        if g is None:
            return k, x, a, b
        k, p = g
        came = p[x]
        a, b = p[a], p[b]
    raise TriangulationError(f"walk around edge {a}{b} of face {i}.{f} did not terminate")


@dataclass(frozen=True)
class BoundaryComponent:
    index: int
    euler: int
    orientable: bool
    faces: int

    @property
    def genus(self):
        if self.orientable:
            return (2 - self.euler) // 2
        return 2 - self.euler


def boundary_components(tri):
    """Connected components of the boundary surface, in order of first face."""
    sk = tri.skeleton
    faces = tri.boundary_faces()
    index = {bf: k for k, bf in enumerate(faces)}
    comp = [-1] * len(faces)
    orient = [0] * len(faces)
    orientable = []
    members = []
    for start in range(len(faces)):
        if comp[start] >= 0:
            continue
        cid = len(members)
        members.append([])
        orientable.append(True)
        comp[start] = cid
        orient[start] = 1
        stack = [start]
        while stack:
            k = stack.pop()
            members[cid].append(k)
            i, f = faces[k]
            fv = face_verts(f)
            for a, b in ((fv[0], fv[1]), (fv[1], fv[2]), (fv[2], fv[0])):
                j, g, a2, b2 = boundary_neighbour(tri, i, f, a, b)
                m = index[j, g]
                d1 = _cycle_dir(f, a, b)
                d2 = _cycle_dir(g, a2, b2)
                want = -orient[k] * d1 * d2
                if comp[m] < 0:
                    comp[m] = cid
                    orient[m] = want
                    stack.append(m)
                elif orient[m] != want:
                    orientable[cid] = False
    result = []
    for cid, ks in enumerate(members):
        verts, edges = set(), set()
        for k in ks:
            i, f = faces[k]
            fv = face_verts(f)
            for v in fv:
                verts.add(sk.vert_of[i][v])
            for a, b in ((fv[0], fv[1]), (fv[0], fv[2]), (fv[1], fv[2])):
                edges.add(sk.edge_of[i][EDGE_INDEX[a, b]])
        result.append(BoundaryComponent(cid, len(verts) - len(edges) + len(ks), orientable[cid], len(ks)))
    return result


def _cycle_dir(f, a, b):
    """+1 if a->b follows the cyclic order of the sorted vertices of face f."""
    x0, x1, x2 = face_verts(f)
    return 1 if (a, b) in ((x0, x1), (x1, x2), (x2, x0)) else -1
