"""Normal surfaces in standard coordinates.

A coordinate vector has 7 entries per tetrahedron: the triangle counts at
vertices 0..3, then the quadrilateral counts for the pairings 01|23, 02|13,
03|12.  Quadrilaterals of one type are numbered from the side holding vertex
0; triangles at a vertex are numbered outwards from that vertex.
"""

from dataclasses import dataclass
from itertools import product

from trikit.perm import EDGE_INDEX, EDGE_VERTS, QUAD_OF_PAIR, QUAD_PAIRS, face_verts, sign


class NormalError(ValueError):
    pass


@dataclass(frozen=True)
class Incompatible:
    """Two summands that put different quadrilateral types in one tetrahedron."""

    tet: int
    quads: tuple

    def __bool__(self):
        return False

    def __str__(self):
        return f"incompatible: tetrahedron {self.tet} would carry quad types {self.quads}"


@dataclass(frozen=True)
class Equation:
    face: int  # face class
    corner: int  # vertex of the face (first slot) the arc type cuts off
    terms: tuple  # ((coordinate index, coefficient), ...)

    def value(self, v):
        return sum(c * v[k] for k, c in self.terms)


@dataclass(frozen=True)
class ComponentReport:
    euler: int
    orientable: bool
    closed: bool
    boundary_curves: int
    discs: int


@dataclass(frozen=True)
class SurfaceReport:
    components: tuple
    weight: int
    discs: int

    @property
    def euler(self):
        return sum(c.euler for c in self.components)

    @property
    def num_components(self):
        return len(self.components)


def tri_index(i, v):
    return 7 * i + v


def quad_index(i, q):
    return 7 * i + 4 + q


def format_coords(v):
    return f"ns:{len(v) // 7}:" + ",".join(str(x) for x in v)


def parse_coords(text, t=None):
    parts = text.strip().split(":")
    if len(parts) != 3 or parts[0] != "ns":
        raise NormalError(f"bad coordinate vector {text!r}; expected ns:<t>:<c0>,<c1>,...")
    try:
        n = int(parts[1])
        vals = tuple(int(x) for x in parts[2].split(",")) if parts[2] else ()
    except ValueError:
        raise NormalError(f"bad coordinate vector {text!r}") from None
    if len(vals) != 7 * n:
        raise NormalError(f"vector has {len(vals)} entries, expected 7*{n}")
    if t is not None and n != t:
        raise NormalError(f"vector is for {n} tetrahedra, triangulation has {t}")
    if any(x < 0 for x in vals):
        raise NormalError("coordinates must be non-negative")
    return vals


def _check_length(tri, v):
    if len(v) != 7 * tri.size:
        raise NormalError(f"vector has length {len(v)}, expected {7 * tri.size}")


def matching_system(tri):
    """One equation per interior face class and normal arc type."""
    sk = tri.skeleton
    eqs = []
    for c, slots in enumerate(sk.faces):
        if len(slots) != 2:
            continue
        i, f = slots[0]
        j, p = tri.gluings[i][f]
        g = p[f]
        for v in face_verts(f):
            w = p[v]
            terms = (
                (tri_index(i, v), 1),
                (quad_index(i, QUAD_OF_PAIR[v, f]), 1),
                (tri_index(j, w), -1),
                (quad_index(j, QUAD_OF_PAIR[w, g]), -1),
            )
            eqs.append(Equation(c, v, terms))
    return eqs


def quad_conflict(v):
    """First tetrahedron with two nonzero quad types, as ``(i, types)``, or None."""
    for i in range(len(v) // 7):
        nz = tuple(q for q in range(3) if v[7 * i + 4 + q])
        if len(nz) > 1:
            return i, nz
    return None


def is_admissible(tri, v, system=None):
    _check_length(tri, v)
    if any(x < 0 for x in v):
        return False
    if quad_conflict(v) is not None:
        return False
    eqs = matching_system(tri) if system is None else system
    return all(e.value(v) == 0 for e in eqs)


def normal_sum(tri, a, b):
    _check_length(tri, a)
    _check_length(tri, b)
    s = tuple(x + y for x, y in zip(a, b))
    bad = quad_conflict(s)
    if bad is not None:
        return Incompatible(*bad)
    return s


def vertex_link(tri, vclass):
    """Coordinates of the normal surface linking a vertex class."""
    v = [0] * (7 * tri.size)
    for i, u in tri.skeleton.vertices[vclass]:
        v[tri_index(i, u)] += 1
    return tuple(v)


def edge_weight(v, i, e):
    """Number of points where the surface meets edge ``e`` of tetrahedron ``i``."""
    a, b = EDGE_VERTS[e]
    base = 7 * i
    w = v[base + a] + v[base + b]
    same = QUAD_OF_PAIR[a, b]
    for q in range(3):
        if q != same:
            w += v[base + 4 + q]
    return w


def weight(tri, v):
    _check_length(tri, v)
    return sum(edge_weight(v, *slots[0]) for slots in tri.skeleton.edges)


def disc_count(v):
    return sum(v)


# --- fundamental surfaces -----------------------------------------------------


def _dominates(x, y):
    return all(a >= b for a, b in zip(x, y))


def enumerate_fundamental(tri, cap):
    """Admissible vectors with entries <= cap that are not sums of two nonzero ones.

    Each quadrilateral choice (at most one type per tetrahedron) gives a cone;
    a depth-first search with equation propagation lists its lattice points,
    pruning any branch that already dominates a known nonzero solution (the
    difference would then be admissible too).
    """
    if cap < 1:
        raise NormalError("cap must be at least 1")
    n = 7 * tri.size
    eqs = [e.terms for e in matching_system(tri)]
    found = []
    for choice in product(range(4), repeat=tri.size):
        free = []
        for i, q in enumerate(choice):
            free += [tri_index(i, u) for u in range(4)]
            if q < 3:
                free.append(quad_index(i, q))
        found += _cone_points(n, free, eqs, cap, found)
    found.sort(key=lambda x: (sum(x), x))
    minimal = []
    for x in found:
        if not any(_dominates(x, m) for m in minimal):
            minimal.append(x)
    return sorted(minimal, key=lambda x: (sum(x), x))


def _cone_points(n, free, eqs, cap, known):
    fixed_zero = set(range(n)) - set(free)
    # equations restricted to free variables; drop terms pinned at zero
    local = []
    for terms in eqs:
        t = tuple((k, c) for k, c in terms if k not in fixed_zero)
        merged = {}
        for k, c in t:
            merged[k] = merged.get(k, 0) + c
        t = tuple((k, c) for k, c in merged.items() if c)
        if t:
            local.append(t)
    eqs_of = {k: [] for k in free}
    for idx, terms in enumerate(local):
        for k, _ in terms:
            eqs_of[k].append(idx)

    val = [0] * n
    assigned = [False] * n
    for k in fixed_zero:
        assigned[k] = True
    out = []
    seen = list(known)

    def consistent_and_forced(k, trail):
        # after assigning k, check touched equations and force singletons
        queue = [k]
        while queue:
            x = queue.pop()
            for idx in eqs_of[x]:
                terms = local[idx]
                rest = [(y, c) for y, c in terms if not assigned[y]]
                total = sum(c * val[y] for y, c in terms if assigned[y])
                if not rest:
                    if total:
                        return False
                elif len(rest) == 1:
                    y, c = rest[0]
                    if total % c:
                        return False
                    forced = -total // c
                    if forced < 0 or forced > cap:
                        return False
                    val[y] = forced
                    assigned[y] = True
                    trail.append(y)
                    queue.append(y)
                else:
                    pos = sum(cap for y, c in rest if c > 0)
                    neg = sum(cap for y, c in rest if c < 0)
                    if total + pos < 0 or total - neg > 0:
                        return False
        return True

    order = list(free)

    def dfs(pos):
        while pos < len(order) and assigned[order[pos]]:
            pos += 1
        if pos == len(order):
            if any(val):
                vec = tuple(val)
                if not any(_dominates(vec, m) for m in seen):
                    out.append(vec)
                    seen.append(vec)
            return
        k = order[pos]
        for x in range(cap + 1):
            val[k] = x
            assigned[k] = True
            trail = [k]
            ok = consistent_and_forced(k, trail)
            if ok and x and any(_dominates(val, m) for m in seen):
                ok = False
            if ok:
                dfs(pos + 1)
            for y in trail:
                assigned[y] = False
                val[y] = 0

    dfs(0)
    return out


# --- reconstruction -----------------------------------------------------------


class _DSU:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _quad_pos(v, i, q, k, near):
    """Index of the ``k``-th quad of type ``q`` counted from vertex ``near``."""
    nq = v[quad_index(i, q)]
    return k if near in QUAD_PAIRS[q][0] else nq - 1 - k


def _arc_disc(v, i, f, corner, k):
    """Disc carrying the ``k``-th arc from ``corner`` in face ``f`` of tet ``i``."""
    nt = v[tri_index(i, corner)]
    if k < nt:
        return (i, corner, k), 1
    q = QUAD_OF_PAIR[corner, f]
    tau = 1 if 0 in (corner, f) else -1
    return (i, 4 + q, _quad_pos(v, i, q, k - nt, corner)), tau


def _edge_disc(v, i, e, k):
    """Disc through the ``k``-th point of edge ``e`` (counted from its lower vertex)."""
    a, b = EDGE_VERTS[e]
    na = v[tri_index(i, a)]
    if k < na:
        return (i, a, k)
    k -= na
    for q in range(3):
        if q == QUAD_OF_PAIR[a, b]:
            continue
        nq = v[quad_index(i, q)]
        if k < nq:
            return (i, 4 + q, _quad_pos(v, i, q, k, a))
        k -= nq
    nb = v[tri_index(i, b)]
    return (i, b, nb - 1 - k)


def reconstruct(tri, v):
    """Components of the surface with Euler characteristic, orientability and boundary."""
    _check_length(tri, v)
    if quad_conflict(v) is not None:
        raise NormalError("vector is not admissible: two quad types in one tetrahedron")
    sk = tri.skeleton
    G = tri.gluings
    dsu = _DSU()
    discs = []
    for i in range(tri.size):
        for slot in range(7):
            for k in range(v[7 * i + slot]):
                d = (i, slot, k)
                discs.append(d)
                dsu.add(d)

    # arcs: glue discs across interior faces and record orientation constraints
    arcs = []  # (disc, boundary?)
    links = []  # (d1, d2, relative orientation)
    for slots in sk.faces:
        i, f = slots[0]
        g = G[i][f]
        for corner in face_verts(f):
            count = v[tri_index(i, corner)] + v[quad_index(i, QUAD_OF_PAIR[corner, f])]
            for k in range(count):
                d1, tau1 = _arc_disc(v, i, f, corner, k)
                if g is None:
                    arcs.append((d1, True, (i, f, corner, k)))
                    continue
                j, p = g
                d2, tau2 = _arc_disc(v, j, p[f], p[corner], k)
                dsu.union(d1, d2)
                arcs.append((d1, False, None))
                links.append((d1, d2, tau1 * tau2 * -sign(p)))

    # points on edges, attributed to the disc met in the first slot
    points = []
    for c, slots in enumerate(sk.edges):
        i, e = slots[0]
        for k in range(edge_weight(v, i, e)):
            points.append(_edge_disc(v, i, e, k))

    comp_of = {}
    for d in discs:
        comp_of.setdefault(dsu.find(d), len(comp_of))
    ncomp = len(comp_of)
    D = [0] * ncomp
    A = [0] * ncomp
    P = [0] * ncomp
    for d in discs:
        D[comp_of[dsu.find(d)]] += 1
    for d, _, _ in arcs:
        A[comp_of[dsu.find(d)]] += 1
    for d in points:
        P[comp_of[dsu.find(d)]] += 1

    orientable = [True] * ncomp
    orient = {}
    adj = {}
    for d1, d2, rel in links:
        adj.setdefault(d1, []).append((d2, rel))
        adj.setdefault(d2, []).append((d1, rel))
    for d in discs:
        if d in orient:
            continue
        orient[d] = 1
        stack = [d]
        while stack:
            x = stack.pop()
            for y, rel in adj.get(x, ()):
                want = orient[x] * rel
                if y not in orient:
                    orient[y] = want
                    stack.append(y)
                elif orient[y] != want:
                    orientable[comp_of[dsu.find(y)]] = False

    curves = _boundary_curves(tri, v, [a[2] for a in arcs if a[1]], dsu, comp_of)
    comps = tuple(
        ComponentReport(P[n] - A[n] + D[n], orientable[n], curves[n] == 0, curves[n], D[n])
        for n in range(ncomp)
    )
    return SurfaceReport(comps, weight(tri, v), sum(v))


def _point_id(tri, v, i, e, k_from_lo):
    """Edge-class coordinates of a point given in local edge terms."""
    sk = tri.skeleton
    c = sk.edge_of[i][e]
    w = edge_weight(v, i, e)
    return c, (k_from_lo if sk.edge_sign[i][e] > 0 else w - 1 - k_from_lo)


def _boundary_curves(tri, v, bdy_arcs, dsu, comp_of):
    curves = [0] * len(comp_of)
    pts = _DSU()
    owner = {}
    for i, f, corner, k in bdy_arcs:
        ends = []
        for other in face_verts(f):
            if other == corner:
                continue
            e = EDGE_INDEX[corner, other]
            lo = EDGE_VERTS[e][0]
            w = edge_weight(v, i, e)
            ends.append(_point_id(tri, v, i, e, k if corner == lo else w - 1 - k))
        for pt in ends:
            pts.add(pt)
        pts.union(ends[0], ends[1])
        d, _ = _arc_disc(v, i, f, corner, k)
        owner[ends[0]] = comp_of[dsu.find(d)]
    seen = set()
    for pt, comp in owner.items():
        r = pts.find(pt)
        if r not in seen:
            seen.add(r)
            curves[comp] += 1
    return curves
