"""First homology of a triangulation from its cellular chain complex."""

from dataclasses import dataclass

from trikit.perm import EDGE_INDEX, face_verts


@dataclass(frozen=True)
class HomologyProfile:
    b1_z: int
    b1_z2: int
    torsion: tuple = ()

    def __str__(self):
        parts = ["Z"] * self.b1_z + [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def boundary_matrices(tri):
    """Integer matrices of d1 (edges -> vertices) and d2 (faces -> edges).

    Rows index the target cells, columns the source cells; each class is
    oriented by its first slot.
    """
    sk = tri.skeleton
    d1 = [[0] * sk.num_edges for _ in range(sk.num_vertices)]
    for c in range(sk.num_edges):
        start, end = sk.edge_ends(c)
        d1[end][c] += 1
        d1[start][c] -= 1
    d2 = [[0] * sk.num_faces for _ in range(sk.num_edges)]
    for c, slots in enumerate(sk.faces):
        i, f = slots[0]
        x, y, z = face_verts(f)
        for (a, b), s in (((y, z), 1), ((x, z), -1), ((x, y), 1)):
            e = EDGE_INDEX[a, b]
            d2[sk.edge_of[i][e]][c] += s * sk.edge_sign[i][e]
    return d1, d2


def homology(tri):
    from sympy.polys.domains import GF, ZZ
    from sympy.polys.matrices import DomainMatrix
    from sympy.polys.matrices.normalforms import invariant_factors

    sk = tri.skeleton
    d1, d2 = boundary_matrices(tri)
    n1 = sk.num_edges

    def rank(rows, ncols, dom):
        if not rows or ncols == 0:
            return 0
        m = DomainMatrix([[dom(v) for v in r] for r in rows], (len(rows), ncols), dom)
        return m.rank()

    r1 = rank(d1, n1, ZZ.get_field())
    r2 = rank(d2, sk.num_faces, ZZ.get_field())
    g2 = GF(2)
    r1_2 = rank(d1, n1, g2)
    r2_2 = rank(d2, sk.num_faces, g2)
    torsion = ()
    if n1 and sk.num_faces:
        m = DomainMatrix([[ZZ(v) for v in r] for r in d2], (n1, sk.num_faces), ZZ)
        torsion = tuple(int(d) for d in invariant_factors(m) if abs(int(d)) > 1)
    return HomologyProfile(n1 - r1 - r2, n1 - r1_2 - r2_2, tuple(abs(d) for d in torsion))
