"""Boundary patterns made of boundary edges, and the count of surface points on them."""

from dataclasses import dataclass

from trikit.normal import edge_weight


@dataclass(frozen=True)
class BoundaryPattern:
    edges: frozenset = frozenset()  # edge classes

    @classmethod
    def from_slots(cls, tri, slots):
        """Build from ``(tetrahedron, edge index)`` slots as used in the file format."""
        sk = tri.skeleton
        classes = set()
        for i, e in slots:
            if not (0 <= i < tri.size and 0 <= e < 6):
                raise ValueError(f"pattern slot {i}.{e} is out of range")
            classes.add(sk.edge_of[i][e])
        return cls(frozenset(classes))

    def slots(self, tri):
        """One representative slot per edge class, in class order."""
        sk = tri.skeleton
        return [sk.edges[c][0] for c in sorted(self.edges)]

    def __len__(self):
        return len(self.edges)


def pattern_degrees(tri, pattern):
    """Number of pattern edge ends at each vertex class touched by the pattern."""
    sk = tri.skeleton
    deg = {}
    for c in sorted(pattern.edges):
        for v in sk.edge_ends(c):
            deg[v] = deg.get(v, 0) + 1
    return deg


def validate_pattern(tri, pattern):
    """Empty list iff every edge is on the boundary and every pattern vertex has degree 2 or 3."""
    sk = tri.skeleton
    report = []
    for c in sorted(pattern.edges):
        if not 0 <= c < sk.num_edges:
            report.append(f"edge {c}: no such edge class")
        elif not sk.edge_boundary[c]:
            report.append(f"edge {c}: not on the boundary")
    if report:
        return report
    for v, d in sorted(pattern_degrees(tri, pattern).items()):
        if d not in (2, 3):
            report.append(f"vertex {v}: pattern degree {d}, expected 2 or 3")
    return report


def iota(tri, pattern, v):
    """Points where the normal surface ``v`` meets the pattern."""
    sk = tri.skeleton
    if len(v) != 7 * tri.size:
        raise ValueError(f"vector has length {len(v)}, expected {7 * tri.size}")
    return sum(edge_weight(v, *sk.edges[c][0]) for c in pattern.edges)


def is_pure(tri, pattern, v):
    return iota(tri, pattern, v) == 0
