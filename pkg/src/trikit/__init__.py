"""Combinatorial 3-manifold triangulations: moves, signatures, search, normal surfaces, bounds."""

from trikit.isosig import is_isomorphic, signature
from trikit.triangulation import Triangulation, parse, serialize, validate

__version__ = "0.1.0"

__all__ = ["Triangulation", "parse", "serialize", "validate", "signature", "is_isomorphic"]
