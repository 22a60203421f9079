"""Comaximal graphs of finite rings.

Build finite rings, their maximal left ideals and Jacobson radical, the
comaximal graph and its subgraphs, and check the structure theorems about
those graphs over catalogs of small rings.
"""

from .dsl import build_ring, parse_spec
from .ring import FiniteRing, make_gf, make_matrix_ring, make_product, make_table_ring, make_zmod

__all__ = [
    "FiniteRing",
    "build_ring",
    "make_gf",
    "make_matrix_ring",
    "make_product",
    "make_table_ring",
    "make_zmod",
    "parse_spec",
]
