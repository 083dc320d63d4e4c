"""Exact second-largest-eigenvalue analysis of graphs with a cut-vertex."""

from .algebraic import BoundConstant, Order, RootEnclosure, named, parse_bound, sign_at
from .classify import (
    Classification,
    NotApplicable,
    best_bounds,
    classify,
    classify_at,
    component_profile,
    corollary1_bounds,
    grs_decide,
    rs_classify,
)
from .graph import Graph, from_edges
from .graph6 import graph6_decode, graph6_encode
from .intpoly import IntPoly
from .spectral import charpoly, compare_eigenvalue, spectral_position

__version__ = "0.1.0"

__all__ = [
    "best_bounds",
    "BoundConstant",
    "charpoly",
    "Classification",
    "classify",
    "classify_at",
    "compare_eigenvalue",
    "component_profile",
    "corollary1_bounds",
    "from_edges",
    "Graph",
    "graph6_decode",
    "graph6_encode",
    "grs_decide",
    "IntPoly",
    "named",
    "NotApplicable",
    "Order",
    "parse_bound",
    "RootEnclosure",
    "rs_classify",
    "sign_at",
    "spectral_position",
]
