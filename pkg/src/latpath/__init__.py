"""Curve counts on toric surfaces computed from weighted lattice paths in a polygon."""

from __future__ import annotations

from .count import (
    CountReport,
    count_complex,
    count_real,
    count_welschinger,
    discriminant_degree,
    invariance_sweep,
    multicomponent_genus,
)
from .errors import LatpathError
from .geometry import (
    X_MINUS_EPS_Y,
    Y_MINUS_EPS_X,
    DirectionOrder,
    LatticePolygon,
    Point,
    boundary_chains,
    make_polygon,
    rectangle,
    standard_orders,
    standard_triangle,
)
from .multiplicity import ComplexMultiplicity
from .paths import enumerate_paths
from .real import RealMultiplicity, SignPair, parse_signs

__version__ = "0.1.0"

__all__ = [
    "ComplexMultiplicity",
    "CountReport",
    "DirectionOrder",
    "LatpathError",
    "LatticePolygon",
    "Point",
    "RealMultiplicity",
    "SignPair",
    "X_MINUS_EPS_Y",
    "Y_MINUS_EPS_X",
    "boundary_chains",
    "count_complex",
    "count_real",
    "count_welschinger",
    "discriminant_degree",
    "enumerate_paths",
    "invariance_sweep",
    "make_polygon",
    "multicomponent_genus",
    "parse_signs",
    "rectangle",
    "standard_orders",
    "standard_triangle",
]
