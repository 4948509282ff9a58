"""cdlay: commutative-diagram layout in exact scaled-point arithmetic."""
from .arrows import (ArrowGeometry, LayoutError, OutsideError, DegenerateArrowError, SLOPES,
                     apply_options, compute_endpoints, east_west_arrow, getcos, layout_arrow,
                     quantize_slope, tile_shaft)
from .dsl import ArrowOptions, ArrowSpec, Diagram, DiagramConfig, ParseError, parse_diagram
from .fixedpoint import DimensionError, pt
from .grid import GridMetrics, measure_grid
from .metrics import MetricProvider, measure
from .render import Scene, assemble, emit_geometry, emit_svg, load_geometry

__version__ = "0.1.0"

__all__ = [
    "ArrowGeometry",
    "LayoutError",
    "OutsideError",
    "DegenerateArrowError",
    "SLOPES",
    "apply_options",
    "compute_endpoints",
    "east_west_arrow",
    "getcos",
    "layout_arrow",
    "quantize_slope",
    "tile_shaft",
    "ArrowOptions",
    "ArrowSpec",
    "Diagram",
    "DiagramConfig",
    "ParseError",
    "parse_diagram",
    "DimensionError",
    "pt",
    "GridMetrics",
    "measure_grid",
    "MetricProvider",
    "measure",
    "Scene",
    "assemble",
    "emit_geometry",
    "emit_svg",
    "load_geometry",
]
