"""Exact counting of rainbow solutions to x + y = z + t under colorings of [n] and Z_n."""

__version__ = "0.1.0"

from .core import (
    ClassBreakdown,
    Coloring,
    Domain,
    ModularSidonQuad,
    SidonQuad,
    make_quad,
    mod_coloring,
    parse_coloring,
    random_coloring,
    serialize_coloring,
)

__all__ = [
    "ClassBreakdown",
    "Coloring",
    "Domain",
    "ModularSidonQuad",
    "SidonQuad",
    "make_quad",
    "mod_coloring",
    "parse_coloring",
    "random_coloring",
    "serialize_coloring",
    "__version__",
]
