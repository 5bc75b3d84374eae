"""
SolvGraph - solvabilizers, solvable graphs and the solvability measure of
Lie superalgebras over GF(p)
"""

__version__ = "1.0.0"

from .config import Config
from .superalgebra import SuperAlgebra, Morphism, validate, from_brackets
from .solvabilizer import solvabilizer, solvabilizer_of, nilpotentizer
from .graph import SolvGraph, build_graph, measure
from .catalog import catalog_get
from . import utils

__all__ = [
    "Config",
    "SuperAlgebra",
    "Morphism",
    "validate",
    "from_brackets",
    "solvabilizer",
    "solvabilizer_of",
    "nilpotentizer",
    "SolvGraph",
    "build_graph",
    "measure",
    "catalog_get",
    "utils",
]
