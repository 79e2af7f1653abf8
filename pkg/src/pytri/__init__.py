"""Exact arithmetic for Pythagorean triples, their circle configurations and
the integral Apollonian packings they seed."""

from .descartes import reduce_to_root, reflect, verify_dce
from .errors import InvariantViolation, PytriError
from .packing import generate, packing_from_quadruple, packing_from_triple, render_svg
from .pythagoras import PSequence, PythTriple, dickson_enumerate, p_sequence
from .tree import children, enumerate_triples, parent, path_of
from .triangle import RadiusQuadruple, Triangle, radii_from_sides, sides_from_radii

__all__ = [
    "InvariantViolation",
    "PSequence",
    "PythTriple",
    "PytriError",
    "RadiusQuadruple",
    "Triangle",
    "children",
    "dickson_enumerate",
    "enumerate_triples",
    "generate",
    "p_sequence",
    "packing_from_quadruple",
    "packing_from_triple",
    "parent",
    "path_of",
    "radii_from_sides",
    "reduce_to_root",
    "reflect",
    "render_svg",
    "sides_from_radii",
    "verify_dce",
]
