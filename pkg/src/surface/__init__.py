# src/surface/__init__.py

from src.surface.oracle import genus_by_corner_orbits
from src.surface.reduction import StandardForm, format_trace, reduce_to_standard
from src.surface.transforms import (
    InterlacedPair,
    TransformStep,
    first_interlaced,
    transform1,
    transform2,
    transform3,
    transform4,
)
from src.surface.word import (
    Letter,
    SurfaceWord,
    matches_pattern,
    parse_letters,
    parse_word,
    sphere_word,
    standard_word,
)

__all__ = [
    "InterlacedPair",
    "Letter",
    "StandardForm",
    "SurfaceWord",
    "TransformStep",
    "first_interlaced",
    "format_trace",
    "genus_by_corner_orbits",
    "matches_pattern",
    "parse_letters",
    "parse_word",
    "reduce_to_standard",
    "sphere_word",
    "standard_word",
    "transform1",
    "transform2",
    "transform3",
    "transform4",
]
