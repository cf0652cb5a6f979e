# src/embedding/__init__.py

from src.embedding.faces import DartTable, embedding_faces, face_trace_genus
from src.embedding.joint_tree import associated_surface, boundary_walk, cotree_symbols
from src.embedding.rotation import (
    RotationPlan,
    RotationSystem,
    enumerate_rotations,
    format_rotation,
    parse_rotation,
    rotation_count,
)

__all__ = [
    "DartTable",
    "RotationPlan",
    "RotationSystem",
    "associated_surface",
    "boundary_walk",
    "cotree_symbols",
    "embedding_faces",
    "enumerate_rotations",
    "face_trace_genus",
    "format_rotation",
    "parse_rotation",
    "rotation_count",
]
