# src/families/__init__.py

from src.families.base import FamilyBuilder, FamilyReport, FamilySpec, Gadget, LabeledGraph, validate_family
from src.families.cycle import cycle_graph
from src.families.extended_spiral import extended_spiral, insert_gadget
from src.families.fixtures import (
    alpha_fixture,
    beta_fixture,
    wheel_fixture,
    mobius_handle_tree,
    gamma_fixture,
    k4,
    k4_with_gadget,
    loop_triangle,
)
from src.families.grammar import format_labels, generate, parse_family
from src.families.ladders import mobius_ladder, neckband
from src.families.spiral import spiral_graph, spiral_cotree_labels, spiral_upper_tree

__all__ = [
    "FamilyBuilder",
    "FamilyReport",
    "FamilySpec",
    "Gadget",
    "LabeledGraph",
    "alpha_fixture",
    "beta_fixture",
    "cycle_graph",
    "extended_spiral",
    "wheel_fixture",
    "mobius_handle_tree",
    "format_labels",
    "gamma_fixture",
    "generate",
    "insert_gadget",
    "k4",
    "k4_with_gadget",
    "loop_triangle",
    "mobius_ladder",
    "neckband",
    "parse_family",
    "spiral_graph",
    "spiral_cotree_labels",
    "spiral_upper_tree",
    "validate_family",
]
