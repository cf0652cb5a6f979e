# src/families/ladders.py

from typing import List, Tuple

from src.families.base import FamilyBuilder, FamilySpec, LabeledGraph, vertex_names
from src.graph.multigraph import Multigraph


def _rim(order: int) -> List[Tuple[int, int]]:
    return [(i, i % order + 1) for i in range(1, order + 1)]


def mobius_chords(n: int) -> List[Tuple[int, int]]:
    """Rungs of M_2n: v_i joined to the opposite v_(i+n)."""
    return [(i, i + n) for i in range(1, n + 1)]


def neckband_chords(n: int) -> List[Tuple[int, int]]:
    """
    Chords a_i = (v_(2i-1), v_r) of N_2n with r = 2i + 2 reduced mod 2n.

    In N_8 this gives v1v4, v3v6, v5v8, v7v2.
    """
    order = 2 * n
    chords = []
    for i in range(1, n + 1):
        r = (2 * i + 2) % order
        chords.append((2 * i - 1, r if r else order))
    return chords


def mobius_ladder(n: int) -> Multigraph:
    return Multigraph.from_edges(_rim(2 * n) + mobius_chords(n), labels=vertex_names(range(1, 2 * n + 1)))


def neckband(n: int) -> Multigraph:
    return Multigraph.from_edges(_rim(2 * n) + neckband_chords(n), labels=vertex_names(range(1, 2 * n + 1)))


class MobiusBuilder(FamilyBuilder):
    """Möbius ladder M_2n: 2n-cycle plus opposite rungs."""

    def get_family_name(self) -> str:
        return "mobius"

    def build(self, spec: FamilySpec) -> LabeledGraph:
        self._require(spec, 1, (2,))
        return LabeledGraph(mobius_ladder(spec.params[0]), spec)


class NeckbandBuilder(FamilyBuilder):
    """Neckband N_2n: 2n-cycle plus skip chords."""

    def get_family_name(self) -> str:
        return "neckband"

    def build(self, spec: FamilySpec) -> LabeledGraph:
        self._require(spec, 1, (2,))
        return LabeledGraph(neckband(spec.params[0]), spec)
