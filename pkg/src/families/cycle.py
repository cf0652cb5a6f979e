# src/families/cycle.py

from src.families.base import FamilyBuilder, FamilySpec, LabeledGraph, vertex_names
from src.graph.multigraph import Multigraph


def cycle_graph(m: int) -> Multigraph:
    """C_m on v1..vm, edge i joining v(i+1) and v(i+2) (wrapping)."""
    pairs = [(i, i % m + 1) for i in range(1, m + 1)]
    return Multigraph.from_edges(pairs, labels=vertex_names(range(1, m + 1)))


class CycleBuilder(FamilyBuilder):
    """Plain m-cycle; the zero-ear spiral."""

    def get_family_name(self) -> str:
        return "cycle"

    def build(self, spec: FamilySpec) -> LabeledGraph:
        self._require(spec, 1, (3,))
        (m,) = spec.params
        return LabeledGraph(cycle_graph(m), spec, ears=[tuple(range(1, m + 1))])
