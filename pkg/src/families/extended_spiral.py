# src/families/extended_spiral.py

import logging
from typing import Dict, Tuple

from src.errors import FamilySpecError
from src.families.base import FamilyBuilder, FamilySpec, Gadget, LabeledGraph
from src.families.spiral import spiral_ears, spiral_graph
from src.graph.multigraph import Multigraph

logger = logging.getLogger(__name__)

GADGET_ROLES = ("A", "B", "C", "v1", "v2", "D", "E", "F")
GADGET_SIZE = len(GADGET_ROLES)

# Edges inside the gadget; "x" and "y" stand for the host edge's endpoints.
GADGET_EDGES = (
    ("x", "A"), ("A", "B"), ("B", "C"),
    ("C", "v1"), ("C", "v2"), ("v1", "v2"), ("v1", "D"), ("v2", "D"),
    ("D", "E"), ("E", "F"), ("F", "y"),
    ("A", "E"), ("B", "F"),
)


def insert_gadget(g: Multigraph, host_edge: int, index: int, first_vertex: int) -> Tuple[Multigraph, Gadget]:
    """
    Replace host_edge (x, y) by the diamond-and-chords gadget.

    The eight gadget vertices take ids first_vertex.. in role order and are
    labelled "g<index>.<role>". Eight vertices and twelve net edges, so the
    cycle rank grows by 4.
    """
    x, y = g.endpoints(host_edge)
    if x == y:
        raise FamilySpecError(f"cannot place a gadget on loop {host_edge}")
    ids: Dict[str, int] = {role: first_vertex + k for k, role in enumerate(GADGET_ROLES)}
    clash = [v for v in ids.values() if v in g.vertices]
    if clash:
        raise FamilySpecError(f"gadget vertex ids {clash} already used")

    ends = dict(ids, x=x, y=y)
    edges = {e: pair for e, pair in g.edges.items() if e != host_edge}
    next_id = g.next_edge_id()
    for a, b in GADGET_EDGES:
        edges[next_id] = (ends[a], ends[b])
        next_id += 1
    labels = dict(g.vertex_labels)
    labels.update({v: f"g{index}.{role}" for role, v in ids.items()})
    graph = Multigraph(g.vertices | frozenset(ids.values()), edges, labels, g.provenance)
    return graph, Gadget(index=index, host=(x, y), vertices=ids)


def extended_spiral(m: int, n: int, gadget_edges) -> LabeledGraph:
    """S_m^n with each listed host edge (vertex index pair) replaced by a gadget."""
    spec = FamilySpec("extspiral", (m, n), tuple(tuple(pair) for pair in gadget_edges))
    return ExtendedSpiralBuilder().build(spec)


class ExtendedSpiralBuilder(FamilyBuilder):
    """Spiral with some edges replaced by diamond-and-chords gadgets."""

    def get_family_name(self) -> str:
        return "extspiral"

    def build(self, spec: FamilySpec) -> LabeledGraph:
        self._require(spec, 2, (3, 1))
        m, n = spec.params
        graph = spiral_graph(m, n)
        host_ids = []
        for x, y in spec.gadget_edges:
            found = [e for e in graph.edges_between(x, y) if e not in host_ids]
            if not found:
                raise FamilySpecError(f"v{x}-v{y} is not an edge of S_{m}^{n}")
            host_ids.append(found[0])

        gadgets = []
        first_vertex = m + 2 * n + 1
        for index, host in enumerate(host_ids):
            graph, gadget = insert_gadget(graph, host, index, first_vertex)
            gadgets.append(gadget)
            first_vertex += GADGET_SIZE

        logger.debug("extended spiral %s: %d gadgets", spec, len(gadgets))
        return LabeledGraph(graph, spec, ears=spiral_ears(m, n), gadgets=gadgets)
