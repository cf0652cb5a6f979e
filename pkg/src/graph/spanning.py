# src/graph/spanning.py

from collections import Counter
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple, Union

import networkx as nx

from src.errors import DisconnectedGraphError, InvalidSpanningTreeError
from src.graph.multigraph import Multigraph


@dataclass(frozen=True)
class SpanningTree:
    tree_edges: FrozenSet[int]
    cotree: Tuple[int, ...]     # ordered by edge id

    def is_tree_edge(self, e: int) -> bool:
        return e in self.tree_edges


def spanning_tree(
    g: Multigraph, strategy: Union[str, Iterable[int], None] = "default"
) -> SpanningTree:
    """
    Spanning tree and ordered cotree of a connected multigraph.

    "default" runs Kruskal with edge ids as weights, so the lowest-id tree
    wins; an iterable of edge ids is validated and used as given.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("spanning tree requires a connected graph")

    if strategy is None or isinstance(strategy, str):
        if strategy not in (None, "default"):
            raise InvalidSpanningTreeError(f"unknown spanning tree strategy {strategy!r}")
        weighted = nx.MultiGraph()
        weighted.add_nodes_from(g.vertices)
        for e, (u, v) in g.edges.items():
            weighted.add_edge(u, v, key=e, weight=e)
        chosen = frozenset(
            key for _, _, key in nx.minimum_spanning_edges(
                weighted, algorithm="kruskal", weight="weight", keys=True, data=False
            )
        )
    else:
        chosen = frozenset(int(e) for e in strategy)
        _validate_tree(g, chosen)

    cotree = tuple(e for e in sorted(g.edges) if e not in chosen)
    return SpanningTree(chosen, cotree)


def _validate_tree(g: Multigraph, chosen: FrozenSet[int]):
    unknown = sorted(e for e in chosen if e not in g.edges)
    if unknown:
        raise InvalidSpanningTreeError(f"edges not in graph: {unknown}")
    if any(g.is_loop(e) for e in chosen):
        raise InvalidSpanningTreeError("a spanning tree cannot contain a loop")
    if len(chosen) != g.vertex_count - 1:
        raise InvalidSpanningTreeError(
            f"tree has {len(chosen)} edges, expected {g.vertex_count - 1}"
        )
    tree = nx.MultiGraph()
    tree.add_nodes_from(g.vertices)
    for e in chosen:
        tree.add_edge(*g.endpoints(e), key=e)
    if not nx.is_tree(tree):
        raise InvalidSpanningTreeError("edge set is not a spanning tree")


def is_cactus(g: Multigraph) -> bool:
    """
    True when every pair of distinct cycles is vertex-disjoint.

    Loops and parallel pairs count as cycles. Each edge is subdivided so the
    simple-graph block decomposition sees them.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("cactus test requires a connected graph")
    subdivided = nx.Graph()
    subdivided.add_nodes_from(("v", v) for v in g.vertices)
    for e, (u, v) in g.edges.items():
        if u == v:
            subdivided.add_edge(("v", u), ("e", e, 0))
            subdivided.add_edge(("e", e, 0), ("e", e, 1))
            subdivided.add_edge(("e", e, 1), ("v", u))
        else:
            subdivided.add_edge(("v", u), ("e", e))
            subdivided.add_edge(("e", e), ("v", v))

    on_cycles: Counter = Counter()
    for block in nx.biconnected_components(subdivided):
        if len(block) <= 2:
            continue
        if subdivided.subgraph(block).number_of_edges() != len(block):
            return False
        for node in block:
            if node[0] == "v":
                on_cycles[node] += 1
    return all(count <= 1 for count in on_cycles.values())
