# src/graph/multigraph.py

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from src.errors import DisconnectedGraphError, GraphError, InvalidPartitionError, VertexNotFoundError


class EdgeEnd(NamedTuple):
    """One end of an edge: side 0 sits at the first endpoint, side 1 at the second."""
    edge: int
    side: int

    def partner(self) -> "EdgeEnd":
        return EdgeEnd(self.edge, 1 - self.side)

    def __str__(self) -> str:
        return f"{self.edge}.{self.side}"


@dataclass(frozen=True)
class Multigraph:
    """
    Immutable undirected multigraph with loops.

    Edges are keyed by stable integer ids; surgery returns new graphs and
    mints fresh ids above the current maximum. Vertex labels and edge
    provenance (the ids an edge was smoothed from) ride along.
    """
    vertices: FrozenSet[int]
    edges: Mapping[int, Tuple[int, int]]
    vertex_labels: Mapping[int, str] = field(default_factory=dict)
    provenance: Mapping[int, Tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", dict(self.edges))
        object.__setattr__(self, "vertex_labels", dict(self.vertex_labels))
        object.__setattr__(self, "provenance", dict(self.provenance))
        for e, (u, v) in self.edges.items():
            if u not in self.vertices or v not in self.vertices:
                raise GraphError(f"edge {e} ({u}, {v}) has an endpoint outside the vertex set")

    @classmethod
    def from_edges(
        cls,
        pairs: Iterable[Tuple[int, int]],
        vertices: Optional[Iterable[int]] = None,
        labels: Optional[Mapping[int, str]] = None,
    ) -> "Multigraph":
        """Edge ids follow the order of `pairs`, starting at 0."""
        edges = {i: (int(u), int(v)) for i, (u, v) in enumerate(pairs)}
        vertex_set = set(vertices or ())
        for u, v in edges.values():
            vertex_set.update((u, v))
        return cls(frozenset(vertex_set), edges, labels or {})

    # -- queries --------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_vertices(self) -> List[int]:
        return sorted(self.vertices)

    def sorted_edges(self) -> List[int]:
        return sorted(self.edges)

    def endpoints(self, e: int) -> Tuple[int, int]:
        try:
            return self.edges[e]
        except KeyError:
            raise GraphError(f"unknown edge {e}") from None

    def end_vertex(self, end: EdgeEnd) -> int:
        return self.endpoints(end.edge)[end.side]

    @cached_property
    def _incidence(self) -> Dict[int, Tuple[EdgeEnd, ...]]:
        ends: Dict[int, List[EdgeEnd]] = {v: [] for v in self.vertices}
        for e in sorted(self.edges):
            u, v = self.edges[e]
            ends[u].append(EdgeEnd(e, 0))
            ends[v].append(EdgeEnd(e, 1))
        return {v: tuple(sorted(xs)) for v, xs in ends.items()}

    def _require(self, v: int):
        if v not in self.vertices:
            raise VertexNotFoundError(f"vertex {v} not in graph")

    def ends_at(self, v: int) -> Tuple[EdgeEnd, ...]:
        """Edge-ends at v in (edge id, side) order; a loop contributes both of its ends."""
        self._require(v)
        return self._incidence[v]

    def degree(self, v: int) -> int:
        return len(self.ends_at(v))

    def degrees(self) -> Dict[int, int]:
        return {v: len(ends) for v, ends in self._incidence.items()}

    def neighbors(self, v: int) -> List[int]:
        """Neighbors with multiplicity; a loop contributes v once."""
        result = []
        for end in self.ends_at(v):
            u, w = self.edges[end.edge]
            if u == w:
                if end.side == 0:
                    result.append(v)
            else:
                result.append(w if end.side == 0 else u)
        return result

    def loops_at(self, v: int) -> List[int]:
        return sorted({end.edge for end in self.ends_at(v) if self.edges[end.edge][0] == self.edges[end.edge][1]})

    def edges_between(self, u: int, v: int) -> List[int]:
        return sorted(e for e, (a, b) in self.edges.items() if {a, b} == {u, v} and a != b)

    def is_loop(self, e: int) -> bool:
        u, v = self.endpoints(e)
        return u == v

    def next_edge_id(self) -> int:
        return max(self.edges, default=-1) + 1

    def next_vertex_id(self) -> int:
        return max(self.vertices, default=-1) + 1

    def label(self, v: int) -> str:
        return self.vertex_labels.get(v, f"v{v}")

    def edge_multiset(self) -> Counter:
        """Endpoint pairs as an unordered multiset (ids ignored)."""
        return Counter(tuple(sorted(pair)) for pair in self.edges.values())

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for e, (u, v) in self.edges.items():
            g.add_edge(u, v, key=e)
        return g

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        return nx.is_connected(self.to_networkx())

    def betti(self) -> int:
        """Cycle rank |E| - |V| + 1 of a connected graph."""
        if not self.is_connected():
            raise DisconnectedGraphError("cycle rank is defined for connected graphs only")
        return self.edge_count - self.vertex_count + 1

    # -- surgery ----------------------------------------------------------

    def _derive(self, vertices, edges, provenance=None) -> "Multigraph":
        labels = {v: name for v, name in self.vertex_labels.items() if v in vertices}
        kept = provenance if provenance is not None else self.provenance
        return Multigraph(frozenset(vertices), edges, labels, {e: p for e, p in kept.items() if e in edges})

    def delete_vertex(self, v: int) -> "Multigraph":
        """Remove v and every edge incident to it. The result may be disconnected."""
        self._require(v)
        edges = {e: pair for e, pair in self.edges.items() if v not in pair}
        return self._derive(self.vertices - {v}, edges)

    def split_vertex(
        self, v: int, block_a: Sequence[EdgeEnd], block_b: Sequence[EdgeEnd]
    ) -> Tuple["Multigraph", int, int, int]:
        """
        Replace v by two new vertices joined by a new edge.

        Ends in block_a move to the first new vertex, ends in block_b to the
        second. Returns (graph, first, second, joining edge).
        """
        ends = set(self.ends_at(v))
        if len(ends) < 4:
            raise InvalidPartitionError(f"vertex {v} has degree {len(ends)}, need at least 4")
        a, b = set(block_a), set(block_b)
        if not a or not b:
            raise InvalidPartitionError("both blocks of a split must be non-empty")
        if a & b or a | b != ends:
            raise InvalidPartitionError(f"blocks do not partition the edge-ends at {v}")

        first = self.next_vertex_id()
        second = first + 1
        edges = dict(self.edges)
        for end in a | b:
            pair = list(edges[end.edge])
            pair[end.side] = first if end in a else second
            edges[end.edge] = (pair[0], pair[1])
        joining = self.next_edge_id()
        edges[joining] = (first, second)
        vertices = (self.vertices - {v}) | {first, second}
        return self._derive(vertices, edges), first, second, joining

    def contract_edge(self, e: int) -> Tuple["Multigraph", int]:
        """Merge the endpoints of a non-loop edge into its first endpoint."""
        u, v = self.endpoints(e)
        if u == v:
            raise GraphError(f"cannot contract loop {e}")
        edges = {}
        for f, (a, b) in self.edges.items():
            if f == e:
                continue
            edges[f] = (u if a == v else a, u if b == v else b)
        return self._derive(self.vertices - {v}, edges), u


def legal_partitions(g: Multigraph, v: int) -> List[Tuple[Tuple[EdgeEnd, ...], Tuple[EdgeEnd, ...]]]:
    """Unordered splits of the ends at v into two blocks of at least two ends each."""

    ends = list(g.ends_at(v))
    anchor, rest = ends[0], ends[1:]
    result = []
    for size in range(1, len(rest) + 1):
        for chosen in combinations(rest, size):
            block_a = (anchor,) + chosen
            block_b = tuple(end for end in rest if end not in chosen)
            if len(block_a) >= 2 and len(block_b) >= 2:
                result.append((block_a, block_b))
    return result
