# src/graph/cleanup.py

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Set, Tuple

from src.graph.multigraph import Multigraph

logger = logging.getLogger(__name__)


@dataclass
class CleanupLog:
    pruned: List[int] = field(default_factory=list)
    smoothed: List[int] = field(default_factory=list)
    minted: Dict[int, Tuple[int, int]] = field(default_factory=dict)

    @property
    def changed(self) -> bool:
        return bool(self.pruned or self.smoothed)


def _incident(vertices: Set[int], edges: Dict[int, Tuple[int, int]]) -> Dict[int, List[int]]:
    """Edge ids at each vertex, a loop listed twice."""
    incident: Dict[int, List[int]] = {v: [] for v in vertices}
    for e in sorted(edges):
        u, v = edges[e]
        incident[u].append(e)
        incident[v].append(e)
    return incident


def cleanup_with_log(g: Multigraph) -> Tuple[Multigraph, CleanupLog]:
    """
    Prune degree-1 vertices, then smooth degree-2 vertices, until neither applies.

    Pruning never removes the last vertex. A degree-2 vertex carrying a
    single loop is a fixpoint. Smoothing mints a fresh edge id and records
    the two absorbed ids as its provenance.
    """
    vertices = set(g.vertices)
    edges = dict(g.edges)
    provenance = dict(g.provenance)
    next_id = g.next_edge_id()
    log = CleanupLog()

    changed = True
    while changed:
        changed = False

        while len(vertices) > 1:
            incident = _incident(vertices, edges)
            leaves = sorted(v for v in vertices if len(incident[v]) == 1)
            if not leaves:
                break
            v = leaves[0]
            (e,) = incident[v]
            del edges[e]
            vertices.discard(v)
            log.pruned.append(v)
            changed = True

        while True:
            incident = _incident(vertices, edges)
            candidates = sorted(
                v for v in vertices
                if len(incident[v]) == 2 and incident[v][0] != incident[v][1]
            )
            if not candidates:
                break
            v = candidates[0]
            e1, e2 = incident[v]
            a = edges[e1][0] if edges[e1][1] == v else edges[e1][1]
            b = edges[e2][0] if edges[e2][1] == v else edges[e2][1]
            del edges[e1]
            del edges[e2]
            vertices.discard(v)
            edges[next_id] = (a, b)
            provenance[next_id] = (e1, e2)
            log.minted[next_id] = (e1, e2)
            log.smoothed.append(v)
            next_id += 1
            changed = True

    if log.changed:
        logger.debug("cleanup pruned %s smoothed %s", log.pruned, log.smoothed)
    labels = {v: name for v, name in g.vertex_labels.items() if v in vertices}
    kept = {e: p for e, p in provenance.items() if e in edges}
    return Multigraph(frozenset(vertices), edges, labels, kept), log


def cleanup(g: Multigraph) -> Multigraph:
    return cleanup_with_log(g)[0]
