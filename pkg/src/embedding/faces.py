# src/embedding/faces.py
"""
Face tracing on darts.

Edge with index i (edges sorted by id) owns darts 2i (side 0) and 2i+1
(side 1); the reverse of a dart is d ^ 1. A rotation system becomes the
permutation sigma on darts, and faces are the cycles of sigma o reverse.
"""

from typing import List, Sequence

import numpy as np

from src.errors import DisconnectedGraphError
from src.embedding.rotation import RotationSystem
from src.graph.multigraph import EdgeEnd, Multigraph
from src.surface.oracle import genus_from_characteristic


class DartTable:
    def __init__(self, g: Multigraph):
        self.graph = g
        self.edge_ids: List[int] = g.sorted_edges()
        self.edge_index = {e: i for i, e in enumerate(self.edge_ids)}
        self.n_darts = 2 * len(self.edge_ids)
        self.reverse = np.arange(self.n_darts, dtype=np.int64) ^ 1

    def dart(self, end: EdgeEnd) -> int:
        return 2 * self.edge_index[end.edge] + end.side

    def end(self, dart: int) -> EdgeEnd:
        return EdgeEnd(self.edge_ids[dart // 2], dart % 2)

    def cycle_arrays(self, cycle: Sequence[EdgeEnd]):
        """(darts, successors) pair that writes one vertex rotation into sigma."""
        darts = np.array([self.dart(end) for end in cycle], dtype=np.int64)
        return darts, np.roll(darts, -1)

    def sigma(self, system: RotationSystem) -> np.ndarray:
        sigma = np.empty(self.n_darts, dtype=np.int64)
        for _, cycle in system.rotations:
            if cycle:
                darts, successors = self.cycle_arrays(cycle)
                sigma[darts] = successors
        return sigma

    def face_permutation(self, sigma: np.ndarray) -> np.ndarray:
        return sigma[self.reverse]

    def count_faces(self, sigma: np.ndarray) -> int:
        if self.n_darts == 0:
            return 1
        phi = self.face_permutation(sigma).tolist()
        seen = bytearray(self.n_darts)
        faces = 0
        for start in range(self.n_darts):
            if seen[start]:
                continue
            faces += 1
            d = start
            while not seen[d]:
                seen[d] = 1
                d = phi[d]
        return faces

    def faces(self, sigma: np.ndarray) -> List[List[EdgeEnd]]:
        phi = self.face_permutation(sigma).tolist()
        seen = [False] * self.n_darts
        result = []
        for start in range(self.n_darts):
            if seen[start]:
                continue
            walk = []
            d = start
            while not seen[d]:
                seen[d] = True
                walk.append(self.end(d))
                d = phi[d]
            result.append(walk)
        return result

    def genus_from_faces(self, faces: int) -> int:
        g = self.graph
        return genus_from_characteristic(g.vertex_count - g.edge_count + faces)


def face_trace_genus(g: Multigraph, system: RotationSystem) -> int:
    """Genus of the embedding: (2 - V + E - F) / 2."""
    if not g.is_connected():
        raise DisconnectedGraphError("face tracing requires a connected graph")
    system.validate(g)
    table = DartTable(g)
    return table.genus_from_faces(table.count_faces(table.sigma(system)))


def embedding_faces(g: Multigraph, system: RotationSystem) -> List[List[EdgeEnd]]:
    """Boundary walks of the embedding, each as the edge-ends it leaves from."""
    system.validate(g)
    table = DartTable(g)
    if table.n_darts == 0:
        return [[]]
    return table.faces(table.sigma(system))
