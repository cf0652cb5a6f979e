# src/critical/ladders.py

import logging
from abc import abstractmethod
from collections import Counter
from typing import Callable, Iterator, List, Optional, Tuple

from src.config import LADDER_RECOGNITION_MAX_ORDER
from src.critical.base import CriticalDetector, CriticalFinding
from src.families.ladders import mobius_chords, neckband_chords
from src.graph.multigraph import Multigraph

logger = logging.getLogger(__name__)


def _hamiltonian_cycles(g: Multigraph) -> Iterator[Tuple[List[int], List[int]]]:
    """(vertex sequence, edge ids) of every Hamiltonian cycle through the lowest vertex."""
    start = min(g.vertices)
    order = g.vertex_count
    path, used = [start], []
    visited = {start}

    def extend() -> Iterator[Tuple[List[int], List[int]]]:
        here = path[-1]
        for end in g.ends_at(here):
            e = end.edge
            if e in used or g.is_loop(e):
                continue
            there = g.endpoints(e)[1 - end.side]
            if len(path) == order:
                if there == start:
                    yield list(path), used + [e]
                continue
            if there in visited:
                continue
            path.append(there)
            used.append(e)
            visited.add(there)
            yield from extend()
            visited.discard(there)
            used.pop()
            path.pop()

    yield from extend()


def _recognize(g: Multigraph, chords_for: Callable[[int], List[Tuple[int, int]]]) -> Optional[List[int]]:
    """
    Labeling v1..v2n (as vertex ids) under which g is the 2n-cycle plus
    the given chords, or None.
    """
    order = g.vertex_count
    if order < 4 or order % 2 or order > LADDER_RECOGNITION_MAX_ORDER:
        return None
    n = order // 2
    if g.edge_count != 3 * n or any(d != 3 for d in g.degrees().values()):
        return None
    if any(g.is_loop(e) for e in g.edges) or not g.is_connected():
        return None

    wanted = Counter(tuple(sorted(pair)) for pair in chords_for(n))
    for cycle, rim in _hamiltonian_cycles(g):
        position = {v: k for k, v in enumerate(cycle)}
        on_rim = set(rim)
        rest = [g.endpoints(e) for e in g.sorted_edges() if e not in on_rim]
        for shift in range(order):
            found = Counter(
                tuple(sorted(((position[a] - shift) % order + 1, (position[b] - shift) % order + 1)))
                for a, b in rest
            )
            if found == wanted:
                logger.debug("ladder labeling found for %d-vertex graph", order)
                return [cycle[(k + shift) % order] for k in range(order)]
    return None


def is_mobius_ladder(g: Multigraph) -> Optional[List[int]]:
    """Vertex ids realizing v1..v2n of a Möbius ladder, or None."""
    return _recognize(g, mobius_chords)


def is_neckband(g: Multigraph) -> Optional[List[int]]:
    """Vertex ids realizing v1..v2n of a neckband, or None."""
    return _recognize(g, neckband_chords)


class _WholeGraphDetector(CriticalDetector):
    kind = ""

    def get_kind(self) -> str:
        return self.kind

    @abstractmethod
    def _labeling(self, g: Multigraph) -> Optional[List[int]]:
        """Ladder labeling v1..v2n of the whole graph, or None."""
        pass

    def detect(self, g: Multigraph) -> List[CriticalFinding]:
        labeling = self._labeling(g)
        if labeling is None:
            return []
        # Both families are vertex-transitive; any vertex will do.
        return [CriticalFinding(self.kind, min(g.vertices), {"labeling": labeling})]

    def validate(self, g: Multigraph, finding: CriticalFinding) -> bool:
        return finding.kind == self.kind and self._labeling(g) is not None


class DeltaDetector(_WholeGraphDetector):
    """Every vertex of a Möbius ladder."""
    kind = "delta"

    def _labeling(self, g):
        return is_mobius_ladder(g)


class EtaDetector(_WholeGraphDetector):
    """Every vertex of a neckband."""
    kind = "eta"

    def _labeling(self, g):
        return is_neckband(g)


def detect_delta(g: Multigraph) -> List[CriticalFinding]:
    return DeltaDetector().detect(g)


def detect_eta(g: Multigraph) -> List[CriticalFinding]:
    return EtaDetector().detect(g)
