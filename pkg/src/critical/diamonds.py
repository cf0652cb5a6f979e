# src/critical/diamonds.py

from typing import List, Optional, Set

from src.critical.base import CriticalDetector, CriticalFinding, stays_connected
from src.graph.multigraph import Multigraph


def _simple_neighbors(g: Multigraph, v: int) -> Optional[Set[int]]:
    """Neighbor set of a loopless vertex joined to each neighbor by one edge, else None."""
    if g.loops_at(v):
        return None
    neighbors = g.neighbors(v)
    if len(set(neighbors)) != len(neighbors):
        return None
    return set(neighbors)


class BetaDetector(CriticalDetector):
    """Degree-3 vertex carrying exactly two parallel edges to another degree-3 vertex."""

    def get_kind(self) -> str:
        return "beta"

    def detect(self, g: Multigraph) -> List[CriticalFinding]:
        findings = []
        for v in g.sorted_vertices():
            if g.degree(v) != 3 or g.loops_at(v):
                continue
            neighbors = g.neighbors(v)
            doubled = [u for u in set(neighbors) if neighbors.count(u) == 2]
            if len(doubled) != 1:
                continue
            u = doubled[0]
            if g.degree(u) != 3 or not stays_connected(g, v):
                continue
            (ray,) = [w for w in neighbors if w != u]
            findings.append(CriticalFinding(
                "beta", v, {"parallel": g.edges_between(v, u), "neighbor": u, "ray": ray}
            ))
        return findings


class GammaDetector(CriticalDetector):
    """
    Vertex v of a diamond: v and its partner u both have degree 3 and share
    the tips x and y, which have degree 3 themselves. All edges simple.
    """

    def get_kind(self) -> str:
        return "gamma"

    def _partner(self, g: Multigraph, v: int) -> Optional[dict]:
        around = _simple_neighbors(g, v)
        if around is None or len(around) != 3:
            return None
        for u in sorted(around):
            tips = around - {u}
            if g.degree(u) != 3 or _simple_neighbors(g, u) != tips | {v}:
                continue
            if all(g.degree(t) == 3 for t in tips):
                return {"partner": u, "tips": sorted(tips)}
        return None

    def detect(self, g: Multigraph) -> List[CriticalFinding]:
        findings = []
        for v in g.sorted_vertices():
            if g.degree(v) != 3:
                continue
            certificate = self._partner(g, v)
            if certificate is not None and stays_connected(g, v):
                findings.append(CriticalFinding("gamma", v, certificate))
        return findings


def detect_beta(g: Multigraph) -> List[CriticalFinding]:
    return BetaDetector().detect(g)


def detect_gamma(g: Multigraph) -> List[CriticalFinding]:
    return GammaDetector().detect(g)
