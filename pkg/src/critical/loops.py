# src/critical/loops.py

from typing import List

from src.critical.base import CriticalDetector, CriticalFinding
from src.graph.multigraph import Multigraph


class AlphaDetector(CriticalDetector):
    """
    Loop vertex hanging from the rest of the graph by a single edge.

    Deleting it lowers the cycle rank by one and leaves the maximum genus
    unchanged, so reductions remove it without counting.
    """

    def get_kind(self) -> str:
        return "alpha"

    def detect(self, g: Multigraph) -> List[CriticalFinding]:
        findings = []
        for v in g.sorted_vertices():
            loops = g.loops_at(v)
            ends = g.ends_at(v)
            others = [end.edge for end in ends if not g.is_loop(end.edge)]
            if len(loops) != 1 or len(others) != 1:
                continue
            (edge,) = others
            u, w = g.endpoints(edge)
            findings.append(CriticalFinding(
                "alpha", v, {"loop": loops[0], "edge": edge, "neighbor": w if u == v else u}
            ))
        return findings


def detect_alpha(g: Multigraph) -> List[CriticalFinding]:
    return AlphaDetector().detect(g)
