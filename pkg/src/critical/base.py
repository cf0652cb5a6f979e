# src/critical/base.py

import json
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.graph.multigraph import Multigraph

KINDS = ("alpha", "beta", "gamma", "delta", "eta")


@dataclass
class CriticalFinding:
    """A vertex matching one of the five patterns, with the evidence."""
    kind: str                # "alpha", "beta", "gamma", "delta", "eta"
    vertex: int
    certificate: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {"kind": self.kind, "vertex": self.vertex, "certificate": self.certificate}


@dataclass
class TraceStep:
    finding: CriticalFinding
    vertices_after: int
    edges_after: int
    counted: bool = True
    note: str = ""

    def to_dict(self) -> Dict:
        data = {
            "kind": self.finding.kind,
            "vertex": self.finding.vertex,
            "graph_after": {"v": self.vertices_after, "e": self.edges_after},
            "counted": self.counted,
        }
        if self.note:
            data["note"] = self.note
        return data


@dataclass
class ReductionTrace:
    """Deletions performed by a reduction algorithm and the resulting total."""
    algorithm: str
    steps: List[TraceStep]
    base_graph: Multigraph
    base_genus: int
    total: int
    counters: Dict[str, int] = field(default_factory=dict)   # i, j for the spiral algorithm
    base_report: Optional[Any] = None

    @property
    def deletions(self) -> int:
        return sum(1 for s in self.steps if s.counted)

    def to_dict(self) -> Dict:
        data = {
            "method": self.algorithm,
            "steps": [s.to_dict() for s in self.steps],
            "base_graph": {"v": self.base_graph.vertex_count, "e": self.base_graph.edge_count},
            "base_genus": self.base_genus,
            "total": self.total,
        }
        data.update(self.counters)
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary_lines(self) -> List[str]:
        lines = [f"method={self.algorithm}"]
        for n, step in enumerate(self.steps, start=1):
            flag = "" if step.counted else " (uncounted)"
            lines.append(
                f"STEP {n} {step.finding.kind} v{step.finding.vertex}"
                f" -> v={step.vertices_after} e={step.edges_after}{flag}"
            )
        lines += [f"{key}={value}" for key, value in sorted(self.counters.items())]
        lines += [f"base_genus={self.base_genus}", f"total={self.total}"]
        return lines


class CriticalDetector(ABC):
    """Base class for pattern detectors."""

    @abstractmethod
    def detect(self, g: Multigraph) -> List[CriticalFinding]:
        """All matching vertices, sorted by id."""
        pass

    @abstractmethod
    def get_kind(self) -> str:
        """Pattern name."""
        pass

    def validate(self, g: Multigraph, finding: CriticalFinding) -> bool:
        """Re-check a finding against g."""
        return any(
            f.vertex == finding.vertex and f.certificate == finding.certificate
            for f in self.detect(g)
        )


def stays_connected(g: Multigraph, v: int) -> bool:
    return g.delete_vertex(v).is_connected()
