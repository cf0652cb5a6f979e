# src/families/base.py

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.errors import FamilySpecError
from src.graph.multigraph import Multigraph


@dataclass(frozen=True)
class FamilySpec:
    """A family member: kind plus integer parameters (and gadget host edges for extended spirals)."""
    kind: str                                  # "cycle", "mobius", "neckband", "spiral", "extspiral", "k4"
    params: Tuple[int, ...]
    gadget_edges: Tuple[Tuple[int, int], ...] = ()

    def __str__(self) -> str:
        text = f"{self.kind}:{','.join(str(p) for p in self.params)}" if self.params else self.kind
        if self.gadget_edges:
            text += ":" + ",".join(f"{x}-{y}" for x, y in self.gadget_edges)
        return text


@dataclass
class Gadget:
    """Diamond-and-chords block that replaced host edge (x, y)."""
    index: int
    host: Tuple[int, int]
    vertices: Dict[str, int]                   # role (A, B, C, v1, v2, D, E, F) -> vertex id


@dataclass
class LabeledGraph:
    """Generated graph plus the metadata later stages read back."""
    graph: Multigraph
    spec: FamilySpec
    ears: List[Tuple[int, ...]] = field(default_factory=list)
    gadgets: List[Gadget] = field(default_factory=list)

    def labels_dict(self) -> Dict:
        return {
            "vertex_labels": {str(v): name for v, name in sorted(self.graph.vertex_labels.items())},
            "ears": [list(ear) for ear in self.ears],
            "gadgets": [
                {"index": g.index, "host": list(g.host), "vertices": dict(g.vertices)}
                for g in self.gadgets
            ],
        }


class FamilyBuilder(ABC):
    """Base class for family generators."""

    @abstractmethod
    def build(self, spec: FamilySpec) -> LabeledGraph:
        """Build the family member described by spec."""
        pass

    @abstractmethod
    def get_family_name(self) -> str:
        """Family name as used in the mini-grammar."""
        pass

    def _require(self, spec: FamilySpec, arity: int, minimums: Tuple[int, ...]):
        if len(spec.params) != arity:
            raise FamilySpecError(f"{spec.kind} takes {arity} parameter(s), got {len(spec.params)}")
        for value, low in zip(spec.params, minimums):
            if value < low:
                raise FamilySpecError(f"{spec}: parameter {value} below minimum {low}")


def vertex_names(ids) -> Dict[int, str]:
    return {v: f"v{v}" for v in ids}


@dataclass
class FamilyReport:
    vertices: int
    edges: int
    betti: int
    min_degree: int
    max_degree: int
    regular: Optional[int]                     # common degree, None when irregular
    degree_two: List[int]

    def summary_lines(self) -> List[str]:
        return [
            f"vertices={self.vertices}",
            f"edges={self.edges}",
            f"betti={self.betti}",
            f"min_degree={self.min_degree}",
            f"max_degree={self.max_degree}",
            f"regular={self.regular if self.regular is not None else 'no'}",
            f"degree_two={','.join(f'v{v}' for v in self.degree_two) or '-'}",
        ]


def validate_family(lg: LabeledGraph) -> FamilyReport:
    """Structural facts about a generated graph."""
    g = lg.graph
    degrees = g.degrees()
    low, high = min(degrees.values()), max(degrees.values())
    return FamilyReport(
        vertices=g.vertex_count,
        edges=g.edge_count,
        betti=g.betti(),
        min_degree=low,
        max_degree=high,
        regular=low if low == high else None,
        degree_two=sorted(v for v, d in degrees.items() if d == 2),
    )
