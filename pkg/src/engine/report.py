# src/engine/report.py

import json
from dataclasses import dataclass
from typing import Dict, List, Optional

from src.embedding.rotation import RotationSystem, format_rotation


@dataclass
class GenusReport:
    """Outcome of a maximum-genus computation."""
    max_genus: int
    euler_bound: int
    upper_embeddable: bool
    witness: Optional[RotationSystem]
    systems_enumerated: int
    early_exit: bool
    elapsed_ms: float

    vertices: int = 0
    edges: int = 0
    betti: int = 0
    witness_index: Optional[int] = None
    method: str = "brute"

    def to_dict(self, timing: bool = True) -> Dict:
        data = {
            "method": self.method,
            "vertices": self.vertices,
            "edges": self.edges,
            "betti": self.betti,
            "max_genus": self.max_genus,
            "euler_bound": self.euler_bound,
            "upper_embeddable": self.upper_embeddable,
            "systems_enumerated": self.systems_enumerated,
            "early_exit": self.early_exit,
            "witness_index": self.witness_index,
            "witness": format_rotation(self.witness) if self.witness else [],
        }
        if timing:
            data["elapsed_ms"] = round(self.elapsed_ms, 3)
        return data

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    def summary_lines(self) -> List[str]:
        return [
            f"method={self.method}",
            f"vertices={self.vertices} edges={self.edges} betti={self.betti}",
            f"max_genus={self.max_genus}",
            f"euler_bound={self.euler_bound}",
            f"upper_embeddable={str(self.upper_embeddable).lower()}",
            f"systems_enumerated={self.systems_enumerated}",
            f"early_exit={str(self.early_exit).lower()}",
            f"elapsed_ms={self.elapsed_ms:.1f}",
        ]
