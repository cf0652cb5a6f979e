# src/tracking/budget.py

from dataclasses import dataclass
from typing import List, Optional

from src import config
from src.embedding.rotation import rotation_count
from src.errors import BudgetExceededError
from src.graph.multigraph import Multigraph


@dataclass
class EnumerationUsage:
    label: str
    systems: int
    rotation_systems: int
    early_exit: bool
    run_id: Optional[int] = None


class EnumerationBudget:
    """Guard and account for rotation systems enumerated across a run."""

    def __init__(self, limit: Optional[int] = None):
        self.limit = config.ENUMERATION_BUDGET if limit is None else limit
        self._current_run_id: Optional[int] = None
        self._usage: List[EnumerationUsage] = []

    def set_run_id(self, run_id: int):
        """Set current run for attribution."""
        self._current_run_id = run_id

    def calculate_cost(self, g: Multigraph) -> int:
        """Rotation systems a full enumeration of g would visit."""
        return rotation_count(g)

    def check(self, cost: int, force: bool = False):
        if cost > self.limit and not force:
            raise BudgetExceededError(cost, self.limit)

    def track(self, label: str, g: Multigraph, report) -> EnumerationUsage:
        """
        Record one engine run.

        Call after each max_genus_exhaustive.
        """
        usage = EnumerationUsage(
            label=label,
            systems=report.systems_enumerated,
            rotation_systems=self.calculate_cost(g),
            early_exit=report.early_exit,
            run_id=self._current_run_id,
        )
        self._usage.append(usage)
        return usage

    @property
    def total_systems(self) -> int:
        return sum(u.systems for u in self._usage)
