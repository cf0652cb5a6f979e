# src/engine/probe.py
"""
Local search for an embedding that meets the Euler bound.

Only a success is meaningful: a rotation system reaching the bound
proves the maximum, while a failure says nothing and the caller falls
back to full enumeration.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from src import config
from src.config import PROBE_MAX_PASSES, PROBE_RESTARTS, PROBE_SEED
from src.embedding.faces import DartTable
from src.embedding.rotation import RotationPlan

logger = logging.getLogger(__name__)


@dataclass
class ProbeResult:
    digits: Optional[List[int]]
    faces: int
    evaluations: int

    @property
    def found(self) -> bool:
        return self.digits is not None


class FragmentTable:
    """
    Per-vertex, per-choice dart assignments so sigma can be patched in place.

    Fragments are built on first use and kept only for vertices with at
    most PROBE_MAX_CHOICES rotations; larger vertices are unranked every time.
    """

    def __init__(self, plan: RotationPlan, table: DartTable):
        self.plan = plan
        self.table = table
        self._cache: List[Optional[Dict[int, Tuple[np.ndarray, np.ndarray]]]] = [
            {} if radix <= config.PROBE_MAX_CHOICES else None for radix in plan.radices
        ]

    def fragment(self, pos: int, digit: int) -> Tuple[np.ndarray, np.ndarray]:
        cache = self._cache[pos]
        if cache is None:
            return self.table.cycle_arrays(self.plan.choice(pos, digit))
        if digit not in cache:
            cache[digit] = self.table.cycle_arrays(self.plan.choice(pos, digit))
        return cache[digit]

    def assemble(self, digits) -> np.ndarray:
        sigma = np.empty(self.table.n_darts, dtype=np.int64)
        for pos, digit in enumerate(digits):
            self.apply(sigma, pos, digit)
        return sigma

    def apply(self, sigma: np.ndarray, pos: int, digit: int):
        darts, successors = self.fragment(pos, digit)
        if len(darts):
            sigma[darts] = successors


def _searchable(radix: int) -> bool:
    return 2 <= radix <= config.PROBE_MAX_CHOICES


def _random_digit(plan: RotationPlan, pos: int, rng: np.random.Generator) -> int:
    radix = plan.radices[pos]
    if radix <= np.iinfo(np.int64).max:
        return int(rng.integers(0, radix))
    rest = plan.rests[pos]
    order = rng.permutation(len(rest))
    return plan.digit_of(pos, (plan.anchors[pos],) + tuple(rest[k] for k in order))


def _descend(fragments: FragmentTable, digits: List[int], target_faces: int):
    """Greedy vertex-by-vertex improvement. Returns (faces, evaluations)."""
    table = fragments.table
    radices = fragments.plan.radices
    sigma = fragments.assemble(digits)
    faces = table.count_faces(sigma)
    evaluations = 1
    for _ in range(PROBE_MAX_PASSES):
        improved = False
        for pos, radix in enumerate(radices):
            if not _searchable(radix) or faces <= target_faces:
                continue
            best_digit, best_faces = digits[pos], faces
            for digit in range(radix):
                if digit == digits[pos]:
                    continue
                fragments.apply(sigma, pos, digit)
                candidate = table.count_faces(sigma)
                evaluations += 1
                if candidate < best_faces:
                    best_digit, best_faces = digit, candidate
            fragments.apply(sigma, pos, best_digit)
            if best_digit != digits[pos]:
                digits[pos] = best_digit
                faces = best_faces
                improved = True
        if faces <= target_faces or not improved:
            break
    return faces, evaluations


def probe_bound(
    plan: RotationPlan,
    table: DartTable,
    target_faces: int,
    restarts: int = PROBE_RESTARTS,
    seed: int = PROBE_SEED,
) -> ProbeResult:
    """Try the index-0 system and `restarts` seeded random systems."""
    fragments = FragmentTable(plan, table)
    rng = np.random.default_rng(seed)
    evaluations = 0
    best_faces = None
    for attempt in range(restarts + 1):
        if attempt == 0:
            digits = [0] * len(plan.vertices)
        else:
            digits = [_random_digit(plan, pos, rng) for pos in range(len(plan.vertices))]
        faces, used = _descend(fragments, digits, target_faces)
        evaluations += used
        best_faces = faces if best_faces is None else min(best_faces, faces)
        if faces <= target_faces:
            logger.debug("probe reached the bound on attempt %d after %d evaluations", attempt, evaluations)
            return ProbeResult(digits, faces, evaluations)
    return ProbeResult(None, best_faces if best_faces is not None else 0, evaluations)
