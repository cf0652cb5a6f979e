# src/engine/search.py

import logging
import math
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

from src import config
from src.embedding.faces import DartTable
from src.embedding.joint_tree import associated_surface
from src.embedding.rotation import RotationPlan
from src.engine.probe import FragmentTable, probe_bound
from src.engine.report import GenusReport
from src.errors import DisconnectedGraphError, OracleMismatchError
from src.graph.multigraph import Multigraph
from src.graph.spanning import spanning_tree
from src.surface.reduction import reduce_to_standard
from src.tracking.budget import EnumerationBudget

logger = logging.getLogger(__name__)


@dataclass
class ChunkResult:
    start: int
    stop: int
    best_faces: int
    best_index: int
    hit_index: Optional[int]
    scanned: int


class _Scanner:
    """Walks a contiguous index range of a RotationPlan with an odometer."""

    def __init__(self, g: Multigraph, cross_check_every: int = 0):
        self.graph = g
        self.plan = RotationPlan(g)
        self.table = DartTable(g)
        self.fragments = FragmentTable(self.plan, self.table)
        self.cross_check_every = cross_check_every
        self.tree = spanning_tree(g) if cross_check_every else None

    def _cross_check(self, digits: List[int], faces: int):
        system = self.plan.system_from_digits(digits)
        by_faces = self.table.genus_from_faces(faces)
        by_word = reduce_to_standard(associated_surface(self.graph, self.tree, system)).genus
        if by_faces != by_word:
            raise OracleMismatchError(
                f"face tracing gives genus {by_faces}, associated surface gives {by_word}"
            )

    def scan(
        self, start: int, stop: int, target_faces: int, early_exit: bool, tick=None, halt=None
    ) -> ChunkResult:
        radices = list(self.plan.radices)
        digits = self.plan.digits_at(start)
        sigma = self.fragments.assemble(digits)
        best_faces, best_index = None, start
        last = len(digits) - 1

        for index in range(start, stop):
            faces = self.table.count_faces(sigma)
            if best_faces is None or faces < best_faces:
                best_faces, best_index = faces, index
            if self.cross_check_every and index % self.cross_check_every == 0:
                self._cross_check(digits, faces)
            if early_exit and faces <= target_faces:
                return ChunkResult(start, stop, faces, index, index, index - start + 1)
            scanned = index - start + 1
            if tick is not None and scanned % config.PROGRESS_EVERY == 0:
                tick(config.PROGRESS_EVERY)
            if halt is not None and scanned % config.HALT_POLL_EVERY == 0 and halt.is_set():
                return ChunkResult(start, stop, best_faces, best_index, None, scanned)

            pos = last
            while pos >= 0:
                digits[pos] += 1
                if digits[pos] < radices[pos]:
                    self.fragments.apply(sigma, pos, digits[pos])
                    break
                digits[pos] = 0
                self.fragments.apply(sigma, pos, 0)
                pos -= 1

        return ChunkResult(start, stop, best_faces, best_index, None, stop - start)


def _scan_chunk(args) -> ChunkResult:
    g, start, stop, target_faces, early_exit, cross_check_every, halt = args
    return _Scanner(g, cross_check_every).scan(start, stop, target_faces, early_exit, halt=halt)


def _chunk_bounds(total: int, chunks: int) -> List[range]:
    chunks = max(1, min(chunks, total))
    size = math.ceil(total / chunks)
    return [range(lo, min(lo + size, total)) for lo in range(0, total, size)]


def _scan_parallel(g, total, target_faces, early_exit, jobs, cross_check_every) -> List[ChunkResult]:
    bounds = _chunk_bounds(total, jobs * config.CHUNKS_PER_JOB)
    results: List[ChunkResult] = []
    with multiprocessing.Manager() as manager:
        halt = manager.Event() if early_exit else None
        executor = ProcessPoolExecutor(max_workers=jobs)
        try:
            futures = [
                executor.submit(
                    _scan_chunk, (g, r.start, r.stop, target_faces, early_exit, cross_check_every, halt)
                )
                for r in bounds
            ]
            # consumed in index order so the first hit is the global first hit
            for future in futures:
                result = future.result()
                results.append(result)
                if early_exit and result.hit_index is not None:
                    halt.set()
                    break
        finally:
            executor.shutdown(wait=True, cancel_futures=True)
    return results


def max_genus_exhaustive(
    g: Multigraph,
    early_exit: bool = True,
    jobs: Optional[int] = None,
    budget: Optional[int] = None,
    force: bool = False,
    cross_check_every: Optional[int] = None,
    progress=None,
    probe: bool = True,
) -> GenusReport:
    """
    Maximum genus by enumerating rotation systems.

    With early_exit the search stops at the first system reaching
    floor(beta / 2), preceded by a deterministic local-search probe. The
    witness is the first maximizing system in index order, whatever the
    number of worker processes.
    """
    started = time.perf_counter()
    if not g.is_connected():
        raise DisconnectedGraphError("maximum genus is defined for connected graphs only")

    beta = g.betti()
    bound = beta // 2
    target_faces = 2 - g.vertex_count + g.edge_count - 2 * bound
    guard = EnumerationBudget(budget)
    total = guard.calculate_cost(g)
    jobs = config.DEFAULT_JOBS if jobs is None else max(1, jobs)
    cross_check_every = config.CROSS_CHECK_EVERY if cross_check_every is None else cross_check_every
    largest_vertex = max((math.factorial(max(d - 1, 0)) for d in g.degrees().values()), default=1)

    def finish(genus, witness_index, witness, enumerated, stopped_early):
        return GenusReport(
            max_genus=genus,
            euler_bound=bound,
            upper_embeddable=genus == bound,
            witness=witness,
            systems_enumerated=enumerated,
            early_exit=stopped_early,
            elapsed_ms=(time.perf_counter() - started) * 1000,
            vertices=g.vertex_count,
            edges=g.edge_count,
            betti=beta,
            witness_index=witness_index,
        )

    if not early_exit or largest_vertex > config.PROBE_MAX_CHOICES:
        guard.check(total, force)

    plan = RotationPlan(g)
    table = DartTable(g)
    probed = 0
    if early_exit and probe and total > 1:
        result = probe_bound(plan, table, target_faces)
        probed = result.evaluations
        if result.found:
            logger.info("probe met the Euler bound %d after %d evaluations", bound, probed)
            witness = plan.system_from_digits(result.digits)
            return finish(bound, plan.index_of(witness), witness, probed, True)

    guard.check(total, force)

    logger.info("enumerating %d rotation systems (jobs=%d, early_exit=%s)", total, jobs, early_exit)
    if jobs > 1 and total >= config.PARALLEL_MIN_SYSTEMS:
        chunks = _scan_parallel(g, total, target_faces, early_exit, jobs, cross_check_every)
    else:
        tick = progress.increment if progress is not None else None
        chunks = [_Scanner(g, cross_check_every).scan(0, total, target_faces, early_exit, tick)]

    best = chunks[0]
    for chunk in chunks[1:]:
        if chunk.best_faces < best.best_faces:
            best = chunk
    hit = next((c.hit_index for c in chunks if c.hit_index is not None), None)

    if hit is not None:
        enumerated = probed + hit + 1
        witness_index = hit
    else:
        enumerated = probed + total
        witness_index = best.best_index
    genus = table.genus_from_faces(best.best_faces if hit is None else target_faces)
    return finish(genus, witness_index, plan.system_at(witness_index), enumerated, hit is not None)


def is_upper_embeddable(g: Multigraph, **options) -> bool:
    """True when the maximum genus reaches floor(beta / 2)."""
    return max_genus_exhaustive(g, early_exit=True, **options).upper_embeddable
