# src/critical/algorithms.py

import logging
from typing import List, Optional

from src.critical.base import CriticalFinding, ReductionTrace, TraceStep
from src.critical.diamonds import detect_beta, detect_gamma
from src.critical.ladders import detect_delta, detect_eta
from src.critical.loops import detect_alpha
from src.engine.search import max_genus_exhaustive
from src.errors import DisconnectedGraphError, LabelError
from src.families.base import LabeledGraph
from src.families.spiral import spiral_graph
from src.graph.cleanup import cleanup
from src.graph.multigraph import Multigraph
from src.graph.spanning import is_cactus

logger = logging.getLogger(__name__)

# Order in which reductions look for a vertex to delete
PRIORITY = (detect_beta, detect_gamma, detect_delta, detect_eta)


def find_1_critical(g: Multigraph) -> Optional[CriticalFinding]:
    """First beta, gamma, delta or eta vertex (lowest id within a kind)."""
    for detect in PRIORITY:
        findings = detect(g)
        if findings:
            return findings[0]
    return None


def _delete(g: Multigraph, finding: CriticalFinding, counted: bool = True, note: str = ""):
    after = cleanup(g.delete_vertex(finding.vertex))
    logger.debug("deleted %s vertex %d -> v=%d e=%d", finding.kind, finding.vertex,
                 after.vertex_count, after.edge_count)
    return after, TraceStep(finding, after.vertex_count, after.edge_count, counted, note)


def algorithm_I(
    g: Multigraph,
    jobs: Optional[int] = None,
    budget: Optional[int] = None,
    force: bool = False,
    progress=None,
) -> ReductionTrace:
    """
    Maximum genus by peeling 1-critical vertices.

    Each deletion is followed by cleanup. Alpha vertices are removed
    without counting. When no pattern is left the remainder goes to the
    exhaustive engine and the total is its genus plus the deletions.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("algorithm I needs a connected graph")

    current = cleanup(g)
    steps: List[TraceStep] = []
    while True:
        alphas = detect_alpha(current)
        if alphas:
            current, step = _delete(current, alphas[0], counted=False, note="genus-neutral loop vertex")
            steps.append(step)
            continue
        finding = find_1_critical(current)
        if finding is None:
            break
        current, step = _delete(current, finding)
        steps.append(step)

    report = max_genus_exhaustive(current, jobs=jobs, budget=budget, force=force, progress=progress)
    counted = sum(1 for s in steps if s.counted)
    logger.info("algorithm I: %d deletions, base genus %d", counted, report.max_genus)
    return ReductionTrace(
        algorithm="alg1",
        steps=steps,
        base_graph=current,
        base_genus=report.max_genus,
        total=report.max_genus + counted,
        base_report=report,
    )


def _check_labels(lg: LabeledGraph, m: int, n: int):
    g = lg.graph
    for v in range(1, m + 2 * n + 1):
        if g.vertex_labels.get(v) != f"v{v}":
            raise LabelError(f"spiral vertex {v} is missing its label")
    for gadget in lg.gadgets:
        for role, v in gadget.vertices.items():
            if g.vertex_labels.get(v) != f"g{gadget.index}.{role}":
                raise LabelError(f"gadget {gadget.index} vertex {role} is missing its label")
    expected = set(range(1, m + 2 * n + 1)) | {v for gd in lg.gadgets for v in gd.vertices.values()}
    if set(g.vertices) != expected:
        raise LabelError("graph vertices do not match the spiral and gadget labels")


def _matches_spiral(g: Multigraph, m: int, k: int) -> bool:
    reference = cleanup(spiral_graph(m, k))
    return g.vertices == reference.vertices and g.edge_multiset() == reference.edge_multiset()


def algorithm_II(lg: LabeledGraph) -> ReductionTrace:
    """
    Maximum genus of a labeled (extended) spiral without enumeration.

    Gadget gamma vertices are deleted first (i of them). The remainder must
    then be the cleaned spiral S_m^n; deleting v(m+2k-2) and cleaning up
    yields S_m^(k-2), repeated until a cactus is left. The total is i plus
    the number of spiral deletions.
    """
    kind = lg.spec.kind
    if kind == "cycle":
        (m,), n = lg.spec.params, 0
    elif kind in ("spiral", "extspiral"):
        m, n = lg.spec.params
    else:
        raise LabelError(f"algorithm II needs a labeled spiral, got {kind!r}")
    _check_labels(lg, m, n)

    gadget_vertices = {v for gd in lg.gadgets for v in gd.vertices.values()}
    current = cleanup(lg.graph)
    steps: List[TraceStep] = []

    i = 0
    while True:
        found = [f for f in detect_gamma(current) if f.vertex in gadget_vertices]
        if not found:
            break
        current, step = _delete(current, found[0])
        steps.append(step)
        i += 1
    leftover = sorted(gadget_vertices & current.vertices)
    if leftover:
        raise LabelError(f"gadget vertices {leftover} survived the gamma deletions")

    k = n
    deletions = 0
    while not is_cactus(current):
        if k < 1 or not _matches_spiral(current, m, k):
            raise LabelError(f"graph is not the labeled spiral S_{m}^{k}")
        v = m + 2 * k - 2
        current, step = _delete(current, CriticalFinding("spiral", v, {"ears": k}))
        steps.append(step)
        deletions += 1
        k -= 2

    total = i + deletions
    logger.info("algorithm II: i=%d, %d spiral deletions, total %d", i, deletions, total)
    return ReductionTrace(
        algorithm="alg2",
        steps=steps,
        base_graph=current,
        base_genus=0,
        total=total,
        counters={"i": i, "j": max(deletions - 1, 0)},
    )
