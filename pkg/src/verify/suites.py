# src/verify/suites.py
"""
Property suites behind `verify`.

Each suite walks a parameter range, runs one check per instance and
collects counterexamples instead of stopping at the first one.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import networkx as nx
import numpy as np

from src import config
from src.critical.algorithms import algorithm_I, algorithm_II
from src.embedding.faces import DartTable
from src.embedding.joint_tree import associated_surface
from src.embedding.rotation import enumerate_rotations
from src.engine.search import is_upper_embeddable, max_genus_exhaustive
from src.errors import FamilySpecError
from src.families.extended_spiral import extended_spiral
from src.families.fixtures import (
    alpha_fixture,
    beta_fixture,
    gamma_fixture,
    k4,
    k4_with_gadget,
)
from src.families.grammar import generate
from src.families.ladders import mobius_ladder, neckband
from src.families.spiral import spiral_graph, spiral_upper_tree
from src.graph.cleanup import cleanup
from src.graph.multigraph import Multigraph, legal_partitions
from src.graph.spanning import spanning_tree
from src.surface.oracle import genus_by_corner_orbits
from src.surface.reduction import reduce_to_standard
from src.verify.words import diagonal_word, enumerate_words, handle_insertion, random_word

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    counterexamples: List[str] = field(default_factory=list)
    details: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def summary_lines(self) -> List[str]:
        lines = [f"suite={self.name}", f"checked={self.checked}",
                 f"counterexamples={len(self.counterexamples)}"]
        lines += self.details
        lines += [f"FAIL {c}" for c in self.counterexamples]
        lines.append(f"status={'pass' if self.passed else 'fail'}")
        return lines


class _Run:
    """Collects outcomes and mirrors them to an optional progress tracker."""

    def __init__(self, name: str, tracker=None):
        self.result = SuiteResult(name)
        self.tracker = tracker

    def check(self, ok: bool, what: str):
        self.result.checked += 1
        if self.tracker:
            self.tracker.increment_checked(self.result.name)
        if not ok:
            self.result.counterexamples.append(what)
            if self.tracker:
                self.tracker.add_error(what)

    def note(self, line: str):
        self.result.details.append(line)


def parse_int_range(text: str) -> List[int]:
    """`3..7`, `5` or `1,3,5`."""
    values: List[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                low, high = part.split("..")
                values.extend(range(int(low), int(high) + 1))
            elif part:
                values.append(int(part))
    except ValueError:
        raise FamilySpecError(f"bad range {text!r}, expected e.g. 3..7") from None
    if not values:
        raise FamilySpecError(f"empty range {text!r}")
    return values


def _graphs_from_range(text: str) -> Dict[str, Multigraph]:
    """`k4,mobius:3,neckband:2..4` -> named graphs; a kind with a range expands."""
    graphs: Dict[str, Multigraph] = {}
    for token in re.split(r",(?!\d)", text):
        token = token.strip()
        if not token:
            continue
        if ":" in token and ".." in token and token.count(":") == 1:
            kind, span = token.split(":")
            for value in parse_int_range(span):
                graphs[f"{kind}:{value}"] = generate(f"{kind}:{value}").graph
        else:
            graphs[token] = generate(token).graph
    return graphs


def _genus(g: Multigraph) -> int:
    return max_genus_exhaustive(g).max_genus


# -- word suites --------------------------------------------------------------

def suite_words(range_text: str, seed: int, tracker=None) -> SuiteResult:
    """Transform reduction against corner classes: full census plus a random sample."""
    run = _Run("words", tracker)
    for n in parse_int_range(range_text):
        for word in enumerate_words(n):
            by_transforms = reduce_to_standard(word).genus
            by_corners = genus_by_corner_orbits(word)
            run.check(by_transforms == by_corners, f"{word}: {by_transforms} != {by_corners}")
    rng = np.random.default_rng(seed)
    for _ in range(config.RANDOM_WORD_SAMPLES):
        k = int(rng.integers(1, config.RANDOM_WORD_MAX_SYMBOLS + 1))
        word = random_word(rng, k)
        by_transforms = reduce_to_standard(word).genus
        by_corners = genus_by_corner_orbits(word)
        run.check(by_transforms == by_corners, f"{word}: {by_transforms} != {by_corners}")
    return run.result


def suite_handle_insertion(range_text: str, seed: int, tracker=None) -> SuiteResult:
    """Splitting a word by one new symbol raises its genus by 0 or 1."""
    run = _Run("handle-insertion", tracker)
    sizes = parse_int_range(range_text)
    rng = np.random.default_rng(seed)
    for _ in range(config.RANDOM_WORD_SAMPLES):
        k = sizes[int(rng.integers(0, len(sizes)))]
        base, grown = handle_insertion(rng, k)
        delta = reduce_to_standard(grown).genus - reduce_to_standard(base).genus
        run.check(delta in (0, 1), f"{base} -> {grown}: genus changed by {delta}")
    return run.result


def suite_word_census(range_text: str, seed: int, tracker=None) -> SuiteResult:
    """Maximum genus over all words on n symbols is floor(n/2), reached by the diagonal word."""
    run = _Run("word-census", tracker)
    for n in parse_int_range(range_text):
        best = max(reduce_to_standard(w).genus for w in enumerate_words(n))
        diagonal = reduce_to_standard(diagonal_word(n)).genus
        run.check(best == n // 2, f"n={n}: census maximum {best} != {n // 2}")
        run.check(diagonal == n // 2, f"n={n}: diagonal word has genus {diagonal}")
        run.note(f"n={n} max_genus={best}")
    return run.result


# -- graph suites -------------------------------------------------------------

def _split_fixtures(range_text: str) -> Dict[str, Multigraph]:
    fixtures = {"k4": k4(), "gadget": k4_with_gadget().graph}
    names = [t.strip() for t in range_text.split(",") if t.strip()]
    unknown = [n for n in names if n not in fixtures]
    if unknown:
        raise FamilySpecError(f"unknown split fixture(s) {unknown}; known: k4, gadget")
    return {n: fixtures[n] for n in names}


def suite_splitting(range_text: str, seed: int, tracker=None) -> SuiteResult:
    """
    Contract each edge to get a degree-4 vertex, then check every legal
    split back: the split graph never has larger maximum genus and keeps
    the cycle rank.
    """
    run = _Run("vertex-split", tracker)
    for name, host in _split_fixtures(range_text).items():
        for e in host.sorted_edges():
            g, v = host.contract_edge(e)
            if g.degree(v) < 4:
                continue
            genus = _genus(g)
            for block_a, block_b in legal_partitions(g, v):
                split, _, _, _ = g.split_vertex(v, block_a, block_b)
                what = f"{name}/{e} split {[str(x) for x in block_a]}"
                run.check(split.betti() == g.betti(), f"{what}: cycle rank changed")
                run.check(_genus(split) <= genus, f"{what}: genus grew above {genus}")
    return run.result


def _critical_fixtures(range_text: str) -> Dict[str, Multigraph]:
    if range_text == "fixtures":
        graphs = {"beta": beta_fixture(), "gamma": gamma_fixture()}
        graphs.update({f"mobius:{n}": mobius_ladder(n) for n in (2, 3)})
        graphs.update({f"neckband:{n}": neckband(n) for n in (2, 3, 4)})
        return graphs
    return _graphs_from_range(range_text)


_CRITICAL_VERTEX = {"beta": 1, "gamma": 1}


def suite_critical(range_text: str, seed: int, tracker=None) -> SuiteResult:
    """Deleting a pattern vertex lowers the maximum genus by exactly one; alpha keeps it."""
    run = _Run("critical", tracker)
    for name, g in _critical_fixtures(range_text).items():
        v = _CRITICAL_VERTEX.get(name, min(g.vertices))
        before, after = _genus(g), _genus(g.delete_vertex(v))
        run.check(after == before - 1, f"{name} minus v{v}: {before} -> {after}")
        run.note(f"{name} v{v}: {before} -> {after}")
    if range_text == "fixtures":
        g = alpha_fixture()
        before, after = _genus(g), _genus(g.delete_vertex(6))
        run.check(after == before, f"alpha minus v6: {before} -> {after}")
    return run.result


def suite_correspondence(range_text: str, seed: int, tracker=None) -> SuiteResult:
    """Associated-surface genus equals face-tracing genus for every rotation system."""
    run = _Run("correspondence", tracker)
    for name, g in _graphs_from_range(range_text).items():
        tree = spanning_tree(g)
        table = DartTable(g)
        count = 0
        for system in enumerate_rotations(g):
            by_faces = table.genus_from_faces(table.count_faces(table.sigma(system)))
            by_word = reduce_to_standard(associated_surface(g, tree, system)).genus
            run.check(by_faces == by_word, f"{name}: faces {by_faces} != word {by_word}")
            count += 1
        run.note(f"{name}: {count} rotation systems")
    return run.result


def suite_spirals(range_text: str, seed: int, tracker=None) -> SuiteResult:
    """
    Spirals are upper embeddable; the witness read off the path-plus-pendants
    spanning tree reduces to the same genus; contracting an edge of a
    cubic spiral keeps upper embeddability.
    """
    run = _Run("spiral-upper", tracker)
    ns = parse_int_range(range_text)
    for m in (3, 4, 5):
        for n in ns:
            expected = (n + 1) // 2
            got = _genus(spiral_graph(m, n))
            run.check(got == expected, f"S_{m}^{n}: genus {got} != {expected}")
    for n in ns:
        if n < 5:
            continue
        g, tree = spiral_upper_tree(n)
        report = max_genus_exhaustive(g)
        genus = reduce_to_standard(associated_surface(g, tree, report.witness)).genus
        run.check(genus == (n + 1) // 2, f"S_5^{n} tree word genus {genus}")
    cubic = cleanup(spiral_graph(3, 3))
    for e in cubic.sorted_edges():
        if cubic.is_loop(e):
            continue
        merged, _ = cubic.contract_edge(e)
        run.check(is_upper_embeddable(merged), f"S_3^3 contracted at edge {e} is not upper embeddable")
    return run.result


def suite_spiral_critical(range_text: str, seed: int, tracker=None) -> SuiteResult:
    """v(m+2n-2) is 1-critical in S_m^n."""
    run = _Run("spiral-critical", tracker)
    for m in (3, 4, 5):
        for n in parse_int_range(range_text):
            if n < 3:
                continue
            g = spiral_graph(m, n)
            v = m + 2 * n - 2
            before, after = _genus(g), _genus(g.delete_vertex(v))
            run.check(after == before - 1, f"S_{m}^{n} minus v{v}: {before} -> {after}")
    return run.result


def _random_cubic(rng: np.random.Generator) -> Optional[Multigraph]:
    orders = list(range(4, config.RANDOM_CUBIC_MAX_ORDER + 1, 2))
    order = orders[int(rng.integers(0, len(orders)))]
    h = nx.random_regular_graph(3, order, seed=int(rng.integers(0, 2 ** 31)))
    if not nx.is_connected(h):
        return None
    return Multigraph.from_edges(sorted(tuple(sorted(e)) for e in h.edges()))


def suite_algorithm_one(range_text: str, seed: int, tracker=None) -> SuiteResult:
    """Algorithm I total against the exhaustive engine."""
    run = _Run("alg1", tracker)
    graphs = _critical_fixtures("fixtures") if range_text == "fixtures" else {}
    if range_text.startswith("cubic"):
        samples = int(range_text.split(":")[1]) if ":" in range_text else config.RANDOM_CUBIC_SAMPLES
        rng = np.random.default_rng(seed)
        while len(graphs) < samples:
            g = _random_cubic(rng)
            if g is not None:
                graphs[f"cubic#{len(graphs)}"] = g
    elif range_text != "fixtures":
        graphs = _graphs_from_range(range_text)
    for name, g in graphs.items():
        total, oracle = algorithm_I(g).total, _genus(g)
        run.check(total == oracle, f"{name}: algorithm I {total} != exhaustive {oracle}")
    return run.result


def _gadget_layouts(m: int, n: int):
    """No gadget, one on the last ear edge, and one more on cycle edge v1v2."""
    last = (m + 2 * n - 1, m + 2 * n)
    yield ()
    yield (last,)
    yield (last, (1, 2))


def suite_algorithm_two(range_text: str, seed: int, tracker=None) -> SuiteResult:
    """Algorithm II total against the exhaustive engine on extended spirals."""
    run = _Run("alg2", tracker)
    for m in (3, 5):
        for n in parse_int_range(range_text):
            for layout in _gadget_layouts(m, n):
                lg = extended_spiral(m, n, layout)
                total, oracle = algorithm_II(lg).total, _genus(lg.graph)
                run.check(total == oracle, f"{lg.spec}: algorithm II {total} != exhaustive {oracle}")
                run.check(oracle == lg.graph.betti() // 2, f"{lg.spec}: not upper embeddable")
    return run.result


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "words": suite_words,
    "handle-insertion": suite_handle_insertion,
    "word-census": suite_word_census,
    "vertex-split": suite_splitting,
    "critical": suite_critical,
    "spiral-upper": suite_spirals,
    "spiral-critical": suite_spiral_critical,
    "correspondence": suite_correspondence,
    "alg1": suite_algorithm_one,
    "alg2": suite_algorithm_two,
}

DEFAULT_RANGES = {
    "words": f"1..{config.WORD_CENSUS_MAX_SYMBOLS}",
    "handle-insertion": f"1..{config.RANDOM_WORD_MAX_SYMBOLS}",
    "word-census": "3..4",
    "vertex-split": "k4",
    "critical": "fixtures",
    "spiral-upper": "1..7",
    "spiral-critical": "3..7",
    "correspondence": "k4,mobius:3",
    "alg1": "fixtures",
    "alg2": "1..4",
}

# Stable names for the same suites, keyed by the statement each one checks.
SUITE_ALIASES = {
    "lemma1.1": "handle-insertion",
    "lemma1.2": "word-census",
    "lemma1.3": "vertex-split",
    "thm2.1": "critical",
    "thm3.1": "spiral-upper",
    "thm3.2": "spiral-critical",
}
SUITES.update({alias: SUITES[name] for alias, name in SUITE_ALIASES.items()})
DEFAULT_RANGES.update({alias: DEFAULT_RANGES[name] for alias, name in SUITE_ALIASES.items()})


def run_suite(name: str, range_text: Optional[str] = None, seed: Optional[int] = None, tracker=None) -> SuiteResult:
    if name not in SUITES:
        raise FamilySpecError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    range_text = range_text or DEFAULT_RANGES[name]
    seed = config.DEFAULT_SEED if seed is None else seed
    logger.info("suite %s range=%s seed=%d", name, range_text, seed)
    return SUITES[name](range_text, seed, tracker)
