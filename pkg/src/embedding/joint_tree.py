# src/embedding/joint_tree.py

from typing import Dict, Iterable, List, Tuple, Union

from src.errors import RotationError
from src.embedding.rotation import RotationSystem
from src.graph.multigraph import EdgeEnd, Multigraph
from src.graph.spanning import SpanningTree, spanning_tree
from src.surface.word import Letter, SurfaceWord

EXPONENT_RULES = ("first-read", "lower-end")


def cotree_symbols(tree: SpanningTree) -> Dict[int, str]:
    """Cotree edge -> symbol e1, e2, ... in edge-id order."""
    return {e: f"e{k}" for k, e in enumerate(tree.cotree, start=1)}


def boundary_walk(g: Multigraph, tree: SpanningTree, system: RotationSystem) -> List[EdgeEnd]:
    """
    Semi-edge ends in the order the joint-tree boundary meets them.

    The walk starts at the lowest vertex id, slot 0, and follows rotation
    successors; a tree end is crossed to its partner, a semi-edge is read
    and the walk turns back at its leaf.
    """
    if not g.edges:
        return []
    start_vertex = min(g.vertices)
    start = system.at(start_vertex)[0]
    reads: List[EdgeEnd] = []
    current = start
    for _ in range(2 * g.edge_count + 1):
        if tree.is_tree_edge(current.edge):
            current = system.successor(current.partner())
        else:
            reads.append(current)
            current = system.successor(current)
        if current == start:
            return reads
    raise RotationError("boundary walk did not close; rotation system and tree disagree")


def associated_surface(
    g: Multigraph,
    tree: Union[SpanningTree, Iterable[int], None],
    system: RotationSystem,
    exponent_rule: str = "lower-end",
) -> SurfaceWord:
    """
    Surface word read clockwise around the joint-tree of (g, tree, system).

    With "lower-end" the end with the smaller (vertex id, slot) carries
    exponent +1; with "first-read" the end met first does.
    """
    if exponent_rule not in EXPONENT_RULES:
        raise ValueError(f"unknown exponent rule {exponent_rule!r}")
    if not isinstance(tree, SpanningTree):
        tree = spanning_tree(g, tree if tree is not None else "default")
    system.validate(g)

    names = cotree_symbols(tree)
    reads = boundary_walk(g, tree, system)
    positive: Dict[int, EdgeEnd] = {}
    for end in reads:
        if end.edge in positive:
            continue
        if exponent_rule == "first-read":
            positive[end.edge] = end
        else:
            u, w = end, end.partner()
            key_u = (g.end_vertex(u), system.slot(u)[1])
            key_w = (g.end_vertex(w), system.slot(w)[1])
            positive[end.edge] = u if key_u <= key_w else w

    letters: List[Letter] = [
        Letter(names[end.edge], 1 if positive[end.edge] == end else -1) for end in reads
    ]
    return SurfaceWord(tuple(letters))


def semi_edge_reading(
    g: Multigraph, tree: SpanningTree, system: RotationSystem
) -> List[Tuple[str, int]]:
    """(symbol, vertex) for every semi-edge in reading order."""
    names = cotree_symbols(tree)
    return [(names[end.edge], g.end_vertex(end)) for end in boundary_walk(g, tree, system)]
