# src/families/spiral.py

from typing import Dict, List, Tuple

from src.errors import FamilySpecError, GraphError
from src.families.base import FamilyBuilder, FamilySpec, LabeledGraph, vertex_names
from src.graph.multigraph import Multigraph
from src.graph.spanning import SpanningTree, spanning_tree


def ear_path(m: int, i: int) -> Tuple[int, int, int, int]:
    """
    Vertices of ear p_i (i >= 1): v(m+2i-2) v(m+2i-1) v(m+2i), then back
    to v_i while i <= m - 1, afterwards to v(2i-m+1).
    """
    end = i if i <= m - 1 else 2 * i - m + 1
    return (m + 2 * i - 2, m + 2 * i - 1, m + 2 * i, end)


def spiral_ears(m: int, n: int) -> List[Tuple[int, ...]]:
    """p_0 (the m-cycle) followed by the n three-edge ears."""
    return [tuple(range(1, m + 1))] + [ear_path(m, i) for i in range(1, n + 1)]


def spiral_graph(m: int, n: int) -> Multigraph:
    """
    S_m^n on v1..v(m+2n): cycle edges first (ids 0..m-1), then three
    edges per ear in ear order.
    """
    pairs = [(i, i % m + 1) for i in range(1, m + 1)]
    for i in range(1, n + 1):
        path = ear_path(m, i)
        pairs.extend(zip(path, path[1:]))
    return Multigraph.from_edges(pairs, labels=vertex_names(range(1, m + 2 * n + 1)))


class SpiralBuilder(FamilyBuilder):
    """Spiral S_m^n: an m-cycle with n ears attached by the indexing rule."""

    def get_family_name(self) -> str:
        return "spiral"

    def build(self, spec: FamilySpec) -> LabeledGraph:
        self._require(spec, 2, (3, 1))
        m, n = spec.params
        return LabeledGraph(spiral_graph(m, n), spec, ears=spiral_ears(m, n))


# -- spanning trees of S_5^n ------------------------------------------------

def _edge_between(g: Multigraph, u: int, v: int) -> int:
    found = g.edges_between(u, v)
    if not found:
        raise GraphError(f"no edge v{u}-v{v}")
    return found[0]


def _path_edges(g: Multigraph, path: List[int]) -> List[int]:
    return [_edge_between(g, a, b) for a, b in zip(path, path[1:])]


def _tree_paths(n: int) -> Tuple[List[int], List[Tuple[int, int]]]:
    """Hamiltonian-like path plus pendant edges for S_5^n, n = 5j + r."""
    j, r = divmod(n, 5)
    top = 2 * n

    if r == 0:
        path = [2, 1, 5, 4, 3]
        for i in range(1, j):
            path += list(range(10 * i + 1, 10 * i - 5, -1)) + list(range(10 * i + 5, 10 * i + 1, -1))
        path += list(range(top + 1, top - 5, -1)) + [top + 5, top + 4, top + 3]
        return path, [(top + 1, top + 2)]

    if r == 1:
        head = [3, 2, 1]
        block = lambda i: list(range(10 * i - 3, 10 * i - 7, -1)) + list(range(10 * i + 3, 10 * i - 3, -1))
    elif r == 2:
        head = [1, 5, 4, 3, 2]
        block = lambda i: list(range(10 * i - 1, 10 * i - 5, -1)) + list(range(10 * i + 5, 10 * i - 1, -1))
    elif r == 3:
        head = [2, 1, 7, 6, 5, 4, 3]
        block = lambda i: list(range(10 * i + 1, 10 * i - 3, -1)) + list(range(10 * i + 7, 10 * i + 1, -1))
    else:
        path = [1, 2]
        for i in range(1, j + 1):
            path += list(range(10 * i - 1, 10 * i - 7, -1)) + list(range(10 * i + 3, 10 * i - 1, -1))
        path += list(range(top + 1, top - 5, -1)) + [top + 5, top + 4, top + 3]
        return path, [(2, 3), (top + 1, top + 2)]

    path = list(head)
    for i in range(1, j + 1):
        path += block(i)
    path += [top + 5, top + 4, top + 3]
    return path, [(top + 1, top + 2)]


def spiral_upper_tree(n: int) -> Tuple[Multigraph, SpanningTree]:
    """
    S_5^n with the path-plus-pendants spanning tree used to show it is
    upper embeddable. Every residue of n mod 5 has its own path; n < 5
    falls back to the default tree.
    """
    g = spiral_graph(5, n)
    if n < 5:
        return g, spanning_tree(g)
    path, pendants = _tree_paths(n)
    edges = _path_edges(g, path) + [_edge_between(g, u, v) for u, v in pendants]
    return g, spanning_tree(g, edges)


def _multiple_of_five_cotree_pairs(n: int) -> List[Tuple[int, int]]:
    pairs = [(2, 3), (2, 9), (1, 7)]
    for i in range(1, n // 5):
        pairs += [
            (10 * i - 5, 10 * i - 4),
            (10 * i - 6, 10 * i + 3),
            (10 * i + 1, 10 * i + 2),
            (10 * i, 10 * i + 9),
            (10 * i - 2, 10 * i + 7),
        ]
    pairs += [(2 * n - 5, 2 * n - 4), (2 * n - 6, 2 * n + 3), (2 * n + 2, 2 * n + 3)]
    return pairs


def spiral_cotree_labels(n: int) -> Tuple[Multigraph, SpanningTree, Dict[int, str]]:
    """
    S_5^n, its spanning tree and cotree labels (edge id -> e1..e(n+1)).

    For n divisible by 5 the labels follow a fixed walk along the ears;
    other residues label the cotree in edge-id order.
    """
    if n < 5:
        raise FamilySpecError(f"spiral cotree labels need n >= 5, got {n}")
    g, tree = spiral_upper_tree(n)
    if n % 5:
        return g, tree, {e: f"e{k}" for k, e in enumerate(tree.cotree, start=1)}

    labels = {}
    for k, (u, v) in enumerate(_multiple_of_five_cotree_pairs(n), start=1):
        e = _edge_between(g, u, v)
        if tree.is_tree_edge(e):
            raise GraphError(f"labelled cotree edge v{u}-v{v} lies in the tree")
        labels[e] = f"e{k}"
    if len(labels) != len(tree.cotree):
        raise GraphError(f"{len(labels)} labels for {len(tree.cotree)} cotree edges")
    return g, tree, labels
