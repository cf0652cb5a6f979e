# src/families/fixtures.py

from typing import Tuple

from src.embedding.rotation import RotationSystem
from src.families.base import FamilyBuilder, FamilySpec, LabeledGraph, vertex_names
from src.families.extended_spiral import insert_gadget
from src.families.ladders import mobius_ladder
from src.graph.multigraph import EdgeEnd, Multigraph
from src.graph.spanning import SpanningTree, spanning_tree


def k4() -> Multigraph:
    """K4 on v1..v4, edges in lexicographic order."""
    pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    return Multigraph.from_edges(pairs, labels=vertex_names(range(1, 5)))


def wheel_fixture() -> Tuple[Multigraph, SpanningTree, RotationSystem]:
    """
    K4 drawn as a triangle A B C around a centre O, with the star at O as
    spanning tree and every rotation clockwise in the drawing.

    Read first-read, the associated surface is e1 e1^-1 e2 e2^-1 e3 e3^-1.
    """
    a, b, c, o = 0, 1, 2, 3
    g = Multigraph.from_edges(
        [(a, b), (b, c), (c, a), (o, a), (o, b), (o, c)],
        labels={a: "A", b: "B", c: "C", o: "O"},
    )
    system = RotationSystem.from_mapping({
        a: [EdgeEnd(0, 0), EdgeEnd(3, 1), EdgeEnd(2, 1)],
        b: [EdgeEnd(4, 1), EdgeEnd(0, 1), EdgeEnd(1, 0)],
        c: [EdgeEnd(5, 1), EdgeEnd(1, 1), EdgeEnd(2, 0)],
        o: [EdgeEnd(3, 0), EdgeEnd(4, 0), EdgeEnd(5, 0)],
    })
    return g, spanning_tree(g, [3, 4, 5]), system


def mobius_handle_tree() -> Tuple[Multigraph, SpanningTree]:
    """
    M6 with the tree {a1, v2v3, v3v4, v4v5, v5v6}; the cotree is
    m = v1v2, a2, a3, n = v6v1 (edge ids 0, 7, 8, 5).
    """
    g = mobius_ladder(3)
    return g, spanning_tree(g, [6, 1, 2, 3, 4])


def beta_fixture() -> Multigraph:
    """K4 on v3..v6 whose edge v3v4 is routed through the digon v1=v2."""
    pairs = [(1, 2), (1, 2), (1, 3), (2, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]
    return Multigraph.from_edges(pairs, labels=vertex_names(range(1, 7)))


def gamma_fixture() -> Multigraph:
    """
    Diamond on v1, v2 with tips v3, v4, hung from K4 - v5v6 (on v5..v8)
    by the edges v3v5 and v4v6.
    """
    pairs = [
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4),
        (3, 5), (4, 6),
        (5, 7), (5, 8), (6, 7), (6, 8), (7, 8),
    ]
    return Multigraph.from_edges(pairs, labels=vertex_names(range(1, 9)))


def alpha_fixture() -> Multigraph:
    """K4 with edge v1v2 subdivided at v5; v5 carries a bridge to v6, which has a loop."""
    pairs = [(1, 5), (5, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (5, 6), (6, 6)]
    return Multigraph.from_edges(pairs, labels=vertex_names(range(1, 7)))


def loop_triangle() -> Multigraph:
    """Loop at v1, bridge v1v2, triangle v2 v3 v4."""
    pairs = [(1, 1), (1, 2), (2, 3), (3, 4), (4, 2)]
    return Multigraph.from_edges(pairs, labels=vertex_names(range(1, 5)))


def k4_with_gadget() -> LabeledGraph:
    """K4 with edge v1v2 replaced by one diamond-and-chords gadget."""
    graph, gadget = insert_gadget(k4(), 0, 0, 5)
    return LabeledGraph(graph, FamilySpec("k4", ()), gadgets=[gadget])


class FixtureBuilder(FamilyBuilder):
    """Parameterless named graphs: k4 and the drawn K4 of the joint-tree example."""

    def __init__(self, name: str):
        self.name = name

    def get_family_name(self) -> str:
        return self.name

    def build(self, spec: FamilySpec) -> LabeledGraph:
        self._require(spec, 0, ())
        graph = k4() if self.name == "k4" else wheel_fixture()[0]
        return LabeledGraph(graph, spec)
