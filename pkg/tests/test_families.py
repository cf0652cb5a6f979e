import json

import pytest

from src.errors import FamilySpecError
from src.families.base import FamilySpec, validate_family
from src.families.cycle import cycle_graph
from src.families.extended_spiral import GADGET_ROLES, extended_spiral
from src.families.fixtures import beta_fixture, gamma_fixture, k4_with_gadget
from src.families.grammar import format_labels, generate, parse_family
from src.families.ladders import mobius_chords, neckband, neckband_chords
from src.families.spiral import ear_path, spiral_graph, spiral_cotree_labels, spiral_upper_tree
from src.graph.cleanup import cleanup


class TestLadders:
    def test_neckband_chords(self):
        assert neckband_chords(4) == [(1, 4), (3, 6), (5, 8), (7, 2)]
        g = neckband(4)
        assert [g.endpoints(e) for e in range(8, 12)] == neckband_chords(4)

    def test_six_vertex_neckband_is_the_mobius_ladder(self):
        normalize = lambda chords: sorted(tuple(sorted(c)) for c in chords)
        assert normalize(neckband_chords(3)) == normalize(mobius_chords(3))

    @pytest.mark.parametrize("text, betti", [("mobius:3", 4), ("neckband:4", 5), ("mobius:2", 3)])
    def test_cubic(self, text, betti):
        report = validate_family(generate(text))
        assert report.regular == 3
        assert report.betti == betti


class TestSpiral:
    def test_ear_indexing(self):
        assert ear_path(5, 1) == (5, 6, 7, 1)
        assert ear_path(5, 4) == (11, 12, 13, 4)
        assert ear_path(5, 5) == (13, 14, 15, 6)
        assert ear_path(5, 6) == (15, 16, 17, 8)

    def test_s5_6(self):
        g = spiral_graph(5, 6)
        assert g.vertex_count == 17
        assert g.edge_count == 23
        assert g.betti() == 7
        report = validate_family(generate("spiral:5,6"))
        assert report.min_degree == 2
        assert report.max_degree == 3
        assert {14, 16, 17} <= set(report.degree_two)

    def test_cycle_edges_come_first(self):
        g = spiral_graph(4, 2)
        assert [g.endpoints(e) for e in range(4)] == [(1, 2), (2, 3), (3, 4), (4, 1)]
        assert g.endpoints(4) == (4, 5)

    def test_labels(self):
        lg = generate("spiral:3,2")
        assert lg.graph.label(7) == "v7"
        assert lg.ears == [(1, 2, 3), (3, 4, 5, 1), (5, 6, 7, 2)]

    @pytest.mark.parametrize("n", range(5, 11))
    def test_upper_trees(self, n):
        g, tree = spiral_upper_tree(n)
        assert len(tree.tree_edges) == g.vertex_count - 1
        assert len(tree.cotree) == n + 1

    def test_small_spiral_tree_falls_back(self):
        g, tree = spiral_upper_tree(3)
        assert len(tree.cotree) == 4

    def test_cotree_labels(self):
        g, tree, labels = spiral_cotree_labels(5)
        assert sorted(labels.values(), key=lambda s: int(s[1:])) == [f"e{k}" for k in range(1, 7)]
        assert set(labels) == set(tree.cotree)
        assert labels[g.edges_between(1, 7)[0]] == "e3"

    def test_cotree_labels_other_residue(self):
        g, tree, labels = spiral_cotree_labels(7)
        assert len(labels) == 8

    def test_cotree_labels_need_five_ears(self):
        with pytest.raises(FamilySpecError):
            spiral_cotree_labels(4)


class TestExtendedSpiral:
    def test_gadget_layout(self):
        lg = generate("extspiral:5,6:13-14")
        g = lg.graph
        assert g.vertex_count == 25
        assert g.betti() == 11
        (gadget,) = lg.gadgets
        assert gadget.host == (13, 14)
        assert gadget.vertices == {role: 18 + k for k, role in enumerate(GADGET_ROLES)}
        assert g.label(21) == "g0.v1"
        assert not g.edges_between(13, 14)

    def test_two_gadgets(self):
        lg = extended_spiral(3, 2, [(6, 7), (1, 2)])
        assert lg.graph.vertex_count == 7 + 16
        assert lg.graph.betti() == 3 + 8
        assert [gd.vertices["A"] for gd in lg.gadgets] == [8, 16]

    def test_gadget_collapse_restores_host(self):
        lg = generate("extspiral:5,6:13-14")
        roles = lg.gadgets[0].vertices
        g = cleanup(lg.graph)
        g = cleanup(g.delete_vertex(roles["v1"]))
        g = cleanup(g.delete_vertex(roles["B"]))
        reference = cleanup(spiral_graph(5, 6))
        assert g.vertices == reference.vertices
        assert g.edge_multiset() == reference.edge_multiset()

    def test_gadget_on_k4(self):
        lg = k4_with_gadget()
        assert lg.graph.vertex_count == 12
        assert lg.graph.betti() == 7

    def test_missing_host_edge(self):
        with pytest.raises(FamilySpecError):
            generate("extspiral:5,6:1-3")


class TestGrammar:
    def test_parse(self):
        spec = parse_family("extspiral:5,6:13-14,v1-v2")
        assert spec == FamilySpec("extspiral", (5, 6), ((13, 14), (1, 2)))
        assert str(spec) == "extspiral:5,6:13-14,1-2"

    def test_parameterless(self):
        assert parse_family("k4") == FamilySpec("k4", ())
        assert generate("k4").graph.edge_count == 6
        assert generate("wheel").graph.label(3) == "O"

    @pytest.mark.parametrize("text", [
        "torus:3",
        "spiral:5",
        "spiral:2,3",
        "cycle:2",
        "mobius:x",
        "spiral:5,6:1-2",
        "extspiral:5,6:13",
    ])
    def test_rejected(self, text):
        with pytest.raises(FamilySpecError):
            generate(text)

    def test_cycle(self):
        lg = generate("cycle:5")
        assert lg.graph.edges == cycle_graph(5).edges
        assert validate_family(lg).degree_two == [1, 2, 3, 4, 5]

    def test_labels_sidecar(self):
        data = json.loads(format_labels(generate("extspiral:5,6:13-14")))
        assert data["vertex_labels"]["18"] == "g0.A"
        assert data["ears"][0] == [1, 2, 3, 4, 5]
        assert data["gadgets"][0]["host"] == [13, 14]


class TestFixtures:
    def test_beta_fixture(self):
        g = beta_fixture()
        assert g.edges_between(1, 2) == [0, 1]
        assert g.betti() == 4

    def test_gamma_fixture(self):
        g = gamma_fixture()
        assert g.betti() == 5
        assert all(d == 3 for d in g.degrees().values())
