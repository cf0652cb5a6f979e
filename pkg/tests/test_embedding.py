import itertools

import pytest

from src.embedding.faces import DartTable, embedding_faces, face_trace_genus
from src.embedding.joint_tree import (
    associated_surface,
    boundary_walk,
    cotree_symbols,
    semi_edge_reading,
)
from src.embedding.rotation import (
    RotationPlan,
    RotationSystem,
    enumerate_rotations,
    format_rotation,
    parse_rotation,
    rotation_count,
)
from src.errors import GenusParityError, RotationError
from src.families.fixtures import wheel_fixture, mobius_handle_tree, k4
from src.families.ladders import mobius_ladder, neckband
from src.graph.multigraph import EdgeEnd, Multigraph
from src.graph.spanning import spanning_tree
from src.surface.reduction import reduce_to_standard
from src.surface.word import matches_pattern, parse_word


class TestRotationPlan:
    @pytest.mark.parametrize("g, count", [
        (k4(), 16),
        (mobius_ladder(3), 64),
        (neckband(4), 256),
    ])
    def test_rotation_count(self, g, count):
        assert rotation_count(g) == count
        assert RotationPlan(g).total == count

    def test_index_round_trip(self):
        plan = RotationPlan(k4())
        for index in (0, 5, 15):
            assert plan.index_of(plan.system_at(index)) == index

    def test_enumeration_order_matches_plan(self):
        g = k4()
        plan = RotationPlan(g)
        for index, system in enumerate(enumerate_rotations(g)):
            assert plan.index_of(system) == index

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            RotationPlan(k4()).system_at(16)

    def test_choices_follow_permutation_order(self):
        g = Multigraph.from_edges([(0, k) for k in range(1, 7)])
        plan = RotationPlan(g)
        ends = g.ends_at(0)
        expected = [(ends[0],) + perm for perm in itertools.permutations(ends[1:])]
        assert plan.radices[0] == 120
        assert [plan.choice(0, d) for d in range(120)] == expected
        assert [plan.digit_of(0, c) for c in expected] == list(range(120))

    def test_high_degree_vertex_is_unranked(self):
        g = Multigraph.from_edges([(0, k) for k in range(1, 25)])
        plan = RotationPlan(g)
        assert plan.total == rotation_count(g)
        for index in (0, 12345678901234567, plan.total - 1):
            assert plan.index_of(plan.system_at(index)) == index
        last = plan.system_at(plan.total - 1).at(0)
        assert last[1:] == tuple(reversed(g.ends_at(0)[1:]))

    def test_index_of_rejects_foreign_rotation(self):
        system = RotationPlan(mobius_ladder(3)).system_at(0)
        with pytest.raises(RotationError):
            RotationPlan(k4()).index_of(system)

    def test_anchor_first(self):
        system = RotationSystem.from_mapping({0: [EdgeEnd(3, 1), EdgeEnd(1, 0), EdgeEnd(2, 0)]})
        assert system.at(0)[0] == EdgeEnd(1, 0)
        assert system.successor(EdgeEnd(3, 1)) == EdgeEnd(1, 0)

    def test_format_parse(self):
        system = RotationPlan(k4()).system_at(7)
        assert parse_rotation(format_rotation(system)) == system

    def test_validate_rejects_foreign_rotation(self):
        system = RotationPlan(k4()).system_at(0)
        with pytest.raises(RotationError):
            system.validate(mobius_ladder(3))


class TestFaces:
    def test_wheel_is_planar(self):
        g, _, system = wheel_fixture()
        assert face_trace_genus(g, system) == 0
        assert len(embedding_faces(g, system)) == 4

    def test_k4_range(self):
        table = DartTable(k4())
        genera = {
            table.genus_from_faces(table.count_faces(table.sigma(s)))
            for s in enumerate_rotations(k4())
        }
        assert genera == {0, 1}

    @pytest.mark.parametrize("faces", [3, 9])
    def test_inconsistent_face_count(self, faces):
        with pytest.raises(GenusParityError):
            DartTable(k4()).genus_from_faces(faces)

    def test_faces_cover_every_dart(self):
        g = mobius_ladder(3)
        system = RotationPlan(g).system_at(11)
        walks = embedding_faces(g, system)
        assert sum(len(w) for w in walks) == 2 * g.edge_count


class TestJointTree:
    def test_wheel_word(self):
        g, tree, system = wheel_fixture()
        word = associated_surface(g, tree, system, exponent_rule="first-read")
        assert str(word) == "e1 e1^-1 e2 e2^-1 e3 e3^-1"
        assert reduce_to_standard(word).genus == 0

    def test_wheel_lower_end_rule(self):
        g, tree, system = wheel_fixture()
        word = associated_surface(g, tree, system, exponent_rule="lower-end")
        assert associated_surface(g, tree, system) == word
        assert reduce_to_standard(word).genus == 0

    def test_wheel_semi_edges(self):
        g, tree, system = wheel_fixture()
        reading = semi_edge_reading(g, tree, system)
        assert [symbol for symbol, _ in reading] == ["e1", "e1", "e2", "e2", "e3", "e3"]
        assert reading[0] == ("e1", 0)

    def test_cotree_symbols(self):
        tree = spanning_tree(k4())
        assert cotree_symbols(tree) == {3: "e1", 4: "e2", 5: "e3"}

    def test_walk_reads_each_semi_edge_once(self):
        g = mobius_ladder(3)
        tree = spanning_tree(g)
        reads = boundary_walk(g, tree, RotationPlan(g).system_at(0))
        assert len(reads) == 2 * len(tree.cotree)
        assert len(set(reads)) == len(reads)

    def test_mobius_handles(self):
        g, tree = mobius_handle_tree()
        assert tree.cotree == (0, 5, 7, 8)
        pattern = parse_word("m n m^-1 n^-1 a2 a3 a2^-1 a3^-1")
        hits = [
            word for word in (associated_surface(g, tree, s) for s in enumerate_rotations(g))
            if matches_pattern(word, pattern)
        ]
        assert hits
        assert all(reduce_to_standard(word).genus == 2 for word in hits)

    def test_unknown_exponent_rule(self):
        g, tree, system = wheel_fixture()
        with pytest.raises(ValueError):
            associated_surface(g, tree, system, exponent_rule="nearest")


def c5_with_chords() -> Multigraph:
    return Multigraph.from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3), (1, 4)])


class TestCorrespondence:
    @pytest.mark.parametrize(
        "g",
        [k4(), mobius_ladder(3), neckband(4), c5_with_chords()],
        ids=["k4", "m6", "n8", "c5-chords"],
    )
    @pytest.mark.parametrize("rule", ["first-read", "lower-end"])
    def test_word_genus_equals_face_genus(self, g, rule):
        tree = spanning_tree(g)
        for system in enumerate_rotations(g):
            by_word = reduce_to_standard(associated_surface(g, tree, system, exponent_rule=rule)).genus
            assert by_word == face_trace_genus(g, system)

    def test_any_tree_gives_same_genus(self):
        g = k4()
        system = RotationPlan(g).system_at(9)
        expected = face_trace_genus(g, system)
        for tree_edges in ([0, 1, 2], [0, 3, 5], [2, 4, 5]):
            word = associated_surface(g, tree_edges, system)
            assert reduce_to_standard(word).genus == expected
