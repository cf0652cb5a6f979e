import pytest

from src.errors import GenusParityError, NonOrientableWordError, TransformError, WordParseError
from src.surface import oracle
from src.surface.oracle import corner_classes, genus_by_corner_orbits, genus_from_characteristic
from src.surface.reduction import format_trace, reduce_to_standard
from src.surface.transforms import (
    cancel_step,
    first_interlaced,
    fold_step,
    transform1,
    transform2,
    transform3,
    transform4,
)
from src.surface.word import (
    insert_handle_letter,
    matches_pattern,
    parse_word,
    sphere_word,
    standard_word,
)
from src.verify.words import diagonal_word, enumerate_words


class TestParsing:
    def test_round_trip_text(self):
        w = parse_word("a b a^-1 b^-1")
        assert str(w) == "a b a^-1 b^-1"
        assert w.symbol_count == 2
        assert w.symbols() == ["a", "b"]

    def test_plus_one_exponent(self):
        assert str(parse_word("a^+1 a^-1")) == "a a^-1"

    def test_symbol_must_occur_twice(self):
        with pytest.raises(WordParseError):
            parse_word("a b a^-1")

    def test_same_exponent_is_not_orientable(self):
        with pytest.raises(NonOrientableWordError):
            parse_word("a b a b")

    def test_malformed_token(self):
        with pytest.raises(WordParseError):
            parse_word("a^2 a^-1")

    def test_reserved_prefix_rejected(self):
        with pytest.raises(WordParseError):
            parse_word("_c1 _c1^-1")

    def test_numeric_symbols(self):
        w = parse_word("1 2 1^-1 2^-1")
        assert w.symbols() == ["1", "2"]
        assert reduce_to_standard(w).genus == 1

    def test_partners(self):
        w = parse_word("a b a^-1 b^-1")
        assert w.partners() == (2, 3, 0, 1)

    def test_canonical_rotation(self):
        w = parse_word("a b a^-1 b^-1")
        assert str(w.canonical()) == "a^-1 b^-1 a b"


class TestTransforms:
    def test_cancel_step(self):
        step = cancel_step(parse_word("a a^-1 b b^-1"))
        assert step.kind == 1
        assert step.positions == (0, 1)
        assert str(step.result) == "b b^-1"

    def test_cancel_keeps_two_letters(self):
        assert cancel_step(parse_word("a a^-1")) is None
        assert str(transform1(parse_word("a b b^-1 a^-1"))) == "a a^-1"

    def test_fold_step(self):
        step = fold_step(parse_word("p q x q^-1 p^-1 x^-1"))
        assert step.kind == 2
        assert step.positions == (0, 1, 3, 4)
        assert str(step.result) == "_c1 x _c1^-1 x^-1"

    def test_fold_to_fixpoint(self):
        folded = transform2(parse_word("p q r x r^-1 q^-1 p^-1 x^-1"))
        assert len(folded) == 4

    def test_merge_bounded_words(self):
        assert str(transform3("b a", "a^-1 b^-1", symbol="a")) == "b b^-1"
        assert str(transform3("b a", "a^-1 b^-1")) == "a a^-1"
        assert str(transform3("x x^-1 a", "a^-1 y y^-1")) == "x x^-1 y y^-1"
        merged = transform3("p q p^-1 q^-1 a", "a^-1 r r^-1")
        assert str(merged) == "p q p^-1 q^-1 r r^-1"
        assert genus_by_corner_orbits(merged) == 1

    def test_merge_to_nothing_gives_sphere(self):
        merged = transform3("a", "a^-1")
        assert len(merged) == 2
        assert genus_by_corner_orbits(merged) == 0

    def test_merge_keeps_other_shared_symbols(self):
        assert str(transform3("a b", "a^-1 b^-1")) == "b b^-1"
        merged = transform3("a b c", "c^-1 a^-1 b^-1")
        assert str(merged) == "b c b^-1 c^-1"
        assert genus_by_corner_orbits(merged) == 1

    def test_merge_along_chosen_symbol(self):
        merged = transform3("a b c", "c^-1 a^-1 b^-1", symbol="c")
        assert str(merged) == "a b a^-1 b^-1"

    def test_merge_needs_a_glue_symbol(self):
        with pytest.raises(TransformError):
            transform3("a", "a")
        with pytest.raises(TransformError):
            transform3("a b", "c d")
        with pytest.raises(TransformError):
            transform3("a b c", "c^-1 a^-1 b^-1", symbol="d")

    def test_first_interlaced(self):
        pair = first_interlaced(parse_word("x x^-1 a y y^-1 b a^-1 b^-1"))
        assert (pair.first, pair.second) == ("a", "b")
        assert (pair.i, pair.k, pair.j, pair.l) == (2, 5, 6, 7)

    def test_handle_moves_to_tail(self):
        moved = transform4(parse_word("x x^-1 a y y^-1 b a^-1 b^-1"))
        assert str(moved) == "x x^-1 y y^-1 a b a^-1 b^-1"

    def test_handle_without_pair(self):
        with pytest.raises(TransformError):
            transform4(parse_word("a a^-1 b b^-1"))


class TestReduction:
    @pytest.mark.parametrize("p", range(9))
    def test_standard_words(self, p):
        result = reduce_to_standard(standard_word(p))
        assert result.genus == p
        assert len(result.word) == (4 * p if p else 2)

    def test_sphere(self):
        assert reduce_to_standard(sphere_word()).genus == 0
        assert reduce_to_standard(parse_word("a b b^-1 a^-1")).genus == 0

    def test_torus_with_cancelling_noise(self):
        result = reduce_to_standard(parse_word("x x^-1 a y y^-1 b a^-1 b^-1"))
        assert result.genus == 1
        assert matches_pattern(result.word, standard_word(1))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_diagonal_word(self, n):
        assert reduce_to_standard(diagonal_word(n)).genus == n // 2

    def test_trace_replays(self):
        result = reduce_to_standard(parse_word("a b c a^-1 b^-1 c^-1"))
        lines = format_trace(result.trace)
        assert len(lines) == len(result.trace)
        assert lines[0].startswith("STEP 1 T")
        assert result.trace[-1].result == result.word

    def test_result_is_standard(self):
        result = reduce_to_standard(parse_word("a b c d a^-1 b^-1 c^-1 d^-1"))
        assert result.genus == 2
        assert matches_pattern(result.word, standard_word(2))


class TestCornerOracle:
    def test_corner_classes(self):
        assert corner_classes(parse_word("a a^-1")) == 2
        assert corner_classes(parse_word("a b a^-1 b^-1")) == 1

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_census_agrees(self, n):
        for word in enumerate_words(n):
            assert reduce_to_standard(word).genus == genus_by_corner_orbits(word), str(word)

    def test_census_size(self):
        assert sum(1 for _ in enumerate_words(3)) == 120
        assert sum(1 for _ in enumerate_words(2, fix_first=False)) == 24

    @pytest.mark.parametrize("chi, genus", [(2, 0), (0, 1), (-2, 2)])
    def test_characteristic_to_genus(self, chi, genus):
        assert genus_from_characteristic(chi) == genus

    @pytest.mark.parametrize("chi", [1, -1, 3, 4])
    def test_characteristic_without_genus(self, chi):
        with pytest.raises(GenusParityError):
            genus_from_characteristic(chi)

    def test_inconsistent_corner_count(self, monkeypatch):
        monkeypatch.setattr(oracle, "corner_classes", lambda word: 2)
        with pytest.raises(GenusParityError):
            genus_by_corner_orbits(parse_word("a b a^-1 b^-1"))


class TestPatterns:
    def test_rotation_and_renaming(self):
        pattern = parse_word("m n m^-1 n^-1 a2 a3 a2^-1 a3^-1")
        assert matches_pattern(parse_word("c d c^-1 d^-1 x y x^-1 y^-1"), pattern)
        assert matches_pattern(parse_word("y^-1 c d c^-1 d^-1 x y x^-1"), pattern)
        assert not matches_pattern(parse_word("a b c d a^-1 b^-1 c^-1 d^-1"), pattern)

    def test_mirror(self):
        w = parse_word("a b a^-1 b^-1")
        assert matches_pattern(w.mirror(), w)

    def test_handle_insertion(self):
        grown = insert_handle_letter(parse_word("a a^-1").letters, 1, 2, "x")
        assert str(grown) == "a x a^-1 x^-1"
        assert reduce_to_standard(grown).genus == 1

    def test_insertion_out_of_range(self):
        with pytest.raises(ValueError):
            insert_handle_letter(parse_word("a a^-1").letters, 2, 1)
