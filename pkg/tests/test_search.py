"""Tests for word and cube searches."""

import numpy as np
import pytest

from terna.core.algebra import GROUP_WORDS, check_axioms, from_group_word, from_loop_word
from terna.core.builtin import get_group, get_loop, std_oriented
from terna.core.magma import MagmaTable
from terna.core.search import (
    GROUP_OPS,
    LOOP_OPS,
    WordTemplate,
    latin_squares,
    search_cubes,
    search_words,
    templates,
)
from terna.exceptions import AlgebraError, SearchBudgetExceeded


def battery():
    return [get_group(name) for name in ("s3", "d4", "q8")]


def contains(result, expected):
    """Whether a hit has the tables of ``expected``, one per member, in either role order."""
    for hit in result.hits:
        pairs = list(zip(hit.algebras, expected))
        if all(a.same_tables(b) for a, b in pairs):
            return True
        if all(a.swapped().same_tables(b) for a, b in pairs):
            return True
    return False


class TestTemplates:
    """Test the depth-two word enumeration."""

    def test_group_count(self):
        assert len(list(templates(GROUP_OPS))) == 96

    def test_loop_count(self):
        assert len(list(templates(LOOP_OPS))) == 864

    def test_text(self):
        t = WordTemplate("left", ("a", "b", "c"), (False, True, False), ("*", "*"))
        assert t.text() == "(a*b^-1)*c"
        t = WordTemplate("right", ("c", "a", "b"), (True, False, False), ("\\", "*"))
        assert t.text() == "c^-1*(a\\b)"

    def test_texts_are_distinct(self):
        texts = [t.text() for t in templates(LOOP_OPS)]
        assert len(set(texts)) == len(texts)


class TestWordSearch:
    """Test operator pair search over a battery."""

    @pytest.fixture(scope="class")
    def unoriented(self):
        return search_words(battery(), "unoriented")

    def test_finds_every_group_pair(self, unoriented):
        for pair_id in GROUP_WORDS:
            expected = [from_group_word(g, pair_id) for g in battery()]
            assert contains(unoriented, expected), pair_id

    def test_finds_nothing_else(self, unoriented):
        """The group battery yields exactly the nine listed pairs."""
        assert len(unoriented.hits) == len(GROUP_WORDS) == 9

    def test_larger_battery_keeps_fewer_pairs(self):
        """Every pair passing on a battery also passes on each of its members."""
        small = search_words([get_group("s3")], "unoriented")
        large = search_words([get_group("s3"), get_group("q8")], "unoriented")
        for hit in large.hits:
            assert contains(small, hit.algebras[:1]), (hit.op1, hit.op2)

    def test_result_shape(self, unoriented):
        assert unoriented.complete
        assert unoriented.source == ("s3", "d4", "q8")
        assert unoriented.explored == 96
        data = unoriented.to_dict()
        assert data["case"] == "unoriented"
        assert len(data["hits"]) == len(unoriented.hits)

    def test_hits_pass_on_every_member(self, unoriented):
        for hit in unoriented.hits:
            assert all(check_axioms(a).passed for a in hit.algebras)

    def test_oriented_hits_are_symmetric(self):
        result = search_words(battery(), "oriented")
        assert result.hits
        assert all(hit.symmetric for hit in result.hits)

    def test_empty_battery(self):
        with pytest.raises(AlgebraError, match="empty"):
            search_words([])

    def test_non_loop_member(self):
        with pytest.raises(AlgebraError, match="not a loop"):
            search_words([MagmaTable(np.zeros((2, 2), dtype=int), name="zero")])

    def test_unknown_case(self):
        with pytest.raises(AlgebraError, match="unknown case"):
            search_words(battery(), "twisted")

    @pytest.mark.slow
    def test_moufang_formulas_on_doubled_loop(self):
        loop = get_loop("ms3")
        result = search_words([loop], "oriented")
        for formula in ("m1", "m2", "m3", "m4"):
            assert contains(result, [from_loop_word(loop, formula)]), formula


class TestLatinSquares:
    """Test Latin square enumeration."""

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 12), (4, 576)])
    def test_counts(self, n, count):
        assert len(latin_squares(n)) == count

    def test_rows_and_columns(self):
        for square in latin_squares(3):
            assert all(sorted(row) == [0, 1, 2] for row in square)
            assert all(sorted(col) == [0, 1, 2] for col in square.T)


class TestCubeSearch:
    """Test Latin cube search."""

    @pytest.mark.parametrize("case", ["unoriented", "oriented"])
    def test_trivial_carrier(self, case):
        result = search_cubes(1, case)
        assert len(result.hits) == 1
        assert result.complete

    @pytest.mark.parametrize("case", ["unoriented", "oriented"])
    def test_two_elements(self, case):
        """Both affine cubes ``a+b+c`` and ``a+b+c+1`` over Z/2 survive."""
        result = search_cubes(2, case)
        assert len(result.hits) == 2
        assert result.explored == 2
        assert result.hits[0].algebras[0].name == "cube2-0"
        a, b, c = np.indices((2, 2, 2))
        for shift, hit in enumerate(result.hits):
            algebra = hit.algebras[0]
            assert np.array_equal(algebra.op1, (a + b + c + shift) % 2)
            assert np.array_equal(algebra.op2, algebra.op1)

    @pytest.mark.parametrize("case", ["unoriented", "oriented"])
    def test_one_element_cube_is_constant(self, case):
        algebra = search_cubes(1, case).hits[0].algebras[0]
        assert algebra.op1.shape == (1, 1, 1)
        assert algebra.op1[0, 0, 0] == 0

    def test_budget_marks_incomplete(self):
        result = search_cubes(3, budget=5)
        assert not result.complete
        assert result.explored == 5

    def test_strict_budget(self):
        with pytest.raises(SearchBudgetExceeded):
            search_cubes(3, budget=5, strict=True)

    def test_jobs_do_not_change_result(self):
        serial = search_cubes(3, budget=10)
        parallel = search_cubes(3, budget=10, jobs=2)
        assert parallel.explored == serial.explored
        assert len(parallel.hits) == len(serial.hits)
        for a, b in zip(serial.hits, parallel.hits):
            assert a.algebras[0].same_tables(b.algebras[0])

    def test_bad_size(self):
        with pytest.raises(AlgebraError, match="at least 1"):
            search_cubes(0)

    @pytest.mark.slow
    def test_refinds_oriented_example(self):
        result = search_cubes(4, "oriented")
        assert result.complete
        target = std_oriented()
        assert any(hit.algebras[0].same_tables(target) for hit in result.hits)
