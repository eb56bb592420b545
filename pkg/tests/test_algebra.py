"""Tests for ternary algebras and their axiom suites."""

import numpy as np
import pytest

from terna.config.settings import bundled_fixtures_dir
from terna.core.algebra import (
    GROUP_WORDS,
    FiniteTernaryAlgebra,
    axioms_hold,
    check_axioms,
    check_oriented_axioms,
    check_unoriented_axioms,
    constant_algebra,
    derive_op2,
    from_group_word,
    from_loop_word,
    latin_cube_check,
    witness_violates,
)
from terna.core.builtin import get_algebra, get_group, get_loop, std_oriented, std_unoriented
from terna.core.fileformat import load_algebra
from terna.exceptions import AlgebraError, KindMismatchError, VarietyError


def perturbed():
    a = std_unoriented()
    w = a.op1.copy()
    w[0, 0, 3], w[1, 0, 3] = w[1, 0, 3], w[0, 0, 3]
    return FiniteTernaryAlgebra(w, a.op2, "unoriented", "perturbed")


class TestFixedTables:
    """Test the 4-element example algebras."""

    def test_unoriented_passes(self):
        report = check_unoriented_axioms(std_unoriented())
        assert report.passed
        assert report.summary() == "8/8 axioms pass"

    def test_oriented_passes(self):
        report = check_oriented_axioms(std_oriented())
        assert report.passed
        assert report.summary() == "6/6 axioms pass"

    def test_oriented_entry(self):
        a = std_oriented()
        # C(2,1,4) = 1 and S(2,1,4) = 3 with 1-based elements
        assert a.op1[1, 0, 3] == 0
        assert a.op2[1, 0, 3] == 2

    @pytest.mark.parametrize("name", ["std-unoriented-4", "std-oriented-4"])
    def test_fixture_files_match(self, name):
        loaded = load_algebra(bundled_fixtures_dir() / f"{name}.yaml")
        assert loaded.same_tables(get_algebra(name))
        assert loaded.kind == get_algebra(name).kind

    def test_latin(self):
        for a in (std_unoriented(), std_oriented()):
            op1 = a.op_names[0]
            assert latin_cube_check(a).slices[op1] == (True, True, True)

    def test_second_operation_is_derived(self):
        for a in (std_unoriented(), std_oriented()):
            assert np.array_equal(derive_op2(a.op1), a.op2)


class TestAxiomFailures:
    """Test reporting of failing axioms."""

    def test_perturbed_table_fails(self):
        report = check_axioms(perturbed())
        assert not report.passed
        assert 3 in [r.number for r in report.failures]

    def test_witnesses_violate(self):
        a = perturbed()
        for failure in check_axioms(a).failures:
            assert witness_violates(a, failure.number, failure.witness)

    def test_axioms_hold_agrees(self):
        assert not axioms_hold(perturbed())
        assert axioms_hold(std_unoriented())

    def test_constant_algebra(self):
        a = constant_algebra(2)
        assert not check_axioms(a).passed
        only = check_axioms(a, axioms="distributivity")
        assert [r.number for r in only.results] == [5, 6, 7, 8]
        assert only.passed
        assert axioms_hold(a, "distributivity")

    def test_kind_mismatch(self):
        with pytest.raises(KindMismatchError):
            check_oriented_axioms(std_unoriented())

    def test_unknown_axiom_set(self):
        with pytest.raises(AlgebraError, match="unknown axiom set"):
            check_axioms(std_unoriented(), axioms="some")


class TestValidation:
    """Test algebra construction checks."""

    def test_size_mismatch(self):
        with pytest.raises(AlgebraError, match="different sizes"):
            FiniteTernaryAlgebra(np.zeros((2, 2, 2)), np.zeros((3, 3, 3)))

    def test_not_a_cube(self):
        with pytest.raises(AlgebraError, match="cube"):
            FiniteTernaryAlgebra(np.zeros((2, 2)), np.zeros((2, 2)))

    def test_entries_out_of_range(self):
        cube = np.full((2, 2, 2), 2)
        with pytest.raises(AlgebraError, match="outside"):
            FiniteTernaryAlgebra(cube, cube)

    def test_unknown_kind(self):
        cube = np.zeros((1, 1, 1))
        with pytest.raises(AlgebraError, match="kind"):
            FiniteTernaryAlgebra(cube, cube, "twisted")

    def test_derive_needs_third_argument_bijection(self):
        with pytest.raises(AlgebraError, match="bijection"):
            derive_op2(np.zeros((2, 2, 2), dtype=int))

    def test_swapped(self):
        a = std_oriented()
        s = a.swapped()
        assert np.array_equal(s.op1, a.op2)
        assert np.array_equal(s.op2, a.op1)


class TestWordAlgebras:
    """Test algebras built from group and loop words."""

    @pytest.mark.parametrize("pair_id", list(GROUP_WORDS))
    @pytest.mark.parametrize("group", ["c2", "c3", "c5", "c8", "s3", "d4", "q8"])
    def test_group_pairs_pass(self, pair_id, group):
        a = from_group_word(get_group(group), pair_id)
        assert check_unoriented_axioms(a).passed

    def test_group_pairs_are_latin(self):
        for pair_id in GROUP_WORDS:
            assert latin_cube_check(from_group_word(get_group("s3"), pair_id)).is_latin

    def test_group_word_needs_group(self):
        with pytest.raises(VarietyError, match="not a group"):
            from_group_word(get_loop("ms3"), "g1")

    def test_unknown_pair(self):
        with pytest.raises(AlgebraError, match="g1..g9"):
            from_group_word(get_group("c3"), "g10")

    @pytest.mark.parametrize("formula", ["m1", "m2", "m3", "m4"])
    def test_moufang_formulas_on_doubled_loop(self, formula):
        a = from_loop_word(get_loop("ms3"), formula, "oriented")
        assert check_oriented_axioms(a).passed

    def test_unknown_formula(self):
        with pytest.raises(AlgebraError, match="unknown loop formula"):
            from_loop_word(get_loop("ms3"), "m9")

    def test_aliases(self):
        assert get_algebra("core:c3").same_tables(get_algebra("g8:c3"))
        assert get_algebra("knot:s3").same_tables(get_algebra("g1:s3"))
        assert get_algebra("core:c3").name == "core:c3"

    def test_default_kinds(self):
        assert get_algebra("g2:s3").kind == "unoriented"
        assert get_algebra("m1:ms3").kind == "oriented"
        assert get_algebra("g2:s3", "oriented").kind == "oriented"

    def test_unknown_algebra(self):
        with pytest.raises(AlgebraError, match="unknown"):
            get_algebra("nothing")
        with pytest.raises(AlgebraError, match="unknown operator formula"):
            get_algebra("z1:s3")


class TestLoopFormulas:
    """Test the loop word pairs on the loops they are listed for."""

    @pytest.mark.parametrize("formula", ["b1", "b2"])
    @pytest.mark.parametrize("loop", ["s3", "ms3"])
    def test_bol_formulas_oriented(self, formula, loop):
        a = from_loop_word(get_loop(loop), formula, "oriented")
        assert check_axioms(a).passed

    @pytest.mark.parametrize("formula", ["b1", "b2", "b3", "b4"])
    @pytest.mark.parametrize("loop", ["s3", "ms3"])
    def test_bol_formulas_unoriented(self, formula, loop):
        a = from_loop_word(get_loop(loop), formula, "unoriented")
        assert check_axioms(a).passed

    @pytest.mark.parametrize("formula", ["m5", "m6"])
    def test_two_sided_moufang_formulas_unoriented(self, formula):
        a = from_loop_word(get_loop("ms3"), formula, "unoriented")
        assert check_unoriented_axioms(a).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("formula", [f"e{k}" for k in range(1, 19)])
    def test_extra_formulas_unoriented(self, formula):
        a = from_loop_word(get_loop("md4"), formula, "unoriented")
        assert check_unoriented_axioms(a).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("formula", [f"e{k}" for k in range(1, 13)])
    def test_extra_formulas_oriented(self, formula):
        a = from_loop_word(get_loop("md4"), formula, "oriented")
        assert check_oriented_axioms(a).passed

    def test_extra_formula_needs_extra_loop(self):
        with pytest.raises(VarietyError, match="extra"):
            from_loop_word(get_loop("ms3"), "e1")


class TestRoleSwap:
    """Exchanging the two operations keeps an unoriented algebra valid."""

    @pytest.mark.parametrize("name", ["std-unoriented-4", "g7:s3", "g9:q8", "m5:ms3"])
    def test_swapped_passes(self, name):
        a = get_algebra(name, "unoriented")
        assert check_unoriented_axioms(a).passed
        assert check_unoriented_axioms(a.swapped()).passed

    def test_swapped_failure_stays_failure(self):
        assert not check_unoriented_axioms(perturbed().swapped()).passed

    def test_bol_pairs_are_swapped_moufang_pairs(self):
        """On a Moufang loop b3 and b4 are m6 and m5 with the roles exchanged."""
        loop = get_loop("ms3")
        b3 = from_loop_word(loop, "b3", "unoriented")
        b4 = from_loop_word(loop, "b4", "unoriented")
        assert b3.same_tables(from_loop_word(loop, "m6", "unoriented").swapped())
        assert b4.same_tables(from_loop_word(loop, "m5", "unoriented").swapped())


class TestMalcev:
    """The knot operator ``x y^-1 z`` satisfies the Mal'cev identities."""

    @pytest.mark.parametrize("group", ["c5", "s3", "q8"])
    def test_identities(self, group):
        t = from_group_word(get_group(group), "g1").op1
        x, y = np.indices(t.shape[:2])
        assert np.array_equal(t[x, y, y], x)
        assert np.array_equal(t[y, y, x], x)

    def test_core_operator_is_not_malcev(self):
        t = from_group_word(get_group("s3"), "g8").op1
        x, y = np.indices(t.shape[:2])
        assert not np.array_equal(t[x, y, y], x)
