"""Tests for Cayley tables, loop identities and words."""

import numpy as np
import pytest

from terna.core.builtin import get_group, get_loop
from terna.core.magma import (
    IDENTITIES,
    VARIETIES,
    MagmaTable,
    cyclic,
    loop_property,
    m_construction,
)
from terna.core.words import BinOp, Inv, Var, parse_word, render, ternary_table, uses
from terna.exceptions import AlgebraError, VarietyError


class TestMagmaTable:
    """Test table validation and derived structure."""

    def test_cyclic(self):
        c5 = cyclic(5)
        assert c5.n == 5
        assert c5.identity == 0
        assert c5.is_group
        assert c5.is_commutative

    @pytest.mark.parametrize("name,order", [("s3", 6), ("d4", 8), ("q8", 8)])
    def test_nonabelian_groups(self, name, order):
        g = get_group(name)
        assert g.n == order
        assert g.is_group
        assert not g.is_commutative

    def test_identity_found(self):
        s3 = get_group("s3")
        assert s3.identity is not None
        assert s3.label(s3.identity) == "012"

    def test_divisions(self):
        g = get_group("s3")
        x, z = np.indices((g.n, g.n))
        assert np.array_equal(g.mul[x, g.ldiv], z)
        assert np.array_equal(g.mul[g.rdiv, z], x)

    def test_inverse(self):
        g = get_group("q8")
        e = np.full(g.n, g.identity)
        assert np.array_equal(g.mul[np.arange(g.n), g.inverse], e)
        assert g.inverse[1] == 1

    def test_not_square(self):
        with pytest.raises(AlgebraError, match="square"):
            MagmaTable(np.zeros((2, 3), dtype=int), name="bad")

    def test_entry_out_of_range(self):
        with pytest.raises(AlgebraError, match="outside"):
            MagmaTable(np.array([[0, 2], [1, 0]]), name="bad")

    def test_wrong_identity(self):
        with pytest.raises(AlgebraError, match="not an identity"):
            MagmaTable(np.array([[0, 1], [1, 0]]), identity=1)

    def test_not_a_quasigroup(self):
        t = MagmaTable(np.zeros((2, 2), dtype=int), name="zero")
        assert not t.is_quasigroup
        with pytest.raises(VarietyError):
            _ = t.inverse

    def test_unknown_group(self):
        with pytest.raises(AlgebraError, match="unknown group"):
            get_group("a5")


class TestLoops:
    """Test the doubled loops and identity checks."""

    @pytest.mark.parametrize("name,order", [("ms3", 12), ("md4", 16)])
    def test_doubled_loops_are_moufang(self, name, order):
        loop = get_loop(name)
        assert loop.n == order
        assert loop.is_loop
        assert not loop.is_associative
        assert loop_property(loop, "moufang").holds
        assert loop_property(loop, "left_bol").holds
        assert loop_property(loop, "inverse_property").holds

    def test_alias(self):
        assert np.array_equal(get_loop("M(S3,2)").mul, get_loop("ms3").mul)

    def test_doubled_abelian_group_is_a_group(self):
        assert m_construction(cyclic(3)).is_group

    def test_associativity_witness(self):
        loop = get_loop("ms3")
        result = loop_property(loop, "associative")
        assert not result.holds
        x, y, z = result.witness
        m = loop.mul
        assert m[m[x, y], z] != m[x, m[y, z]]

    def test_group_satisfies_every_identity_but_commutativity(self):
        g = get_group("s3")
        for name in IDENTITIES:
            assert loop_property(g, name).holds == (name != "commutative")

    def test_require_group(self):
        with pytest.raises(VarietyError, match="not a group"):
            get_loop("ms3").require_group()

    def test_require_variety(self):
        get_loop("md4").require_variety("moufang")
        with pytest.raises(VarietyError):
            MagmaTable(np.array([[0, 1], [1, 1]])).require_variety("moufang")

    def test_unknown_property(self):
        with pytest.raises(AlgebraError, match="unknown loop property"):
            loop_property(cyclic(2), "diassociative")


class TestWords:
    """Test word parsing and evaluation."""

    def test_juxtaposition(self):
        w = parse_word("ab^-1c")
        assert w == BinOp("*", BinOp("*", Var("a"), Inv(Var("b"))), Var("c"))

    def test_render_parses_back(self):
        for text in ("ab^-1c", "b*(c*a^-1)", "((a/b^-1)\\c)^-1", "a^-1b^-1c^-1"):
            w = parse_word(text)
            assert parse_word(render(w)) == w

    def test_uses(self):
        assert uses(parse_word("((a/b^-1)\\c)^-1")) == {"/", "\\", "^-1"}
        assert uses(parse_word("a*b")) == {"*"}

    @pytest.mark.parametrize("text,message", [
        ("", "empty"),
        ("a+b", "unexpected character"),
        ("(a*b", "ends unexpectedly"),
        ("a)", "trailing"),
        ("*a", "unexpected"),
    ])
    def test_parse_errors(self, text, message):
        with pytest.raises(AlgebraError, match=message):
            parse_word(text)

    def test_ternary_table(self):
        cube = ternary_table("ab^-1c", cyclic(3))
        a, b, c = np.indices((3, 3, 3))
        assert np.array_equal(cube, (a - b + c) % 3)

    def test_constant_word_broadcasts(self):
        assert ternary_table("a", cyclic(2)).shape == (2, 2, 2)

    def test_foreign_variable(self):
        with pytest.raises(AlgebraError, match="a, b, c"):
            ternary_table("ad", cyclic(2))


class TestVarieties:
    """Test variety membership of the bundled loops."""

    @pytest.mark.parametrize("name", ["s3", "ms3", "md4"])
    def test_left_bol_names_its_own_variety(self, name):
        loop = get_loop(name)
        loop.require_variety("left_bol")
        assert loop_property(loop, "left_bol").holds

    def test_left_bol_is_an_identity_not_a_variety(self):
        assert "left_bol" in IDENTITIES
        assert "left_bol" not in VARIETIES

    @pytest.mark.parametrize("prop", ["extra", "conjugacy_closed", "c_loop", "lc", "rc"])
    def test_md4_is_extra(self, prop):
        assert loop_property(get_loop("md4"), prop).holds

    def test_ms3_is_not_extra(self):
        loop = get_loop("ms3")
        result = loop_property(loop, "extra")
        assert not result.holds
        member = result.detail.split()[0]
        assert member in VARIETIES["extra"]
        assert result.witness == loop_property(loop, member).witness
        with pytest.raises(VarietyError):
            loop.require_variety("extra")

    @pytest.mark.parametrize("name", ["c4", "s3", "d4", "q8", "ms3", "md4"])
    def test_moufang_implies_flexible(self, name):
        loop = get_loop(name)
        assert loop_property(loop, "moufang").holds
        assert loop_property(loop, "flexible").holds

    def test_non_moufang_loop(self):
        # smallest nonassociative loop, order 5
        loop = MagmaTable(np.array([
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]), name="l5")
        assert loop.is_loop
        assert not loop_property(loop, "moufang").holds
        with pytest.raises(VarietyError):
            loop.require_variety("moufang")
