"""Tests for presentations read off diagrams."""

import pytest

from terna.config.settings import bundled_fixtures_dir
from terna.core.builtin import get_algebra, get_group
from terna.core.coloring import count_colorings
from terna.core.diagram import parse_pd, shade
from terna.core.fileformat import load_diagram
from terna.core.presentation import (
    abelianization,
    count_solutions,
    emit_arc_presentation,
    emit_dehn,
    emit_ternary,
    relation_matrix,
)
from terna.exceptions import ColoringError, KindMismatchError


def fixture(name):
    return load_diagram(bundled_fixtures_dir() / name)


class TestTernary:
    """Test region presentations."""

    def test_trefoil_text(self):
        p = emit_ternary(shade(fixture("trefoil.pd")))
        lines = p.text().splitlines()
        assert lines[0] == "gen r0 r1 r2 r3 r4"
        assert len(lines) == 4
        assert all(line.startswith("rel r") for line in lines[1:])

    def test_oriented_names(self):
        p = emit_ternary(shade(fixture("trefoil.pd")), "oriented")
        assert p.style == "ternary-oriented"
        assert all("C(" in r or "S(" in r for r in p.to_dict()["relations"])

    def test_solutions_match_colorings(self):
        sd = shade(fixture("trefoil.pd"))
        a = get_algebra("core:c3")
        assert count_solutions(emit_ternary(sd), a) == count_colorings(sd, a) == 27

    @pytest.mark.parametrize("head", [0, 1, 2, 3])
    def test_any_head_gives_the_same_count(self, head):
        sd = shade(fixture("figure8.pd"))
        a = get_algebra("std-oriented-4")
        p = emit_ternary(sd, "oriented", head)
        assert count_solutions(p, a) == count_colorings(sd, a)

    def test_unknown_case(self):
        with pytest.raises(KindMismatchError):
            emit_ternary(shade(fixture("trefoil.pd")), "twisted")

    def test_needs_ternary_structure(self):
        p = emit_ternary(shade(fixture("trefoil.pd")))
        with pytest.raises(ColoringError, match="ternary algebras"):
            count_solutions(p, get_group("c3"))

    def test_no_relation_matrix(self):
        with pytest.raises(ColoringError, match="group presentations"):
            relation_matrix(emit_ternary(shade(fixture("trefoil.pd"))))


class TestDehn:
    """Test the region group presentation."""

    @pytest.mark.parametrize("name", ["trefoil.pd", "figure8.pd"])
    def test_solutions_times_order(self, name):
        sd = shade(fixture(name))
        g = get_group("s3")
        solutions = count_solutions(emit_dehn(sd), g)
        assert solutions * g.n == count_colorings(sd, get_algebra("g1:s3"))

    def test_outer_face_relation(self):
        sd = shade(fixture("trefoil.pd"))
        p = emit_dehn(sd)
        assert p.relation_text(p.relations[-1]) == f"r{sd.outer_face} = 1"

    def test_abelianization(self):
        p = emit_dehn(shade(fixture("trefoil.pd")))
        assert str(abelianization(p)) == "Z"


class TestArcPresentations:
    """Test Wirtinger and core presentations."""

    @pytest.mark.parametrize("name,expected", [
        ("trefoil.pd", "Z"),
        ("figure8.pd", "Z"),
        ("hopf.pd", "Z + Z"),
    ])
    def test_wirtinger_abelianization(self, name, expected):
        p = emit_arc_presentation(fixture(name))
        assert str(abelianization(p)) == expected

    @pytest.mark.parametrize("name,expected", [
        ("trefoil.pd", "Z + Z/3"),
        ("figure8.pd", "Z + Z/5"),
    ])
    def test_core_abelianization(self, name, expected):
        p = emit_arc_presentation(fixture(name), "core")
        assert str(abelianization(p)) == expected

    def test_core_solutions(self):
        p = emit_arc_presentation(fixture("trefoil.pd"), "core")
        assert count_solutions(p, get_group("c3")) == 9

    def test_wirtinger_text(self):
        p = emit_arc_presentation(fixture("trefoil.pd"))
        lines = p.text().splitlines()
        assert lines[0] == "gen x0 x1 x2"
        assert len(lines) == 4

    def test_wirtinger_needs_orientation(self):
        with pytest.raises(ColoringError, match="oriented"):
            emit_arc_presentation(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"))

    def test_group_presentation_needs_group(self):
        p = emit_arc_presentation(fixture("trefoil.pd"), "core")
        with pytest.raises(ColoringError, match="over groups"):
            count_solutions(p, get_algebra("core:c3"))
