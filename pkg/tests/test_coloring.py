"""Tests for region colorings."""

import pytest

from terna.config.settings import bundled_fixtures_dir
from terna.core.algebra import FiniteTernaryAlgebra
from terna.core.arcs import count_arc_colorings
from terna.core.builtin import get_algebra, get_group, std_unoriented
from terna.core.coloring import (
    build_constraints,
    count_colorings,
    enumerate_colorings,
    head_inputs,
    oracle_colorings,
    oracle_count,
    verify_coloring,
)
from terna.core.diagram import parse_pd, shade
from terna.core.fileformat import load_diagram
from terna.exceptions import AxiomFailure, ColoringError, KindMismatchError

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"

MOVED = ["trefoil-r1.yaml", "trefoil-r2.yaml", "trefoil-r3a.yaml", "trefoil-r3b.yaml"]


def fixture(name):
    return load_diagram(bundled_fixtures_dir() / name)


def perturbed():
    a = std_unoriented()
    w = a.op1.copy()
    w[0, 0, 3], w[1, 0, 3] = w[1, 0, 3], w[0, 0, 3]
    return FiniteTernaryAlgebra(w, a.op2, "unoriented", "perturbed")


class TestHeadRelations:
    """Test the per-crossing relation layout."""

    def test_marker_reads_counterclockwise(self):
        assert head_inputs(1, (1, 3)) == (2, 3, 0)
        assert head_inputs(3, (1, 3)) == (0, 1, 2)

    def test_non_marker_reads_clockwise(self):
        assert head_inputs(0, (1, 3)) == (3, 2, 1)
        assert head_inputs(2, (1, 3)) == (1, 0, 3)

    def test_unoriented_ops_follow_shading(self):
        sd = shade(parse_pd(TREFOIL))
        for con in build_constraints(sd):
            for q in range(4):
                assert con.ops[q] == (0 if sd.is_white(con.faces[q]) else 1)

    def test_oriented_ops_follow_sign(self):
        sd = shade(fixture("trefoil.pd"))
        for con in build_constraints(sd, "oriented"):
            # every trefoil crossing is positive, so markers take op1
            assert con.ops == (1, 0, 1, 0)

    def test_oriented_needs_signs(self):
        with pytest.raises(KindMismatchError):
            build_constraints(shade(parse_pd(TREFOIL)), "oriented")

    def test_relation_text(self):
        con = build_constraints(shade(parse_pd(TREFOIL)))[0]
        assert con.relation(1, ("W", "B")).startswith(f"r{con.faces[1]} = ")


class TestCounts:
    """Test coloring counts."""

    @pytest.mark.parametrize("algebra,expected", [
        ("std-unoriented-4", 16),
        ("core:c3", 9),
        ("g1:s3", 36),
    ])
    def test_unknot_counts_square(self, algebra, expected):
        sd = shade(fixture("unknot.pd"))
        assert count_colorings(sd, get_algebra(algebra)) == expected

    def test_kink(self):
        assert count_colorings(shade(fixture("kink.pd")), std_unoriented()) == 16

    def test_trefoil_core_c3(self):
        assert count_colorings(shade(fixture("trefoil.pd")), get_algebra("core:c3")) == 27

    @pytest.mark.parametrize("name,algebra", [
        ("trefoil.pd", "std-unoriented-4"),
        ("trefoil.pd", "std-oriented-4"),
        ("figure8.pd", "std-unoriented-4"),
        ("figure8.pd", "std-oriented-4"),
        ("hopf.pd", "g2:c3"),
        ("trefoil.pd", "g8:s3"),
    ])
    def test_solver_matches_oracle(self, name, algebra):
        sd = shade(fixture(name))
        a = get_algebra(algebra)
        assert count_colorings(sd, a) == oracle_count(sd, a)

    def test_unoriented_algebra_on_oriented_diagram(self):
        oriented = count_colorings(shade(fixture("trefoil.pd")), std_unoriented())
        assert oriented == count_colorings(shade(parse_pd(TREFOIL)), std_unoriented())

    def test_oriented_algebra_needs_oriented_diagram(self):
        with pytest.raises(KindMismatchError):
            count_colorings(shade(parse_pd(TREFOIL)), get_algebra("std-oriented-4"))

    def test_jobs_do_not_change_count(self):
        sd = shade(fixture("figure8.pd"))
        a = get_algebra("g1:s3")
        assert count_colorings(sd, a, jobs=2) == count_colorings(sd, a)

    def test_failing_algebra_refused(self):
        with pytest.raises(AxiomFailure) as excinfo:
            count_colorings(shade(fixture("trefoil.pd")), perturbed())
        assert not excinfo.value.report.passed

    def test_unchecked_counts_anyway(self):
        sd = shade(fixture("trefoil.pd"))
        a = perturbed()
        assert count_colorings(sd, a, checked=False) == oracle_count(sd, a)


class TestInvariance:
    """Test that counts survive Reidemeister moves."""

    @pytest.mark.parametrize("name", MOVED)
    def test_core_c3(self, name):
        assert count_colorings(shade(fixture(name)), get_algebra("core:c3")) == 27

    @pytest.mark.parametrize("name", MOVED)
    @pytest.mark.parametrize("algebra", ["g2:s3", "std-oriented-4"])
    def test_matches_base(self, name, algebra):
        a = get_algebra(algebra)
        base = count_colorings(shade(fixture("trefoil.pd")), a)
        assert count_colorings(shade(fixture(name)), a) == base

    @pytest.mark.parametrize("algebra", ["core:c3", "std-oriented-4"])
    def test_any_outer_face(self, algebra):
        d = fixture("figure8.pd")
        a = get_algebra(algebra)
        counts = {count_colorings(shade(d, outer_face=f), a) for f in range(len(d.faces))}
        assert len(counts) == 1

    def test_outer_face_acts_through_shading(self):
        """A black outer face is the same as exchanging the two operations."""
        d = fixture("figure8.pd")
        a = get_algebra("std-unoriented-4")
        base = shade(d)
        same = count_colorings(base, a, checked=False)
        other = count_colorings(base, a.swapped(), checked=False)
        for f in range(len(d.faces)):
            expected = same if base.is_white(f) else other
            assert count_colorings(shade(d, outer_face=f), a, checked=False) == expected


class TestEnumerateAndVerify:
    """Test listing and checking single colorings."""

    def test_enumerated_colorings_verify(self):
        sd = shade(fixture("trefoil.pd"))
        a = get_algebra("core:c3")
        report = enumerate_colorings(sd, a)
        assert report.count == len(report.colorings) == 27
        assert report.colorings == sorted(report.colorings)
        for coloring in report.colorings:
            assert verify_coloring(sd, a, coloring).ok

    def test_matches_oracle_listing(self):
        sd = shade(fixture("trefoil.pd"))
        a = get_algebra("std-oriented-4")
        listed = enumerate_colorings(sd, a).colorings
        assert listed == [tuple(int(v) for v in row) for row in oracle_colorings(sd, a)]

    def test_constant_coloring(self):
        sd = shade(fixture("trefoil.pd"))
        assert verify_coloring(sd, get_algebra("core:c3"), (0, 0, 0, 0, 0)).ok

    def test_violation_reported(self):
        sd = shade(fixture("trefoil.pd"))
        result = verify_coloring(sd, get_algebra("core:c3"), (0, 0, 0, 0, 1))
        assert not result.ok
        assert result.violation is not None
        assert result.violation.expected != result.violation.actual

    def test_wrong_length(self):
        sd = shade(fixture("trefoil.pd"))
        with pytest.raises(ColoringError, match="5 faces"):
            verify_coloring(sd, get_algebra("core:c3"), (0, 0, 0))

    def test_element_out_of_range(self):
        sd = shade(fixture("trefoil.pd"))
        with pytest.raises(ColoringError, match="outside"):
            verify_coloring(sd, get_algebra("core:c3"), (0, 0, 0, 0, 3))

    def test_oracle_limit(self):
        sd = shade(fixture("trefoil-r2.yaml"))
        with pytest.raises(ColoringError, match="oracle limit"):
            oracle_count(sd, get_algebra("g1:q8"))


class TestCrossingDeterminacy:
    """Any three quadrant colors of a crossing fix the fourth."""

    @pytest.mark.parametrize("algebra", ["g1:s3", "g8:s3", "std-unoriented-4"])
    def test_three_fix_the_fourth(self, algebra):
        sd = shade(fixture("trefoil.pd"))
        colorings = enumerate_colorings(sd, get_algebra(algebra)).colorings
        for con in build_constraints(sd):
            for q in range(4):
                others = [con.faces[k] for k in range(4) if k != q]
                seen = {}
                for coloring in colorings:
                    key = tuple(coloring[f] for f in others)
                    value = coloring[con.faces[q]]
                    assert seen.setdefault(key, value) == value


class TestScalingLaw:
    """Region counts are the group order times the arc counts."""

    @pytest.mark.parametrize("name,group,theory,count", [
        ("trefoil.pd", "c3", "wirtinger", 9),
        ("trefoil.pd", "c3", "core", 27),
        ("trefoil.pd", "s3", "wirtinger", 72),
        ("trefoil.pd", "s3", "core", 108),
        ("figure8.pd", "c5", "core", 125),
    ])
    def test_counts(self, name, group, theory, count):
        g = get_group(group)
        sd = shade(fixture(name))
        pair = "knot" if theory == "wirtinger" else "core"
        regions = count_colorings(sd, get_algebra(f"{pair}:{group}"))
        assert regions == count
        assert regions == g.n * count_arc_colorings(sd.diagram, g, theory)
