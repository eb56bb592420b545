"""Tests for diagram, algebra and Cayley table files."""

import numpy as np
import pytest
import yaml

from terna.config.settings import bundled_fixtures_dir
from terna.core.builtin import get_group, get_loop, std_oriented
from terna.core.fileformat import (
    algebra_from_dict,
    diagram_from_dict,
    dump_algebra,
    dump_cayley,
    dump_diagram,
    load_algebra,
    load_cayley,
    load_diagram,
    parse_pd_file,
)
from terna.exceptions import FileFormatError


class TestPDFiles:
    """Test annotated PD text."""

    def test_annotations(self):
        text = "# name: t\n# oriented: true\n# outer: 3\nX(1,4,2,5) X(3,6,4,1)\nX(5,2,6,3)\n"
        d = parse_pd_file(text)
        assert d.name == "t"
        assert d.oriented
        assert d.outer_face == 3
        assert len(d.crossings) == 3

    def test_comments_skipped(self):
        d = parse_pd_file("# a curl\nX(1,2,2,1)\n", name="kink")
        assert d.name == "kink"
        assert not d.oriented

    def test_circles(self):
        d = parse_pd_file("# circles: 2\n")
        assert d.components == 2

    def test_bad_flag(self):
        with pytest.raises(FileFormatError, match="true or false"):
            parse_pd_file("# oriented: maybe\nX(1,2,2,1)\n")

    def test_bad_pd_wrapped(self):
        with pytest.raises(FileFormatError, match="PD file"):
            parse_pd_file("X(1,2,3,4)\n")

    def test_dump_reads_back(self, tmp_path):
        d = load_diagram(bundled_fixtures_dir() / "trefoil.pd")
        path = tmp_path / "copy.pd"
        path.write_text(dump_diagram(d))
        again = load_diagram(path)
        assert again.crossings == d.crossings
        assert again.oriented
        assert again.name == "trefoil"

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileFormatError, match="file not found"):
            load_diagram(tmp_path / "nothing.pd")


class TestYamlDiagrams:
    """Test YAML diagrams and move scripts."""

    def test_crossings_list(self):
        d = diagram_from_dict({"crossings": [[1, 2, 2, 1]], "name": "kink"})
        assert d.crossings == ((1, 2, 2, 1),)

    def test_malformed_crossings(self):
        with pytest.raises(FileFormatError, match="crossings"):
            diagram_from_dict({"crossings": [["a", 2, 2, 1]]})

    def test_inline_base(self, tmp_path):
        path = tmp_path / "script.yaml"
        path.write_text(yaml.safe_dump({
            "name": "curl",
            "base": {"pd": "", "circles": 1},
            "moves": [{"kind": "R1", "site": "first"}],
        }))
        d = load_diagram(path)
        assert d.name == "curl"
        assert len(d.crossings) == 1

    def test_missing_base(self, tmp_path):
        path = tmp_path / "script.yaml"
        path.write_text(yaml.safe_dump({"moves": []}))
        with pytest.raises(FileFormatError, match="base"):
            load_diagram(path)

    def test_bad_move_kind(self, tmp_path):
        path = tmp_path / "script.yaml"
        path.write_text(yaml.safe_dump({"base": {"pd": "X(1,2,2,1)"}, "moves": [{"kind": "R5"}]}))
        with pytest.raises(FileFormatError, match="R1, R2 or R3"):
            load_diagram(path)

    def test_not_a_mapping(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(FileFormatError, match="mapping"):
            load_diagram(path)


class TestAlgebraFiles:
    """Test algebra YAML files."""

    def test_dump_reads_back(self, tmp_path):
        a = std_oriented()
        path = tmp_path / "a.yaml"
        path.write_text(dump_algebra(a))
        again = load_algebra(path)
        assert again.same_tables(a)
        assert again.kind == "oriented"
        assert again.name == "std-oriented-4"

    def test_nested_with_base(self):
        a = algebra_from_dict({
            "size": 1, "base": 1, "op1": [[[1]]], "op2": [[[1]]],
        })
        assert a.n == 1
        assert a.op1[0, 0, 0] == 0

    def test_wrong_shape(self):
        with pytest.raises(FileFormatError, match="shape"):
            algebra_from_dict({"size": 2, "op1": [[[0]]], "op2": [[[0]]]})

    def test_missing_operation(self):
        with pytest.raises(FileFormatError, match="missing 'op2'"):
            algebra_from_dict({"size": 1, "op1": [[[0]]]})

    def test_unknown_layout(self):
        with pytest.raises(FileFormatError, match="layout"):
            algebra_from_dict({"size": 1, "layout": "flat", "op1": [0], "op2": [0]})

    def test_invalid_kind_wrapped(self):
        with pytest.raises(FileFormatError, match="invalid algebra"):
            algebra_from_dict({"size": 1, "kind": "twisted", "op1": [[[0]]], "op2": [[[0]]]})


class TestCayleyFiles:
    """Test Cayley table YAML files."""

    def test_dump_reads_back(self, tmp_path):
        g = get_group("q8")
        path = tmp_path / "q8.yaml"
        path.write_text(dump_cayley(g))
        again = load_cayley(path)
        assert np.array_equal(again.mul, g.mul)
        assert again.labels == g.labels
        assert again.identity == g.identity

    def test_get_loop_reads_files(self, tmp_path):
        path = tmp_path / "c4.yaml"
        path.write_text(dump_cayley(get_group("c4")))
        assert get_loop(str(path)).n == 4

    def test_wrong_shape(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text(yaml.safe_dump({"size": 3, "mul": [[0, 1], [1, 0]]}))
        with pytest.raises(FileFormatError, match="shape"):
            load_cayley(path)

    def test_bad_identity(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text(yaml.safe_dump({"size": 2, "mul": [[0, 1], [1, 0]], "identity": 1}))
        with pytest.raises(FileFormatError, match="invalid Cayley table"):
            load_cayley(path)
