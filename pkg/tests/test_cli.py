"""
Tests for the command line: argument handling, reports and exit codes.
"""

import io
import json

import pytest

from cli import build_parser, handle_error
from cli.commands import attach_rational_values
from config import settings
from errors import NotComplete
from main import main


P2 = {"lattice_rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [0, 2]]}
T3 = {"lattice_rank": 2, "rays": [[1, 0], [0, 1], [-3, -1]], "max_cones": [[0, 1], [1, 2], [0, 2]]}
QUADRANT = {"lattice_rank": 2, "rays": [[1, 0], [0, 1]], "max_cones": [[0, 1]]}
SQUARE = {"vertices": [[0, 0], [2, 0], [2, 2], [0, 2]]}
OCTAHEDRON = {"vertices": [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]]}


@pytest.fixture
def write_json(tmp_path):
    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload) if not isinstance(payload, str) else payload)
        return str(path)
    return write


def _report(capsys):
    return json.loads(capsys.readouterr().out)


class TestParser:
    def test_common_flags_follow_the_command(self):
        args = build_parser().parse_args(["fan", "info", "x.json", "--format", "text", "--threads", "2"])
        assert args.output_format == "text"
        assert args.threads == 2

    def test_defaults(self):
        args = build_parser().parse_args(["polytope", "weighted", "p.json"])
        assert args.mode == "standard"
        assert args.output_format == "json"

    def test_negative_fraction(self):
        args = build_parser().parse_args(["fan", "class", "f.json", "--kind", "todd", "--y=-1/2"])
        assert str(args.y) == "-1/2"

    def test_negative_fraction_as_separate_token(self):
        argv = attach_rational_values(["fan", "class", "f.json", "--y", "-1/2", "--kind", "todd"])
        assert argv[3] == "--y=-1/2"
        args = build_parser().parse_args(argv)
        assert str(args.y) == "-1/2"
        assert args.kind == "todd"

    def test_logging_flags(self):
        args = build_parser().parse_args(["fan", "info", "x.json", "--log-file", "trace.log", "--color"])
        assert args.log_file == "trace.log"
        assert args.color is True
        args = build_parser().parse_args(["fan", "info", "x.json"])
        assert args.log_file is None
        assert args.color is False

    def test_usage_error_exits_one(self, capsys):
        assert main(["fan", "class", "f.json"]) == 1

    def test_version(self, capsys):
        assert main(["--version"]) == 0
        assert "toric-classes" in capsys.readouterr().out


class TestFanCommands:
    def test_info(self, write_json, capsys):
        assert main(["fan", "info", write_json("t3.json", T3)]) == 0
        report = _report(capsys)
        assert report["smooth"] is False
        assert report["complete"] is True

    def test_todd_class(self, write_json, capsys):
        assert main(["fan", "class", write_json("p2.json", P2), "--kind", "todd"]) == 0
        report = _report(capsys)
        assert report["degree"] == "1"
        assert report["lattice_rank"] == 2

    def test_normalized_hirzebruch(self, write_json, capsys):
        assert main(["fan", "class", write_json("p2.json", P2), "--kind", "hirzebruch", "--normalized"]) == 0
        assert _report(capsys)["degree"] == "1 - y + y^2"

    def test_l_class(self, write_json, capsys):
        path = write_json("p2.json", P2)
        assert main(["fan", "class", path, "--kind", "hirzebruch", "--normalized", "--y", "1"]) == 0
        report = _report(capsys)
        assert report["label"] == "T-hat_1 (L-class under projectivity)"
        assert report["degree"] == "1"

    def test_negative_fraction_specialization(self, write_json, capsys):
        path = write_json("p2.json", P2)
        assert main(["fan", "class", path, "--kind", "hirzebruch", "--normalized", "--y", "-1/2"]) == 0
        assert _report(capsys)["degree"] == "7/4"

    def test_log_file_and_color(self, write_json, tmp_path, capsys):
        trace = tmp_path / "trace.log"
        assert main(["fan", "info", write_json("p2.json", P2), "--log-file", str(trace), "--color"]) == 0
        assert settings.log_file == str(trace)
        assert settings.enable_color is True
        assert "Running fan info" in trace.read_text()

    def test_refused_specialization(self, write_json, capsys):
        path = write_json("p2.json", P2)
        assert main(["fan", "class", path, "--kind", "hirzebruch", "--y=-1"]) == 1

    def test_subset(self, write_json, capsys):
        fan = write_json("p2.json", P2)
        subset = write_json("line.json", {"cones": [[0], [0, 1], [0, 2]]})
        assert main(["fan", "class", fan, "--kind", "chern", "--subcomplex", subset]) == 0
        assert _report(capsys)["degree"] == "2"

    def test_verify(self, write_json, capsys):
        assert main(["fan", "verify", write_json("t3.json", T3)]) == 0
        assert _report(capsys)["all_passed"] is True

    def test_verify_incomplete(self, write_json):
        assert main(["fan", "verify", write_json("q.json", QUADRANT)]) == 1

    def test_text_format(self, write_json, capsys):
        assert main(["fan", "info", write_json("p2.json", P2), "--format", "text"]) == 0
        assert "complete" in capsys.readouterr().out


class TestInputErrors:
    def test_malformed_json(self, write_json):
        assert main(["fan", "info", write_json("bad.json", "{not json")]) == 1

    def test_schema_violation(self, write_json):
        payload = {"lattice_rank": 2, "rays": [[1, 0, 0]], "max_cones": [[0]]}
        assert main(["fan", "info", write_json("bad.json", payload)]) == 1

    def test_missing_file(self, tmp_path):
        assert main(["fan", "info", str(tmp_path / "absent.json")]) == 1

    def test_non_simplicial(self, write_json):
        payload = {"lattice_rank": 2, "rays": [[1, 0], [0, 1], [1, 1]], "max_cones": [[0, 1, 2]]}
        assert main(["fan", "info", write_json("ns.json", payload)]) == 3

    def test_not_simple(self, write_json):
        assert main(["polytope", "ehrhart", write_json("oct.json", OCTAHEDRON)]) == 3

    def test_error_report(self):
        stream = io.StringIO()
        code = handle_error(NotComplete("fan is not complete", {"operation": "degree"}), stream)
        report = json.loads(stream.getvalue())
        assert code == 1
        assert report["error"] == "NotComplete"
        assert report["exit_code"] == 1
        assert report["detail"] == {"operation": "degree"}


class TestPolytopeCommands:
    def test_facets(self, write_json, capsys):
        assert main(["polytope", "facets", write_json("sq.json", SQUARE)]) == 0
        assert _report(capsys)["simple"] is True

    def test_ehrhart(self, write_json, capsys, tmp_path):
        csv_path = tmp_path / "rows.csv"
        code = main(["polytope", "ehrhart", write_json("sq.json", SQUARE), "--max-dilate", "3",
                     "--csv", str(csv_path)])
        assert code == 0
        report = _report(capsys)
        assert report["coefficients"] == ["1", "4", "4"]
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "dilation,count,value,residual"
        assert lines[2] == "1,9,9,0"

    def test_ehrhart_of_boundary(self, write_json, capsys):
        square = write_json("sq.json", SQUARE)
        complex_ = write_json("bd.json", {"boundary": True})
        assert main(["polytope", "ehrhart", square, "--subcomplex", complex_]) == 0
        assert _report(capsys)["coefficients"] == ["0", "8", "0"]

    @pytest.mark.parametrize("flag", [[], ["--dual"], ["--half"]])
    def test_weighted(self, write_json, capsys, flag):
        assert main(["polytope", "weighted", write_json("sq.json", SQUARE)] + flag) == 0
        assert _report(capsys)["equal"] is True

    def test_weighted_modes_exclusive(self, write_json):
        assert main(["polytope", "weighted", write_json("sq.json", SQUARE), "--dual", "--half"]) == 1

    def test_pick(self, write_json, capsys):
        assert main(["polytope", "pick", write_json("sq.json", SQUARE)]) == 0
        report = _report(capsys)
        assert report["lattice_points"] == 9
        assert report["area"] == "4"

    def test_hirzpoly(self, write_json, capsys):
        assert main(["polytope", "hirzpoly", write_json("sq.json", SQUARE)]) == 0
        report = _report(capsys)
        assert report["equal"] is True and report["table_matches"] is True
