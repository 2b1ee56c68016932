import json
import os

import pytest

import app
from discriminant.horn import horn_pullback, normalize
from lattice.vectors import LatticeVector
from report import InputLoader, Report, build_request, render_fan, run_analyze
from report.analyze import Analysis, roman
from stratification import coord_set_equals, parse_v_notation
from utils.exceptions import (
    EXIT_INTERNAL,
    EXIT_NON_GENERIC,
    EXIT_VALIDATION,
    MalformedInput,
    NonGenericLinearization,
)

from conftest import DATA_DIR, load_golden

K3 = os.path.join(DATA_DIR, "k3_25.json")
SQUARE = os.path.join(DATA_DIR, "square.toml")
GEOMETRY = ["fan", "strata", "walls", "horn", "expected"]


@pytest.fixture
def k3_request():
    return InputLoader().load_request(K3, tasks=GEOMETRY)


@pytest.fixture
def k3_report(k3_request):
    return run_analyze(k3_request)


def run_cli(capsys, *argv):
    code = app.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestLoader:
    def test_json_fixture(self, k3_request):
        assert k3_request.weights[1] == [0, 0, 0, 1, 1, 1, 0, -3]
        assert k3_request.chamber_labels == ["III", "II", "I", "IV"]

    def test_toml_fixture(self):
        request = InputLoader().load_request(SQUARE)
        assert request.labels == ["a", "b", "c", "d"]
        assert request.tasks == []

    def test_unsupported_extension(self, tmp_path):
        path = tmp_path / "weights.yaml"
        path.write_text("weights: []")
        with pytest.raises(app.MalformedInput):
            InputLoader().load_raw(str(path))

    def test_schema_version(self, tmp_path):
        path = tmp_path / "old.json"
        path.write_text(json.dumps({"schema": 7, "weights": [[1, -1], [0, 0]]}))
        with pytest.raises(app.MalformedInput):
            InputLoader().load_raw(str(path))

    def test_bad_task_name(self):
        with pytest.raises(app.MalformedInput):
            build_request({"tasks": ["everything"]})


class TestAnalyze:
    def test_roman(self):
        assert [roman(n) for n in (1, 4, 9, 14)] == ["I", "IV", "IX", "XIV"]
        with pytest.raises(MalformedInput):
            roman(0)

    def test_default_labels(self):
        analysis = Analysis(build_request({"weights": [[1, -1, 1, -1], [1, -1, -1, 1]]}))
        assert analysis.chamber_labels == ["I", "II", "III", "IV"]
        assert analysis.wall_labels == ["wall0", "wall1", "wall2", "wall3"]

    def test_strata_match_table_one(self, k3_request, k3_report):
        w = Analysis(k3_request).w
        by_title = {record.title: record for record in k3_report.strata}
        for table in load_golden("table1.json")["tables"]:
            record = by_title[f"near {table['wall']}, chamber {table['chamber']}"]
            assert coord_set_equals(parse_v_notation(record.s_max, w), parse_v_notation(table["max"], w))
            assert [s.lam for s in record.strata] == [row["lambda"] for row in table["rows"]]
            for stratum, row in zip(record.strata, table["rows"]):
                assert coord_set_equals(parse_v_notation(stratum.z, w), parse_v_notation(row["z"], w))
                assert coord_set_equals(parse_v_notation(stratum.s, w), parse_v_notation(row["s"], w))

    def test_horn_section(self, k3_report):
        assert [h.rendered for h in k3_report.horn] == ["-4*(u+3v)/u", "-(u+3v)^3/v^3"]
        assert k3_report.horn[0].coefficient == "-4"

    def test_walls_and_expected(self, k3_report):
        walls = {w.label: w for w in k3_report.walls}
        assert walls["W_1"].verdict == "Balanced"
        assert (walls["W_1"].chamber_plus, walls["W_1"].chamber_minus) == ("IV", "I")
        assert walls["W_1"].k == 7
        assert walls["W_1"].window.g_window == [0, 1, 2]

        expected = {e.label: e for e in k3_report.expected}
        assert (expected["W_1"].discriminant_length, expected["W_1"].collection_length) == (3, 3)
        assert expected["W_1"].agree is True
        assert expected["W_3"].agree is True
        assert expected["W_2"].agree is None
        assert any(note.startswith("W_2:") for note in k3_report.warnings)

    def test_single_chamber(self, k3_request):
        request = k3_request.model_copy(update={"tasks": ["strata"], "chamber": 2})
        report = run_analyze(request)
        assert len(report.strata) == 1
        assert report.strata[0].chamber_label == "I"

    def test_empty_tasks_echo_only(self):
        report = run_analyze(build_request({"weights": [[1, -1, 1, -1], [1, -1, -1, 1]]}))
        assert report.fan is None and report.strata is None and report.kmut is None
        assert report.input.labels == ["x0", "x1", "x2", "x3"]

    def test_geometry_needs_weights(self):
        with pytest.raises(app.MalformedInput):
            run_analyze(build_request({"tasks": ["fan"]}))

    def test_kmut_without_weights(self):
        report = run_analyze(build_request({"tasks": ["kmut"], "kmut_checks": ["braid"], "corpus_size": 5, "seed": 1}))
        assert report.kmut[0].instances == 5
        assert report.kmut[0].failed == 0


class TestRender:
    def test_ascii(self, k3_request):
        analysis = Analysis(k3_request)
        text = render_fan(analysis.fan, analysis.chamber_labels, analysis.wall_labels, "ascii")
        assert "3: W_1 along (0,-1)" in text
        assert "1: W_3 along (1,3)" in text
        assert "I: cone(-1,0)(0,-1)" in text
        assert text == render_fan(analysis.fan, analysis.chamber_labels, analysis.wall_labels, "ascii")

    def test_svg_is_reproducible(self, k3_request):
        analysis = Analysis(k3_request)
        svg = render_fan(analysis.fan, analysis.chamber_labels, analysis.wall_labels, "svg")
        assert svg.startswith("<?xml")
        assert "</svg>" in svg
        assert "W_1" in svg and "wall0" in svg
        assert svg == render_fan(analysis.fan, analysis.chamber_labels, analysis.wall_labels, "svg")

    def test_square_svg(self):
        analysis = Analysis(InputLoader().load_request(SQUARE))
        svg = render_fan(analysis.fan, analysis.chamber_labels, analysis.wall_labels, "svg")
        for label in ("wall0", "wall1", "wall2", "wall3", "III"):
            assert label in svg


class TestCli:
    def test_analyze_is_byte_stable(self, capsys):
        argv = ["analyze", "--input", K3, "--tasks", ",".join(GEOMETRY)]
        code, first, _ = run_cli(capsys, *argv)
        assert code == 0
        _, second, _ = run_cli(capsys, *argv)
        assert first == second

    def test_report_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--input", K3, "--tasks", ",".join(GEOMETRY))
        assert code == 0
        data = json.loads(out)
        assert data["schema_version"] == 1
        assert "lambda" in data["strata"][0]["strata"][0]
        report = Report.model_validate(data)
        assert app.report_json(report) == out

    def test_horn_subcommand(self, capsys):
        code, out, _ = run_cli(capsys, "horn", "--input", K3, "--lambda", "0", "1")
        assert code == 0
        assert json.loads(out)["horn"][0]["rendered"] == "-(u+3v)^3/v^3"

    def test_horn_negative_cocharacter(self, capsys, k3_fan):
        code, out, _ = run_cli(capsys, "horn", "--input", K3, "--lambda", "-1", "0")
        assert code == 0
        record = json.loads(out)["horn"][0]
        assert record["lambda"] == [-1, 0]
        expected = normalize(k3_fan, horn_pullback(k3_fan, LatticeVector(-1, 0))).render()
        assert record["rendered"] == expected

    def test_bad_argument_is_validation_error(self, capsys):
        code, out, err = run_cli(capsys, "wall", "--input", K3, "--index", "x")
        assert code == EXIT_VALIDATION
        assert out == ""
        assert "MalformedInput" in err

    def test_missing_required_option(self, capsys):
        code, _, err = run_cli(capsys, "horn", "--input", K3)
        assert code == EXIT_VALIDATION
        assert "MalformedInput" in err and "--lambda" in err

    def test_unknown_subcommand(self, capsys):
        code, _, err = run_cli(capsys, "flop")
        assert code == EXIT_VALIDATION
        assert "MalformedInput" in err

    def test_text_format(self, capsys):
        code, out, _ = run_cli(capsys, "strata", "--input", K3, "--near-wall", "3", "--format", "text")
        assert code == 0
        assert "near W_1, chamber IV" in out
        assert "lambda" in out and "eta" in out

    def test_render_subcommand(self, capsys):
        code, out, _ = run_cli(capsys, "render", "--input", SQUARE, "--format", "svg")
        assert code == 0
        assert out.startswith("<?xml")

    def test_kmut_subcommand(self, capsys):
        code, out, _ = run_cli(capsys, "kmut", "--verify", "311", "--corpus", "12", "--seed", "4")
        assert code == 0
        record = json.loads(out)["kmut"][0]
        assert (record["check"], record["instances"], record["failed"]) == ("311", 12, 0)

    def test_kmut_window_shift(self, capsys):
        code, out, _ = run_cli(capsys, "kmut", "--verify", "shift", "--corpus", "10", "--seed", "2")
        assert code == 0
        record = json.loads(out)["kmut"][0]
        assert (record["check"], record["instances"], record["failed"]) == ("shift", 10, 0)

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "fan.json"
        code, out, _ = run_cli(capsys, "fan", "--input", K3, "--output", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["fan"]["walls"][3]["label"] == "W_1"

    def test_not_calabi_yau(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"schema": 1, "weights": [[1, 1], [1, 1]]}))
        code, out, err = run_cli(capsys, "fan", "--input", str(path))
        assert code == EXIT_VALIDATION
        assert out == ""
        assert "NotCalabiYau" in err

    def test_wall_out_of_range(self, capsys):
        code, _, err = run_cli(capsys, "wall", "--input", K3, "--index", "9")
        assert code == EXIT_VALIDATION
        assert "IndexOutOfRange" in err

    def test_non_generic_exit_code(self, capsys, monkeypatch):
        def boom(request):
            raise NonGenericLinearization("tie between candidates")

        monkeypatch.setattr(app, "run_analyze", boom)
        code, out, err = run_cli(capsys, "fan", "--input", K3)
        assert code == EXIT_NON_GENERIC
        assert out == ""
        assert "NonGenericLinearization" in err

    def test_internal_error_exit_code(self, capsys, monkeypatch, tmp_path):
        def boom(request):
            raise RuntimeError("assertion failed")

        target = tmp_path / "never.json"
        monkeypatch.setattr(app, "run_analyze", boom)
        code, _, err = run_cli(capsys, "fan", "--input", K3, "--output", str(target))
        assert code == EXIT_INTERNAL
        assert not target.exists()
        assert "RuntimeError" in err
