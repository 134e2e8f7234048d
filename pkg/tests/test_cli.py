import json
from fractions import Fraction
from pathlib import Path

import pytest

from ginshape.cli import main
from ginshape.report import fraction_from_json, polytope_from_json
from ginshape.staircase import limiting_shape

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "docs" / "report_schema.json"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def validate_against_schema(payload):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(SCHEMA_PATH.read_text())
    jsonschema.validate(payload, schema)


def test_analyze_json_l3_m6(capsys):
    code, out, _ = run(capsys, "analyze", "--l", "3", "--m", "6", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["schema_version"] == 1
    assert report["alpha"] == 10
    assert report["total_generators"] == 11
    assert report["cwl_certified"] is True
    assert report["counts"] == {"10": 1, "11": 3, "12": 4, "14": 1, "16": 1, "18": 1}
    assert report["scaled_matches_limiting"] is True
    assert report["staircase"]["alpha"] == 10
    validate_against_schema(report)


def test_analyze_json_m5_certifies_numerically(capsys):
    # 5 is not a multiple of l(l-1) = 6, yet the certificate alpha == total - 1
    # holds (alpha 9, 10 generators; the oracle suite pins the same counts),
    # so the staircase block is emitted
    code, out, _ = run(capsys, "analyze", "--l", "3", "--m", "5", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["m_multiple_of_l_times_l_minus_1"] is False
    assert report["alpha"] == 9
    assert report["total_generators"] == 10
    assert report["cwl_certified"] is True
    assert "staircase" in report
    assert report["scaled_matches_limiting"] is False
    validate_against_schema(report)


def test_analyze_csv(capsys):
    code, out, _ = run(capsys, "analyze", "--l", "3", "--m", "6", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "d,v_d"
    assert lines[1] == "10,1"
    assert lines[-1] == "18,1"


def test_analyze_rejects_small_l(capsys):
    code, _, err = run(capsys, "analyze", "--l", "2", "--m", "1")
    assert code == 1
    assert "l must be >= 3" in err


def test_analyze_rejects_bad_m(capsys):
    code, _, err = run(capsys, "analyze", "--l", "3", "--m", "0")
    assert code == 1
    assert "m must be >= 1" in err


def test_analyze_verify_embeds_checks(capsys):
    code, out, _ = run(capsys, "analyze", "--l", "3", "--m", "2",
                       "--format", "json", "--verify")
    assert code == 0
    report = json.loads(out)
    assert report["verification"]["all_pass"] is True
    names = {c["name"] for c in report["verification"]["checks"]}
    assert {"hilbert-vs-oracle", "generators-vs-oracle"} <= names
    validate_against_schema(report)


def test_analyze_figure(tmp_path, capsys):
    target = tmp_path / "report.png"
    code, _, _ = run(capsys, "analyze", "--l", "3", "--m", "2", "--figure", str(target))
    assert code == 0
    assert target.stat().st_size > 0


def test_shape_json_area(capsys):
    code, out, _ = run(capsys, "shape", "--l", "4", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert fraction_from_json(report["area"]) == Fraction(5, 2)
    assert polytope_from_json(report["vertices"]) == limiting_shape(4)
    validate_against_schema(report)


def test_shape_svg_content_and_determinism(tmp_path, capsys):
    first = tmp_path / "a.svg"
    second = tmp_path / "b.svg"
    assert run(capsys, "shape", "--l", "3", "--svg", str(first))[0] == 0
    assert run(capsys, "shape", "--l", "3", "--svg", str(second))[0] == 0
    content = first.read_text()
    assert content == second.read_text()
    assert 'version="1.1"' in content
    assert "viewBox" in content
    for label in ("5/3", "1/2", "3/2", "area = 2"):
        assert label in content


def test_shape_overlay(tmp_path, capsys):
    svg = tmp_path / "overlay.svg"
    code, out, _ = run(capsys, "shape", "--l", "3", "--overlay-m", "6",
                       "--format", "json", "--svg", str(svg))
    assert code == 0
    report = json.loads(out)
    assert report["overlay_matches"] is True
    assert polytope_from_json(report["overlay_vertices"]) == limiting_shape(3)
    assert "coincides = true" in svg.read_text()
    validate_against_schema(report)


def test_shape_figure(tmp_path, capsys):
    target = tmp_path / "shape.png"
    code, _, _ = run(capsys, "shape", "--l", "4", "--figure", str(target))
    assert code == 0
    assert target.stat().st_size > 0


def test_verify_range_all_pass(capsys):
    code, out, _ = run(capsys, "verify", "--l", "3", "--m", "1..2")
    assert code == 0
    assert "all checks passed" in out


def test_verify_closed_form_only(capsys):
    code, out, _ = run(capsys, "verify", "--l", "5", "--m", "20", "--no-oracle")
    assert code == 0
    assert "procedure-vs-closed-form (l=5, m=20): OK" in out
    assert "table-vs-closed-form (l=5, m=20): OK" in out
    assert "hilbert-vs-oracle" not in out


def test_verify_gin_line(capsys):
    code, out, _ = run(capsys, "verify", "--l", "3", "--m", "2", "--gin")
    assert code == 0
    assert "gin: OK (5 generators)" in out


def test_verify_json_format(capsys):
    code, out, _ = run(capsys, "verify", "--l", "3", "--m", "6", "--no-oracle",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_pass"] is True
    assert all(c["pass"] for c in payload["checks"])


def test_verify_bad_range(capsys):
    code, _, err = run(capsys, "verify", "--l", "3", "--m", "6..2")
    assert code == 1
    assert "range" in err


def test_rational_serialization_roundtrip(capsys):
    _, out, _ = run(capsys, "analyze", "--l", "3", "--m", "6", "--format", "json")
    report = json.loads(out)
    for key in ("newton_polytope", "scaled_polytope", "limiting_shape"):
        for x, y in report[key]:
            for component in (x, y):
                assert component["den"] >= 1
                frac = fraction_from_json(component)
                assert (frac.numerator, frac.denominator) == (component["num"], component["den"])
    assert polytope_from_json(report["limiting_shape"]) == limiting_shape(3)


def test_missing_subcommand_is_usage_error(capsys):
    code, _, err = run(capsys)
    assert code == 1
    assert err
