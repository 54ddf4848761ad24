"""Command-line interface: output text, JSON mode, exit codes."""
import json

import pytest

from curvelab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- implicitize ----------------------------------------------------------------

def test_implicitize_circle_hyperbolism(capsys):
    code, out, err = run(
        capsys, "implicitize", "circle", "--param", "r", "--line", "x=r"
    )
    assert code == 0
    assert out == "r^2*x^2 + x^2*y^2 - r^4\n"


def test_implicitize_bound_instance(capsys):
    code, out, _ = run(
        capsys, "implicitize", "circle", "--param", "r=4", "--line", "x=r"
    )
    assert code == 0
    assert out == "x^2*y^2 + 16*x^2 - 256\n"


def test_implicitize_literal_line_matches_bound_parameter(capsys):
    _, out_a, _ = run(capsys, "implicitize", "circle", "--param", "r=4", "--line", "x=4")
    _, out_b, _ = run(capsys, "implicitize", "circle", "--param", "r=4", "--line", "x=r")
    assert out_a == out_b


def test_implicitize_construction_name(capsys):
    code, out, _ = run(capsys, "implicitize", "gerono")
    assert code == 0
    assert out == "x^4 - a^2*x^2 + b^2*y^2\n"


def test_implicitize_anti_flag(capsys):
    code, out, _ = run(
        capsys, "implicitize", "circle", "--param", "r", "--line", "x=b", "--anti"
    )
    assert code == 0
    assert out == "x^4 - r^2*x^2 + b^2*y^2\n"


def test_implicitize_json_output(capsys):
    code, out, _ = run(capsys, "implicitize", "kulp", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["implicit"] == "r^2*x^2 + x^2*y^2 - r^4"
    assert doc["provenance"]["eliminated"]
    assert doc["provenance"]["method"] in {"resultant", "groebner"}


def test_implicitize_from_file(tmp_path, capsys):
    src = tmp_path / "prog.txt"
    src.write_text(
        "param a\n"
        "point O = (0, 0)\n"
        "point P = on_curve(circle(r = a))\n"
        "line cline = vertical(x = a)\n"
        "line h = horizontal_through(P)\n"
        "point M0 = intersect(h, cline)\n"
        "line OM0 = line_through(O, M0)\n"
        "line v = vertical_through(P)\n"
        "point M = intersect(v, OM0)\n"
        "locus M\n"
    )
    code, out, _ = run(capsys, "implicitize", str(src))
    assert code == 0
    assert out == "x^4 - a^2*x^2 + a^2*y^2\n"


def test_implicitize_method_agreement(capsys):
    _, res, _ = run(capsys, "implicitize", "gerono", "--method", "resultant")
    _, grb, _ = run(capsys, "implicitize", "gerono", "--method", "groebner")
    assert res == grb


# -- locus / analyze / plot -------------------------------------------------------

def test_locus_symbolic(capsys):
    code, out, _ = run(capsys, "locus", "gerono")
    assert code == 0
    assert out.splitlines()[0] == "x^4 - a^2*x^2 + b^2*y^2"


def test_locus_bound(capsys):
    code, out, _ = run(capsys, "locus", "gerono", "--bind", "a=2,b=1")
    assert code == 0
    assert out.splitlines()[0] == "x^4 - 4*x^2 + y^2"


def test_analyze_reports_extraneous_factor(capsys):
    code, out, _ = run(
        capsys,
        "analyze",
        "x*(9*x^2 - 54*x + 4*y^2)",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["irreducible"] is False
    kinds = {f["poly"]: f.get("conic", {}).get("kind") for f in doc["factors"]}
    assert kinds.get("9*x^2 + 4*y^2 - 54*x") == "ellipse"


def test_plot_writes_svg(tmp_path, capsys):
    scene = {
        "viewport": {"x": [-2, 2], "y": [-2, 2]},
        "orthonormal": True,
        "layers": [{"kind": "polyline", "style": "locus", "points": [[0, 0], [1, 1]]}],
    }
    scene_file = tmp_path / "scene.json"
    scene_file.write_text(json.dumps(scene))
    out_file = tmp_path / "out.svg"
    code, out, _ = run(capsys, "plot", str(scene_file), "-o", str(out_file))
    assert code == 0
    text = out_file.read_text()
    assert text.startswith("<?xml")
    assert text.rstrip().endswith("</svg>")


def test_plot_bad_scene_is_usage_error(tmp_path, capsys):
    scene_file = tmp_path / "scene.json"
    scene_file.write_text('{"layers": []}')
    code, _, err = run(capsys, "plot", str(scene_file))
    assert code == 1


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    assert "circle" in out
    assert "gerono" in out


def test_catalog_show(capsys):
    code, out, _ = run(capsys, "catalog", "show", "circle")
    assert code == 0
    assert "circle" in out


# -- exit codes ----------------------------------------------------------------------

def test_exit_code_usage_error(capsys):
    code, _, err = run(capsys, "implicitize")
    assert code == 1


def test_exit_code_unknown_name(capsys):
    code, _, err = run(capsys, "implicitize", "klein_bottle")
    assert code == 1
    assert err


def test_exit_code_bad_binding(capsys):
    code, _, err = run(capsys, "locus", "gerono", "--bind", "a=zebra")
    assert code == 1


def test_exit_code_bad_deadline(capsys):
    code, _, err = run(capsys, "implicitize", "gerono", "--deadline-ms", "5")
    assert code == 1


def test_exit_code_missing_file(capsys):
    code, _, err = run(capsys, "implicitize", "/nonexistent/prog.txt")
    assert code == 1


def test_exit_code_deadline_exceeded(capsys):
    code, _, err = run(
        capsys, "implicitize", "nephroid_hyperbolism", "--deadline-ms", "100"
    )
    assert code == 2
    assert "deadline" in err.lower()


def test_exit_code_success_is_zero(capsys):
    code, _, _ = run(capsys, "catalog", "list")
    assert code == 0
