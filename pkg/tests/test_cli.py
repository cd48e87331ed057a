import json
import shutil
import subprocess
import sys

import pytest

from planarcurv.cli import main
from planarcurv.generators import cube, sharp_big_face
from planarcurv.io import parse, serialize


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, t in (("cube", cube()), ("sharp", sharp_big_face(12, 3))):
        p = tmp_path / f"{name}.planar"
        p.write_text(serialize(t))
        paths[name] = p
    return paths


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_check_cube_json(capsys, files):
    code, out, _ = run(capsys, "check", files["cube"], "--json")
    assert code == 0
    data = json.loads(out)
    gb = next(c for c in data["checks"] if c["name"] == "gauss_bonnet")
    assert gb["status"] == "pass" and gb["value"] == "2/1"


def test_discharge_sharp(capsys, files):
    code, out, _ = run(capsys, "discharge", files["sharp"], "--json")
    assert code == 0
    data = json.loads(out)
    assert data["conservation"] == "pass"
    assert data["total_phi_tilde"] == "1/1"
    assert [f["sum"] for f in data["big_faces"]] == ["1/1"]
    code, out, _ = run(capsys, "discharge", files["sharp"])
    assert "conservation pass" in out and "boundary sum 1/1" in out


def test_patterns(capsys):
    code, out, _ = run(capsys, "patterns", "--degree", "4", "--max-k", "30")
    assert code == 0
    for row in ("(3,3,3,k)", "1/k - 1/12", "1/k - 2/15", "4 <= k <= 5"):
        assert row in out
    assert "vanishing: (3,3,4,12) (3,3,6,6) (3,4,4,6) (4,4,4,4)" in out
    code, out, _ = run(capsys, "patterns", "--max-k", "30", "--json")
    assert len(json.loads(out)["families"]) == 4


def test_validate_and_curvature(capsys, files):
    code, out, _ = run(capsys, "validate", files["cube"])
    assert code == 0 and "V=8 E=12 F=6" in out
    code, out, _ = run(capsys, "curvature", files["cube"], "--psi", "--corner", "--json")
    data = json.loads(out)
    assert {v["phi"] for v in data["vertices"]} == {"1/4"}
    assert {e["psi"] for e in data["edges"]} == {"1/6"}
    assert {c["C"] for c in data["corners"]} == {"1/12"}
    code, out, _ = run(capsys, "curvature", files["cube"], "--psi")
    assert "1/4" in out and "1/6" in out


def test_census(capsys, files):
    code, out, _ = run(capsys, "census", files["sharp"], "--json")
    assert json.loads(out)["F_k"] == {"3": 12, "4": 24, "12": 1}
    code, out, _ = run(capsys, "census", files["cube"])
    assert out.split("\n")[1].split() == ["3", "8", "0"]


def test_operators(capsys, files, tmp_path):
    out_path = tmp_path / "m.planar"
    code, _, err = run(capsys, "medial", files["cube"], "-o", out_path)
    assert code == 0 and "census_transfer: pass" in err
    assert parse(out_path.read_text()).vertex_count == 12
    code, out, err = run(capsys, "dual", files["cube"])
    assert code == 0 and parse(out).vertex_count == 6
    code, _, err = run(capsys, "dual", files["sharp"])
    assert code == 2 and err.startswith("error: PatchModeUnsupported:")


def test_gen_and_export(capsys, tmp_path):
    p = tmp_path / "a.planar"
    assert run(capsys, "gen", "antiprism", "9", "-o", p)[0] == 0
    assert parse(p.read_text()).vertex_count == 18
    svg, dot = tmp_path / "a.svg", tmp_path / "a.dot"
    code, _, _ = run(capsys, "export", p, "--svg", svg, "--dot", dot, "--color-curvature")
    assert code == 0
    assert svg.read_text().count("<polyline") == 36
    assert dot.read_text().count(" -- ") == 36


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "check", tmp_path / "missing.planar")
    assert code == 2 and err.startswith("error: InputError:")
    bad = tmp_path / "bad.planar"
    bad.write_text("planar v1\nmode: patch\nv0: 1 2\nv1: 2 0\nv2: 0 1\n")
    code, _, err = run(capsys, "validate", bad)
    assert code == 2 and err.startswith("error: PlanarSyntaxError: line 5:")
    code, _, err = run(capsys, "gen", "prism", "2")
    assert code == 2 and "InvalidParameter" in err
    code, _, err = run(capsys, "export", bad)
    assert code == 2


def test_check_failure_exit_code(capsys, tmp_path):
    p = tmp_path / "a8.planar"
    run(capsys, "gen", "antiprism", "8", "-o", p)
    code, out, _ = run(capsys, "check", p)
    assert code == 1 and "big_face_count" in out


def test_validate_reports_violation(capsys, tmp_path):
    p = tmp_path / "hoso.planar"
    # four squares around two poles: degree-2 vertices and faces meeting in two vertices
    p.write_text("planar v1\nmode: sphere\nv0: 2 4 3 5\nv1: 2 5 3 4\nv2: 0 1\nv3: 0 1\n"
                 "v4: 0 1\nv5: 0 1\n")
    code, out, _ = run(capsys, "validate", p, "--json")
    assert code == 1
    conds = {v["condition"] for v in json.loads(out)["violations"]}
    assert {"vertex-degree", "face-intersection"} <= conds


@pytest.mark.skipif(shutil.which("planarcurv") is None, reason="console script not installed")
def test_console_script(tmp_path):
    p = tmp_path / "c.planar"
    subprocess.run(["planarcurv", "gen", "platonic", "cube", "-o", str(p)], check=True)
    res = subprocess.run(["planarcurv", "check", str(p)], capture_output=True, text=True)
    assert res.returncode == 0 and "gauss_bonnet" in res.stdout


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "planarcurv.cli", "patterns"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "(3,4,4,k)" in res.stdout
