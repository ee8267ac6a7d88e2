import json
import subprocess
import sys

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from cnpcert.cli import main
from cnpcert.errors import SuiteFormat
from cnpcert.gallery import default_suite_dict, load_suite, run_suite


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------------ gallery

def test_default_suite_all_match(capsys):
    code, out, _ = run_cli(capsys, ["gallery"])
    assert code == 0
    report = json.loads(out)
    assert report["all_match"] is True
    assert len(report["entries"]) == 11
    names = [e["name"] for e in report["entries"]]
    assert names == sorted(names)


def test_suite_with_wrong_expectation_exits_1(tmp_path, capsys):
    doc = default_suite_dict()
    doc["entries"] = [e for e in doc["entries"] if e["name"] == "scaled_identity_r2"]
    doc["entries"][0]["expected"]["cnp"] = "NOT_PSD"
    path = tmp_path / "suite.json"
    path.write_text(json.dumps(doc))
    code, out, err = run_cli(capsys, ["gallery", "--suite", str(path)])
    assert code == 1
    assert "scaled_identity_r2" in err
    report = json.loads(out)
    assert report["mismatches"] == ["scaled_identity_r2"]


def test_empty_suite_exits_0(tmp_path, capsys):
    path = tmp_path / "empty.json"
    path.write_text(json.dumps({"entries": []}))
    code, out, _ = run_cli(capsys, ["gallery", "--suite", str(path)])
    assert code == 0
    assert json.loads(out)["entries"] == []


def test_suite_missing_fields_exit_3_lists_entries(tmp_path, capsys):
    doc = {
        "entries": [
            {"name": "ok", "b": {"family": "power", "k": 2},
             "expected": {"cnp": "NOT_PSD", "criterion": "FAIL"}},
            {"name": "broken1", "b": {"family": "power", "k": 2}},
            {"name": "broken2", "expected": {"cnp": "PSD", "criterion": "FAIL"}},
        ]
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run_cli(capsys, ["gallery", "--suite", str(path)])
    assert code == 3
    assert "broken1" in err and "broken2" in err


def test_load_suite_validates():
    with pytest.raises(SuiteFormat):
        load_suite({"entries": [{"name": "x"}]})
    with pytest.raises(SuiteFormat):
        load_suite({"nope": 1})


def test_run_suite_deterministic_modulo_wall_time():
    doc = default_suite_dict()
    doc["entries"] = doc["entries"][:3]
    r1 = run_suite(doc, command="gallery")
    r2 = run_suite(doc, command="gallery")
    r1.pop("wall_time_s")
    r2.pop("wall_time_s")
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)
    assert r1["inputs_digest"] == r2["inputs_digest"]


# ---------------------------------------------------------------------- cnp

def test_cnp_szego_exit_0(tmp_path, capsys):
    k = tmp_path / "szego.json"
    k.write_text('{"kind": "szego"}')
    code, out, _ = run_cli(
        capsys, ["cnp", "--kernel", str(k), "--base", "0", "--grid", "6x12", "--rmax", "0.9"]
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"] == "PSD"
    assert rep["min_eig"] >= -1e-9


def test_cnp_squared_symbol_exit_1(capsys):
    code, out, _ = run_cli(
        capsys,
        ["cnp", "--kernel", '{"kind":"dbr","b":{"family":"power","k":2}}',
         "--points", "0.5,-0.5"],
    )
    assert code == 1
    rep = json.loads(out)
    assert rep["verdict"] == "NOT_PSD"
    assert abs(rep["min_eig"] - (-0.13333333333)) < 1e-6


def test_cnp_broken_kernel_exit_3(tmp_path, capsys):
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, ["cnp", "--kernel", str(bad)])
    assert code == 3
    assert err


def test_cnp_missing_file_exit_3(capsys):
    code, _, err = run_cli(capsys, ["cnp", "--kernel", "/nonexistent/k.json"])
    assert code == 3


def test_cnp_writes_json_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, ["cnp", "--kernel", '{"kind":"szego"}', "--json", str(out_path)]
    )
    assert code == 0
    assert json.loads(out_path.read_text()) == json.loads(out)


def test_cnp_complex_base_parsing(capsys):
    code, out, _ = run_cli(
        capsys, ["cnp", "--kernel", '{"kind":"szego"}', "--base", "0.3+0.1i"]
    )
    assert code == 0
    assert json.loads(out)["base"] == [0.3, 0.1]


def test_cnp_determinism(capsys):
    argv = ["cnp", "--kernel", '{"kind":"szego"}', "--seed", "7"]
    _, out1, _ = run_cli(capsys, argv)
    _, out2, _ = run_cli(capsys, argv)
    assert out1 == out2


# ------------------------------------------------------------------ hbcheck

def test_hbcheck_affine_with_witness_exit_0(capsys):
    code, out, _ = run_cli(
        capsys,
        ["hbcheck", "--b", '{"family":"affine","A":[0,0],"B":[2,0]}', "--witness", "shipped"],
    )
    assert code == 0
    assert json.loads(out)["overall"] == "PASS_WITH_EXTENSION"


def test_hbcheck_squared_symbol_exit_1(capsys):
    code, out, _ = run_cli(capsys, ["hbcheck", "--b", '{"family":"power","k":2}'])
    assert code == 1
    assert json.loads(out)["injectivity"] == "NOT_INJ"


def test_hbcheck_half_plane_case_exit_0(capsys):
    # A z/(z + B) with A = -1, B = -2 is z/(2 - z)
    code, out, _ = run_cli(
        capsys,
        ["hbcheck", "--b", '{"family":"moebius_over","A":[-1,0],"B":[-2,0]}',
         "--witness", "shipped"],
    )
    assert code == 0
    assert json.loads(out)["overall"] == "PASS_WITH_EXTENSION"


def test_hbcheck_no_witness_exit_2(capsys):
    code, out, _ = run_cli(
        capsys, ["hbcheck", "--b", '{"family":"scaled_identity","R":[2,0]}']
    )
    assert code == 2
    assert json.loads(out)["overall"] == "PASS_NECESSARY"


def test_hbcheck_explicit_series_symbol(capsys):
    spec = json.dumps({"series": {"center": [0, 0], "coeffs": [[0, 0], [0.5, 0]]}})
    code, out, _ = run_cli(capsys, ["hbcheck", "--b", spec])
    assert code == 2


def test_hbcheck_non_unit_ball_symbol_exit_3(capsys):
    spec = json.dumps({"series": {"coeffs": [[0, 0], [1.5, 0]]}})
    code, _, err = run_cli(capsys, ["hbcheck", "--b", spec])
    assert code == 3
    assert "NOT_SCHUR_CLASS" in err


def test_hbcheck_witness_without_family_exit_3(capsys):
    spec = json.dumps({"series": {"coeffs": [[0, 0], [0.5, 0]]}})
    code, _, err = run_cli(capsys, ["hbcheck", "--b", spec, "--witness", "shipped"])
    assert code == 3


# --------------------------------------------------------------------- pick

def test_pick_constant_construct(capsys):
    code, out, _ = run_cli(
        capsys,
        ["pick", "--problem", '{"nodes":[[0,0]],"targets":[[0.5,0]]}', "--construct"],
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"]["status"] == "PSD"
    assert rep["interpolant"]["max_residual"] < 1e-8


def test_pick_unsolvable_exit_1(capsys):
    code, out, _ = run_cli(
        capsys, ["pick", "--problem", '{"nodes":[[0,0]],"targets":[[2,0]]}']
    )
    assert code == 1
    assert json.loads(out)["verdict"]["status"] == "NOT_PSD"


def test_pick_two_nodes_construct(capsys):
    code, out, _ = run_cli(
        capsys,
        ["pick", "--problem",
         '{"nodes":[[0,0],[0.5,0]],"targets":[[0,0],[0.375,0]]}', "--construct"],
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["interpolant"]["max_residual"] < 1e-8
    assert rep["interpolant"]["sampled_sup"] <= 1 + 1e-6


def test_pick_extremal_construct_exit_1(capsys):
    code, out, _ = run_cli(
        capsys,
        ["pick", "--problem",
         '{"nodes":[[0,0],[0.5,0]],"targets":[[0,0],[0.5,0]]}', "--construct"],
    )
    assert code == 1
    assert json.loads(out)["interpolant"]["error"] == "NOT_STRICTLY_SOLVABLE"


def test_pick_malformed_problem_exit_3(capsys):
    code, _, err = run_cli(capsys, ["pick", "--problem", '{"nodes": "zap"}'])
    assert code == 3


# ------------------------------------------------------- malformed input fuzz

@given(st.text(min_size=1, max_size=40))
def test_malformed_kernel_json_always_exits_3(text):
    blob = "{" + text
    try:
        parsed = json.loads(blob)
    except json.JSONDecodeError:
        parsed = None
    assume(parsed is None)  # keep only genuinely malformed JSON
    code = main(["cnp", "--kernel", blob])
    assert code == 3


@given(st.dictionaries(st.text(max_size=8), st.integers(), max_size=3))
def test_wrong_kernel_descriptors_exit_3(obj):
    assume("kind" not in obj or obj.get("kind") not in
           {"szego", "drury_arveson", "weighted_hardy", "dbr", "constant",
            "sum", "pullback", "congruence", "normalized_defect"})
    code = main(["cnp", "--kernel", json.dumps(obj)])
    assert code == 3


# ------------------------------------------------------------------- process

def test_module_entry_point_runs_gallery():
    proc = subprocess.run(
        [sys.executable, "-m", "cnpcert", "gallery"],
        capture_output=True, text=True, timeout=300,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["all_match"] is True
