"""Command-line dispatch: documented examples and exit codes."""

import json

from conewalk import cli


def run(capsys, *argv):
    code = cli.dispatch(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tildel_example(capsys):
    code, out, _ = run(capsys, "heis", "tildel", "1", "0", "0")
    assert code == 0
    assert out == "2\n"


def test_negative_depth_is_usage_error(capsys):
    code, _, err = run(capsys, "balls", "--group", "heisenberg",
                       "--depth", "-1")
    assert code == 2
    assert "depth" in err


def test_verify_requires_suite(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 2
    assert "--suite" in err


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nosuch")
    assert code == 2
    assert "nosuch" in err


def test_verify_partitions_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "partitions")
    assert code == 0
    reports = json.loads(out)
    assert [r["check_id"] for r in reports] == ["AC04", "AC05"]
    assert all(r["status"] == "pass" for r in reports)


def test_verify_single_check(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "AC03")
    assert code == 0
    assert json.loads(out)[0]["check_id"] == "AC03"


def test_verify_output_is_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "--suite", "AC04")
    _, out2, _ = run(capsys, "verify", "--suite", "AC04")
    assert out1 == out2


def test_unknown_flag_rejected(capsys):
    code, _, _ = run(capsys, "balls", "--group", "heisenberg",
                     "--depth", "3", "--frobnicate")
    assert code == 2


def test_unknown_subcommand_rejected(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_balls_csv(capsys):
    code, out, _ = run(capsys, "balls", "--group", "heisenberg",
                       "--depth", "3", "--report", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "m,gamma_size,support_size"
    assert lines[1:] == ["0,1,1", "1,4,5", "2,12,17", "3,36,53"]


def test_balls_json_shape(capsys):
    code, out, _ = run(capsys, "balls", "--group", "heisenberg",
                       "--depth", "2")
    assert code == 0
    data = json.loads(out)
    assert data["sizes"] == [1, 5, 17]
    assert data["levels"][0] == [[0, 0, 0]]


def test_bad_element_cap(capsys):
    code, _, err = run(capsys, "balls", "--group", "heisenberg",
                       "--depth", "2", "--element-cap", "0")
    assert code == 2
    assert "cap" in err


def test_element_cap_exceeded_is_resource_error(capsys):
    code, _, err = run(capsys, "balls", "--group", "heisenberg",
                       "--depth", "6", "--element-cap", "10")
    assert code == 3


def test_heis_interval(capsys):
    code, out, _ = run(capsys, "heis", "interval", "1", "1", "3")
    assert code == 0
    assert out == "0 1\n"
    code, out, _ = run(capsys, "heis", "interval", "5", "5", "3")
    assert out == "empty\n"


def test_partitions_p3(capsys):
    code, out, _ = run(capsys, "partitions", "p3", "3", "5", "5")
    assert code == 0
    assert out == "3\n"


def test_partitions_slice_csv(capsys):
    code, out, _ = run(capsys, "partitions", "slice", "2", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "r,a,b,coeff"
    assert "1,1,1,1" in lines


def test_trace_eval(capsys):
    code, out, _ = run(capsys, "trace", "eval", "--spec", "lower:2,20",
                       "--node", "0,0,1")
    assert code == 0
    assert out == "1\n"


def test_trace_eval_bad_spec(capsys):
    code, _, err = run(capsys, "trace", "eval", "--spec", "warble:1",
                       "--node", "0,0,1")
    assert code == 2


def test_szekeres_compare(capsys):
    code, out, _ = run(capsys, "szekeres", "compare", "2000", "50", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"]
    assert data["rel_error"] < 0.05


def test_bratteli_build(capsys, tmp_path):
    out_file = tmp_path / "diag.json"
    code, _, _ = run(capsys, "bratteli", "build", "--depth", "3",
                     "--filter", "quadrant", "--out", str(out_file))
    assert code == 0
    data = json.loads(out_file.read_text())
    assert data["levels"][1] == ["0,0,1", "0,1,0"]
    assert ["0,0,0", "0,0,1", 1] in data["edges"]


def test_realize(capsys, tmp_path):
    mat = tmp_path / "B.json"
    mat.write_text("[[1,1],[1,1]]")
    code, out, _ = run(capsys, "realize", "--matrix", str(mat),
                       "--depth", "3")
    assert code == 0
    data = json.loads(out)
    assert all(t["matches"] for t in data["transitions"])
    assert all(i["isolated"] for i in data["isolations"])


def test_realize_rejects_1x1(capsys, tmp_path):
    mat = tmp_path / "B.json"
    mat.write_text("[[1]]")
    code, _, err = run(capsys, "realize", "--matrix", str(mat))
    assert code == 2


def test_polytope_simplex(capsys):
    code, out, _ = run(capsys, "polytope", "simplex", "2", "3", "7")
    assert code == 0
    data = json.loads(out)
    assert data["unique_interior"]
    assert data["a17"]["pass"]


def test_missing_set_file_is_usage_error(capsys):
    code, _, _ = run(capsys, "balls", "--group", "free_group_2",
                     "--set", "/nonexistent.json", "--depth", "2")
    assert code == 2
