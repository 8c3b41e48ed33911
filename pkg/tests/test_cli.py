"""CLI behavior: subcommands, exit codes, JSON errors, determinism."""

import json
import subprocess
import sys

import pytest

from lenscross.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main
from lenscross.drawing import drawing, save


@pytest.fixture()
def run(capsys):
    def inner(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return inner


@pytest.fixture()
def nested_file(tmp_path, run):
    path = tmp_path / "nested.json"
    code, out, _ = run("gen", "--family", "nested", "--k", "4", "-o", str(path))
    assert code == EXIT_OK and out == ""
    return str(path)


@pytest.fixture()
def invalid_file(tmp_path):
    d = drawing([(0, 0), (4, 0), (2, 0)], [(0, 1, None)])
    path = tmp_path / "invalid.json"
    path.write_text(save(d))
    return str(path)


def test_gen_writes_loadable_json(nested_file):
    data = json.loads(open(nested_file).read())
    assert len(data["edges"]) == 4


def test_gen_to_stdout(run):
    code, out, _ = run("gen", "--family", "nested", "--k", "2")
    assert code == EXIT_OK
    assert json.loads(out)["vertices"]


def test_gen_rejects_bad_family_args(run):
    code, out, err = run("gen", "--family", "convex", "--n", "2")
    assert code == EXIT_USAGE
    assert "error" in err and out == ""
    code, out, err = run("gen", "--family", "convex", "--n", "2", "--json")
    assert code == EXIT_USAGE
    assert json.loads(out)["error"]["kind"] == "generation"


def test_validate_ok_and_invalid(run, nested_file, invalid_file):
    code, out, _ = run("validate", nested_file)
    assert code == EXIT_OK and json.loads(out)["ok"] is True
    code, out, _ = run("validate", invalid_file)
    assert code == EXIT_CHECK_FAILED
    doc = json.loads(out)
    assert doc["ok"] is False
    assert doc["violations"][0]["kind"] == "arc_through_vertex"


def test_missing_file(run):
    code, _, err = run("validate", "/nonexistent/x.json")
    assert code == EXIT_USAGE and "no such file" in err
    code, out, _ = run("validate", "/nonexistent/x.json", "--json")
    assert json.loads(out)["error"]["kind"] == "io"


def test_malformed_json_file(run, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{]")
    code, out, _ = run("cross", str(bad), "--json")
    assert code == EXIT_USAGE
    assert json.loads(out)["error"]["kind"] == "parse"


def test_cross_engines_agree(run, nested_file):
    code, naive, _ = run("cross", nested_file)
    assert code == EXIT_OK
    code, sweep, _ = run("cross", nested_file, "--engine", "sweep")
    assert code == EXIT_OK
    dn, ds = json.loads(naive), json.loads(sweep)
    assert dn["engine"] == "naive" and ds["engine"] == "sweep"
    for key in ("total", "max_pair", "pairs", "points"):
        assert dn[key] == ds[key]


def test_cross_invalid_drawing_exits_one(run, invalid_file):
    code, out, _ = run("cross", invalid_file)
    assert code == EXIT_CHECK_FAILED
    assert json.loads(out)["error"]["kind"] == "invalid_drawing"


def test_lenses_doc(run, nested_file):
    code, out, _ = run("lenses", nested_file)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["separated"] is True and doc["lens_count"] == 3
    assert len(doc["lenses"]) == 3
    assert doc["lenses"][0]["interior_vertices"] == [2]


def test_check_separated_instance(run, nested_file):
    code, out, _ = run("check", nested_file)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["separation"]["separated"] is True
    assert doc["bounds"]["verdicts"]["edge_cap"] is True


def test_check_non_single_crossing_gates_to_null(run, tmp_path):
    path = tmp_path / "semi.json"
    assert main(["gen", "--family", "semicircle", "--n", "6", "-o", str(path)]) == 0
    code, out, _ = run("check", str(path))
    assert code == EXIT_OK  # nothing applicable failed, only gated out
    doc = json.loads(out)
    assert doc["separation"]["single_crossing"] is False
    assert doc["bounds"]["verdicts"]["edge_cap"] is None


def test_bisect_and_exit_codes(run, tmp_path):
    star = drawing(
        [(0, 0), (4, 0), (0, 4), (-4, 0), (0, -4)],
        [(0, 1, None), (0, 2, None), (0, 3, None), (0, 4, None)],
    )
    path = tmp_path / "star.json"
    path.write_text(save(star))
    code, out, _ = run("bisect", str(path))
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["width"] == 1 and doc["radicand"] == 25 and doc["holds"] is True


def test_bisect_rejects_unseparated(run, tmp_path):
    d = drawing([(0, 0), (6, 0)], [(0, 1, [(0, 0), (3, 3), (6, 0)]), (0, 1, None)])
    path = tmp_path / "pair.json"
    path.write_text(save(d))
    code, out, _ = run("bisect", str(path), "--json")
    assert code == EXIT_USAGE
    assert json.loads(out)["error"]["kind"] == "not_separated"


def test_bisect_too_large(run, tmp_path):
    path = tmp_path / "big.json"
    assert main(["gen", "--family", "nested", "--k", "10", "-o", str(path)]) == 0
    code, out, _ = run("bisect", str(path), "--json")
    assert code == EXIT_USAGE
    assert json.loads(out)["error"]["kind"] == "too_large"


def test_replay_all_checkpoints_pass(run, nested_file):
    code, out, _ = run("replay", nested_file, "--seed", "7", "--trials", "50")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["all_required_ok"] is True and doc["all_trials_ok"] is True
    assert len(doc["trials"]) == 50
    assert doc["sampling"]["trials"] == 50


def test_replay_rejects_non_single_crossing(run, tmp_path):
    path = tmp_path / "semi.json"
    assert main(["gen", "--family", "semicircle", "--n", "4", "-o", str(path)]) == 0
    code, out, _ = run("replay", str(path), "--json")
    assert code == EXIT_USAGE
    assert json.loads(out)["error"]["kind"] == "not_single_crossing"


def test_decompose_command(run, nested_file):
    code, out, _ = run(
        "decompose", nested_file, "--k-override", "1", "--delta-override", "4"
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["all_splits_ok"] is True
    assert doc["stages"][0]["members"][0]["action"] == "split"


def test_decompose_degree_gate_json(run, nested_file):
    code, out, _ = run("decompose", nested_file, "--json")
    assert code == EXIT_USAGE
    assert json.loads(out)["error"]["kind"] == "degree_too_high"


def test_decompose_rejects_bad_fraction(run, nested_file):
    with pytest.raises(SystemExit) as err:
        main(["decompose", nested_file, "--k-override", "x/y"])
    assert err.value.code == EXIT_USAGE


def test_render_writes_svg(run, nested_file, tmp_path):
    out_path = tmp_path / "pic.svg"
    code, _, _ = run("render", nested_file, "-o", str(out_path), "--shade-lenses")
    assert code == EXIT_OK
    text = out_path.read_text()
    assert text.startswith("<svg ") and text.count("<polygon ") == 3


def test_render_tolerates_invalid_drawing(run, invalid_file, tmp_path):
    out_path = tmp_path / "pic.svg"
    code, _, _ = run("render", invalid_file, "-o", str(out_path))
    assert code == EXIT_OK
    assert "</svg>" in out_path.read_text()
    # shading needs lens structure, which needs validity
    code, out, _ = run(
        "render", invalid_file, "-o", str(out_path), "--shade-lenses"
    )
    assert code == EXIT_CHECK_FAILED
    assert json.loads(out)["error"]["kind"] == "invalid_drawing"


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as err:
        main(["gen"])  # --family required
    assert err.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as err:
        main(["cross", "x.json", "--engine", "quantum"])
    assert err.value.code == EXIT_USAGE


def test_byte_identical_reruns_in_process(run, nested_file):
    _, first, _ = run("replay", nested_file, "--seed", "3", "--trials", "40")
    _, second, _ = run("replay", nested_file, "--seed", "3", "--trials", "40")
    assert first == second
    _, other, _ = run("replay", nested_file, "--seed", "4", "--trials", "40")
    assert first != other


def test_module_entry_point_byte_identical(tmp_path):
    path = tmp_path / "d.json"
    cmd = [
        sys.executable, "-m", "lenscross",
        "gen", "--family", "random", "--n", "6", "--seed", "11",
        "--extra-parallel", "1", "-o", str(path),
    ]
    runs = [subprocess.run(cmd, capture_output=True) for _ in range(2)]
    assert all(r.returncode == EXIT_OK for r in runs)
    first = path.read_bytes()
    subprocess.run(cmd, check=True)
    assert path.read_bytes() == first
    check = [sys.executable, "-m", "lenscross", "check", str(path)]
    outs = [subprocess.run(check, capture_output=True) for _ in range(2)]
    assert outs[0].stdout == outs[1].stdout
    assert outs[0].returncode == EXIT_OK
