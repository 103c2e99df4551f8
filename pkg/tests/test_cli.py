"""Every command documented in the README runs here, against the same
flags the README shows, and the salient output lines are pinned."""

import json
import subprocess
import sys

import pytest

from dickson.cli import build_parser, main


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# README examples

def test_readme_division_gf9(capsys):
    code, out, _ = run_cli(capsys, [
        "division", "--coeff", "gf(3,2)", "--sigma", "frobenius:1",
        "--c", "0,1"])
    assert code == 0
    assert "verdict:  proved-division" in out
    assert "method:   exhaustive-scan" in out
    assert "no annihilating pair among all 6561 ordered pairs" in out


def test_readme_autgroup_gf27(capsys):
    code, out, _ = run_cli(capsys, [
        "autgroup", "--coeff", "gf(3,3)", "--sigma", "frobenius:1",
        "--c", "0,1,0"])
    assert code == 0
    assert "order:             6" in out
    assert "structure:         yes" in out
    assert "isomorphism onto Z/3 x Z/2" in out
    assert 'J_and_C:          ["frobenius^0", "frobenius^1", "frobenius^2"]' \
        in out


def test_readme_nuclei_gf9(capsys):
    code, out, _ = run_cli(capsys, [
        "nuclei", "--coeff", "gf(3,2)", "--sigma", "frobenius:1",
        "--c", "0,1"])
    assert code == 0
    for line in ("left:      1", "middle:    2", "right:     1",
                 "nucleus:   1", "commuter:  4", "center:    1"):
        assert line in out


def test_readme_census_3_2(capsys):
    code, out, _ = run_cli(capsys, ["census", "--p", "3", "--n", "2"])
    assert code == 0
    assert "classes_excluding_id:  1" in out
    assert "classes_including_id:  2" in out
    assert 'members:           ["0,1", "0,2", "1,1", "2,2"]' in out


def test_readme_wene_gf9(capsys):
    code, out, _ = run_cli(capsys, [
        "wene", "--coeff", "gf(3,2)", "--sigma", "frobenius:1",
        "--c", "2,0"])
    assert code == 0
    assert 'left_inverse:               ["0,0", "2,0"]' in out
    assert "grouped_map_is_sigma_pair:  true" in out
    assert "sigma_fixes_c:              true" in out
    assert "in_automorphism_group:      true" in out


def test_readme_witness_zero_divisor(capsys):
    code, out, _ = run_cli(capsys, [
        "witness-zero-divisor", "--coeff", "gf(5,2)", "--sigma",
        "frobenius:1", "--c", "0,1", "--r", "1,1", "--s", "2,1",
        "--t", "1,2"])
    assert code == 0
    assert "critical_c:       4,2" in out
    assert 'pair:             [["1,1", "1,2"], ["1,4", "2,1"]]' in out
    assert "product_is_zero:  true" in out


def test_readme_quaternion_division_json(capsys):
    code, out, _ = run_cli(capsys, [
        "division", "--coeff", "quat(2,3)", "--sigma",
        "conjugation:0,1,0,0", "--c", "0,1,1,0", "--variant", "middle",
        "--format", "json"])
    assert code == 0
    envelope = json.loads(out)
    assert set(envelope) == {"version", "command", "input", "result",
                             "wall_time_s"}
    assert envelope["command"] == "division"
    assert envelope["input"]["variant"] == "middle"
    assert envelope["result"]["verdict"] == "proved-division"
    assert envelope["result"]["method"] == "norm-criterion"


def test_readme_padic_unknown_exits_zero(capsys):
    code, out, _ = run_cli(capsys, [
        "division", "--coeff", "qp(5)", "--sigma", "conjugate", "--c", "2"])
    assert code == 0
    assert "verdict:  unknown" in out
    assert "do not decide this case" in out


def test_readme_bad_input_exits_two(capsys):
    code, out, err = run_cli(capsys, [
        "construct", "--coeff", "qp(2)", "--sigma", "conjugate",
        "--c", "1,1"])
    assert code == 2
    assert out == ""
    assert "error:" in err and "p = 2" in err


def test_readme_iso_spec_files(capsys, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text('{"coeff": "gf(3,2)", "sigma": "frobenius:1", "c": "0,1"}')
    b.write_text('{"coeff": "gf(3,2)", "sigma": "frobenius:1", "c": "0,2"}')
    code, out, _ = run_cli(capsys, ["iso", "--spec", str(a),
                                    "--spec2", str(b)])
    assert code == 0
    assert "status:   yes" in out
    assert "tau:  frobenius^0" in out
    assert "b:    1,2" in out


def test_readme_construct_quad(capsys):
    code, out, _ = run_cli(capsys, [
        "construct", "--coeff", "quad(2)", "--sigma", "conjugate",
        "--c", "0,1", "--variant", "right"])
    assert code == 0
    assert "all_passed:  true" in out
    assert "matches_structure_constants:  true" in out
    assert "trials:      200" in out


# ---------------------------------------------------------------------------
# envelope determinism

def _json_run(capsys, argv):
    code = main(argv + ["--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    return out


def test_json_runs_are_identical_apart_from_wall_time(capsys):
    argv = ["autgroup", "--coeff", "gf(3,2)", "--sigma", "frobenius:1",
            "--c", "0,1"]
    first = json.loads(_json_run(capsys, argv))
    second = json.loads(_json_run(capsys, argv))
    first.pop("wall_time_s")
    second.pop("wall_time_s")
    assert json.dumps(first, sort_keys=True) \
        == json.dumps(second, sort_keys=True)


def test_json_keys_sorted_on_the_wire(capsys):
    out = _json_run(capsys, ["division", "--coeff", "gf(3,2)",
                             "--sigma", "frobenius:1", "--c", "0,1"])
    keys = [line.split('"')[1] for line in out.splitlines()
            if line.startswith('  "')]
    assert keys == sorted(keys)


# ---------------------------------------------------------------------------
# flag validation

def test_spec_and_inline_flags_conflict(capsys, tmp_path):
    spec = tmp_path / "alg.json"
    spec.write_text('{"coeff": "gf(3,2)", "sigma": "frobenius:1", '
                    '"c": "0,1"}')
    code, _, err = run_cli(capsys, [
        "division", "--spec", str(spec), "--coeff", "gf(3,2)"])
    assert code == 2
    assert "not both" in err


def test_inline_flags_must_be_complete(capsys):
    code, _, err = run_cli(capsys, ["division", "--coeff", "gf(3,2)"])
    assert code == 2
    assert "--sigma" in err


def test_iso_requires_both_specs(capsys, tmp_path):
    spec = tmp_path / "alg.json"
    spec.write_text('{"coeff": "gf(3,2)", "sigma": "frobenius:1", '
                    '"c": "0,1"}')
    code, _, err = run_cli(capsys, ["iso", "--spec", str(spec)])
    assert code == 2
    assert "--spec2" in err


def test_identity_sigma_needs_opt_in(capsys):
    code, _, err = run_cli(capsys, [
        "division", "--coeff", "gf(3,2)", "--sigma", "id", "--c", "0,1"])
    assert code == 2
    assert "allow_identity" in err
    code2, out, _ = run_cli(capsys, [
        "division", "--coeff", "gf(3,2)", "--sigma", "id", "--c", "0,1",
        "--allow-identity"])
    assert code2 == 0
    assert "proved-division" in out


def test_reducible_modulus_rejected(capsys):
    code, _, err = run_cli(capsys, [
        "division", "--coeff", "gf(3,2;1,2,1)", "--sigma", "frobenius:1",
        "--c", "0,1"])
    assert code == 2
    assert "reducible" in err


def test_missing_spec_file(capsys):
    code, _, err = run_cli(capsys, [
        "division", "--spec", "/nonexistent/alg.json"])
    assert code == 2
    assert "cannot read" in err


def test_census_over_limit_errors(capsys):
    code, _, err = run_cli(capsys, ["census", "--p", "5", "--n", "3"])
    assert code == 2
    assert "limit" in err


def test_autgroup_quaternion_taus(capsys):
    code, out, _ = run_cli(capsys, [
        "autgroup", "--coeff", "quat(2,3)", "--sigma",
        "conjugation:0,1,0,0", "--c", "2,0,0,0", "--tau", "id",
        "--tau", "conjugation:0,1,0,0"])
    assert code == 0
    assert "order:             4" in out
    assert "complete:          false" in out


def test_parser_rejects_unknown_subcommand():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["frobnicate"])


def test_module_entry_point_version():
    proc = subprocess.run([sys.executable, "-m", "dickson", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0.1.0"
