"""Tests for the command-line interface: commands, flags, exit codes,
and byte-identical deterministic reports."""

import json

import pytest

from detkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_verify_single_id(capsys):
    code, out = run(capsys, "verify", "--id", "macmahon",
                    "--trials", "5", "--seed", "42")
    assert code == 0
    assert "macmahon: PASS" in out


def test_verify_unknown_id(capsys):
    code, _ = run(capsys, "verify", "--id", "nosuch")
    assert code == 2


def test_verify_bad_trials(capsys):
    code, _ = run(capsys, "verify", "--id", "macmahon", "--trials", "0")
    assert code == 2


def test_verify_json_schema(capsys):
    code, out = run(capsys, "verify", "--id", "vandermonde,cauchy",
                    "--seed", "3", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert [r["id"] for r in reports] == ["vandermonde", "cauchy"]
    assert all(r["overall"] for r in reports)


def test_verify_report_order_is_registry_order(capsys):
    # request order must not leak into report order
    _, out = run(capsys, "verify", "--id", "cauchy,vandermonde",
                 "--format", "json")
    assert [r["id"] for r in json.loads(out)] == ["vandermonde", "cauchy"]


def test_list(capsys):
    code, out = run(capsys, "list")
    ids = out.strip().splitlines()
    assert code == 0
    assert ids[0] == "vandermonde"
    assert len(ids) == 76


def test_eval(capsys):
    code, out = run(capsys, "eval", "--id", "macmahon", "--seed", "1")
    assert code == 0
    assert "PASS" in out


def test_eval_requires_single_id(capsys):
    code, _ = run(capsys, "eval")
    assert code == 2


def test_guess_identity_law(capsys):
    code, out = run(capsys, "guess", "1,2,3")
    assert code == 0
    assert out.splitlines()[0] == "n -> n"


def test_guess_rejects_fibonacci(capsys):
    code, _ = run(capsys, "guess", "1,1,2,3,5,8")
    assert code == 1


def test_guess_parse_failure(capsys):
    code, _ = run(capsys, "guess", "1,two,3")
    assert code == 2


def test_hankel_bernoulli_example(capsys):
    code, out = run(capsys, "hankel", "--seq", "bernoulli",
                    "--offset", "2", "--n", "3")
    assert code == 0
    assert "1/6" in out and "-1/180" in out and "-1/5" in out
    assert "ok" in out


def test_hankel_euler_example(capsys):
    code, out = run(capsys, "hankel", "--seq", "euler", "--offset", "0",
                    "--n", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dets"] == ["1", "4"]


def test_hankel_degenerate_custom(capsys):
    code, _ = run(capsys, "hankel", "--seq", "custom:1,0,0", "--n", "2")
    assert code == 3


def test_hankel_unknown_seq(capsys):
    code, _ = run(capsys, "hankel", "--seq", "weird", "--n", "2")
    assert code == 2


def test_no_command(capsys):
    assert main([]) == 2


def test_out_file_and_byte_identity(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        code, _ = run(capsys, "verify", "--id", "weyl-b,krat1",
                      "--seed", "9", "--format", "json", "--out", str(p))
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
