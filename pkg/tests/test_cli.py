import json
import subprocess
import sys

import numpy as np
import pytest

from tensorspectra.cli import main
from tensorspectra.io import read_tensor, write_tensor
from tensorspectra.special import identity_family
from tensorspectra.tensor import as_array


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_kronecker(capsys):
    code, out, _ = run(capsys, "gen", "kronecker", "--order", 3, "--side", 2)
    assert code == 0
    obj = json.loads(out)
    assert obj["shape"] == [2, 2, 2] and obj["re"] == [1.0, 0, 0, 0, 0, 0, 0, 1.0]


def test_product_identity(capsys, tmp_path, rng):
    I, _, I2 = identity_family(3)
    A = rng.normal(size=(3, 3, 3))
    for name, T in (("i", I), ("a", A), ("i2", I2)):
        write_tensor(tmp_path / f"{name}.json", T)
    out = tmp_path / "out.json"
    code, _, _ = run(capsys, "product", "ternary", tmp_path / "i.json", tmp_path / "a.json", tmp_path / "i2.json", "-o", out)
    assert code == 0
    assert np.max(np.abs(as_array(read_tensor(out)) - A)) < 1e-12


def test_charpoly(capsys, tmp_path):
    p = tmp_path / "m.json"
    p.write_text("[[2, 1], [1, 2]]")
    code, out, _ = run(capsys, "charpoly", "matrix", p)
    assert code == 0 and out == "1*l2^2 + -4*l2 + 3\n"


def test_charpoly_limit_exit_code(capsys, tmp_path):
    p = tmp_path / "m.json"
    p.write_text("[[2, 1], [1, 2]]")
    code, out, _ = run(capsys, "charpoly", "matrix", p, "--max-degree", 1)
    assert code == 3 and json.loads(out)["limits_hit"]


def test_check_failure_exit_code(capsys, tmp_path):
    p = tmp_path / "a.json"
    write_tensor(p, np.arange(8.0).reshape(2, 2, 2))
    code, out, _ = run(capsys, "check", "symmetric", p)
    assert code == 1 and not json.loads(out)["ok"]


def test_precondition_exit_code(capsys, tmp_path):
    p = tmp_path / "z.json"
    write_tensor(p, np.zeros((2, 2)))
    code, _, err = run(capsys, "solve", "matrix-oracle", p)
    assert code == 2 and err.startswith("error [norm-zero]")


def test_parse_error_exit_code(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{")
    code, _, err = run(capsys, "norm", p)
    assert code == 2 and "error [" in err


def test_solve_matrix_oracle(capsys, tmp_path):
    p = tmp_path / "m.json"
    p.write_text("[[2, 1], [1, 2]]")
    code, out, _ = run(capsys, "solve", "matrix-oracle", p, "--out-dir", tmp_path / "f")
    assert code == 0
    assert sorted(json.loads(out)["eigenvalues"]) == pytest.approx([1.0, 3.0])
    assert (tmp_path / "f" / "Q.json").exists()


def test_solve_planted(capsys, tmp_path):
    p = tmp_path / "a.json"
    assert run(capsys, "gen", "planted", "--side", 2, "--seed", 5, "-o", p)[0] == 0
    code, out, _ = run(capsys, "solve", "spectral3", p)
    assert code == 0 and json.loads(out)["converged"]


def test_hierarchy(capsys, tmp_path):
    p = tmp_path / "a.json"
    run(capsys, "gen", "planted", "--side", 2, "--seed", 6, "-o", p)
    code, out, _ = run(capsys, "hierarchy", p)
    assert code == 0 and json.loads(out)["reconstruction_error"] < 1e-6


def test_transpose_and_norm(capsys, tmp_path):
    p = tmp_path / "a.json"
    write_tensor(p, np.arange(8.0).reshape(2, 2, 2))
    code, out, _ = run(capsys, "transpose", p, "-k", 3)
    assert code == 0 and json.loads(out)["re"] == list(np.arange(8.0))
    code, out, _ = run(capsys, "norm", p, "-p", 2)
    assert json.loads(out)["norm"] == pytest.approx(np.sqrt(np.sum(np.arange(8.0) ** 2)))


def test_gen_permutation_and_scaling(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "permutation", "--sigma", "2,3,1")
    assert code == 0 and json.loads(out)["shape"] == [3, 3, 3]
    w = tmp_path / "w.json"
    w.write_text("[[1, 2], [3, 4]]")
    code, _, err = run(capsys, "gen", "scaling", "--weights", w)
    assert code == 2 and err.startswith("error [not-symmetric]")


def test_tucker_and_rank1(capsys, tmp_path):
    a = tmp_path / "a.json"
    write_tensor(a, np.ones((2, 2, 2)))
    eye = tmp_path / "eye.json"
    write_tensor(eye, np.eye(2))
    code, out, _ = run(capsys, "tucker", "core", a, "--q", eye, "--s", eye, "--u", eye)
    assert code == 0 and json.loads(out)["re"] == [1.0] * 8
    f = tmp_path / "f.json"
    f.write_text(json.dumps({"factors": [[[1, 1], [1, 1], [1, 1]]], "lambdas": [1.0]}))
    code, out, _ = run(capsys, "rank1-objective", a, "--factors", f)
    assert code == 0 and json.loads(out)["objective"] == pytest.approx(0.0, abs=1e-12)


def test_audit_is_byte_deterministic():
    cmd = [sys.executable, "-m", "tensorspectra", "audit", "--seed", "7"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == 0 and a.stdout == b.stdout
    assert b"invariants failed: 0" in a.stdout
