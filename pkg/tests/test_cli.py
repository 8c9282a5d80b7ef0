"""Command-line workflows over QMAT/RMAT files, driven in-process."""

import numpy as np

from quatsvd import (
    QMatrix,
    Quaternion,
    read_qmatrix,
    read_rmatrix,
    write_qmatrix,
)
from quatsvd.cli import main


def write_scalar(path, q):
    write_qmatrix(QMatrix.from_quaternions([[q]]), path)


def run_svd(tmp_path, matrix, name="a"):
    src = tmp_path / f"{name}.qmat"
    write_qmatrix(matrix, src)
    out = tmp_path / f"{name}_svd"
    assert main(["svd", str(src), "--out-dir", str(out)]) == 0
    return src, out


# --- gen ---------------------------------------------------------------------


def test_gen_is_deterministic(tmp_path):
    first = tmp_path / "one.qmat"
    second = tmp_path / "two.qmat"
    assert main(["gen", "--rows", "3", "--cols", "2", "--seed", "42", "--out", str(first)]) == 0
    assert main(["gen", "--rows", "3", "--cols", "2", "--seed", "42", "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()

    lines = first.read_text().splitlines()
    assert lines[0] == "QMAT 1"
    assert lines[1] == "3 2"
    assert len(lines) == 2 + 6

    third = tmp_path / "three.qmat"
    assert main(["gen", "--rows", "3", "--cols", "2", "--seed", "43", "--out", str(third)]) == 0
    assert first.read_bytes() != third.read_bytes()


def test_gen_entries_lie_in_unit_box(tmp_path):
    path = tmp_path / "m.qmat"
    assert main(["gen", "--rows", "5", "--cols", "4", "--seed", "7", "--out", str(path)]) == 0
    data = read_qmatrix(path).data
    assert np.all(np.abs(data) <= 1.0)


def test_gen_rejects_bad_arguments(tmp_path, capsys):
    out = str(tmp_path / "m.qmat")
    assert main(["gen", "--rows", "0", "--cols", "2", "--seed", "1", "--out", out]) == 2
    assert main(["gen", "--rows", "2", "--cols", "2", "--seed", str(2**64), "--out", out]) == 2
    assert main(["gen", "--rows", "2", "--cols", "2", "--seed", "-1", "--out", out]) == 2
    capsys.readouterr()


# --- bidiag ------------------------------------------------------------------


def test_bidiag_writes_three_factors(tmp_path):
    src = tmp_path / "a.qmat"
    write_scalar(src, Quaternion(0, 2))
    out = tmp_path / "fact"
    assert main(["bidiag", str(src), "--out-dir", str(out)]) == 0

    b = read_rmatrix(out / "B.rmat").data
    assert abs(b[0, 0] - 2.0) <= 1e-14
    left = read_qmatrix(out / "L.qmat")
    right = read_qmatrix(out / "R.qmat")
    assert left.shape == (1, 1) and right.shape == (1, 1)
    # L A R must land on B: for a single entry, L = conj(a)/|a|
    assert abs(left[0, 0] - Quaternion(0, -1)) <= 1e-14


# --- svd + check -------------------------------------------------------------


def test_svd_of_zero_scalar(tmp_path):
    _, out = run_svd(tmp_path, QMatrix.zeros(1, 1))
    assert read_rmatrix(out / "S.rmat").data[0, 0] == 0.0


def test_svd_unit_k(tmp_path):
    src, out = run_svd(tmp_path, QMatrix.from_quaternions([[Quaternion(0, 0, 0, 1)]]))
    s = read_rmatrix(out / "S.rmat").data
    assert abs(s[0, 0] - 1.0) <= 1e-14
    u = read_qmatrix(out / "U.qmat")
    assert abs(abs(u[0, 0]) - 1.0) <= 1e-14


def test_svd_values_only_writes_sigma_alone(tmp_path):
    src = tmp_path / "a.qmat"
    assert main(["gen", "--rows", "4", "--cols", "3", "--seed", "3", "--out", str(src)]) == 0
    out = tmp_path / "vals"
    assert main(["svd", str(src), "--out-dir", str(out), "--values-only"]) == 0
    assert (out / "S.rmat").exists()
    assert not (out / "U.qmat").exists()
    assert not (out / "V.qmat").exists()
    s = read_rmatrix(out / "S.rmat").data
    assert s.shape == (4, 3)
    d = np.diagonal(s)
    assert np.all(np.diff(d) <= 0.0) and np.all(d >= 0.0)


def test_check_round_trip_passes(tmp_path, capsys):
    src = tmp_path / "a.qmat"
    assert main(["gen", "--rows", "5", "--cols", "3", "--seed", "11", "--out", str(src)]) == 0
    out = tmp_path / "svd"
    assert main(["svd", str(src), "--out-dir", str(out)]) == 0
    capsys.readouterr()

    code = main(["check", str(src), "--u", str(out / "U.qmat"),
                 "--s", str(out / "S.rmat"), "--v", str(out / "V.qmat")])
    captured = capsys.readouterr()
    assert code == 0
    assert "PASS" in captured.out
    for name in ["reconstruction", "unitarity(U)", "unitarity(V)",
                 "nonnegativity", "ordering", "oracle"]:
        assert name in captured.out


def test_check_flags_corrupted_factor(tmp_path, capsys):
    src = tmp_path / "a.qmat"
    assert main(["gen", "--rows", "3", "--cols", "3", "--seed", "13", "--out", str(src)]) == 0
    out = tmp_path / "svd"
    assert main(["svd", str(src), "--out-dir", str(out)]) == 0

    u = read_qmatrix(out / "U.qmat")
    u.data[:, 0, :] = 0.0
    write_qmatrix(u, out / "U.qmat")
    capsys.readouterr()

    code = main(["check", str(src), "--u", str(out / "U.qmat"),
                 "--s", str(out / "S.rmat"), "--v", str(out / "V.qmat")])
    captured = capsys.readouterr()
    assert code == 1
    assert "FAIL" in captured.out
    assert "unitarity(U)" in captured.out


def test_check_rejects_wrong_shape_factor(tmp_path, capsys):
    src = tmp_path / "a.qmat"
    assert main(["gen", "--rows", "3", "--cols", "2", "--seed", "17", "--out", str(src)]) == 0
    out = tmp_path / "svd"
    assert main(["svd", str(src), "--out-dir", str(out)]) == 0
    write_qmatrix(QMatrix.identity(3), out / "V.qmat")  # should be 2x2

    code = main(["check", str(src), "--u", str(out / "U.qmat"),
                 "--s", str(out / "S.rmat"), "--v", str(out / "V.qmat")])
    captured = capsys.readouterr()
    assert code == 2
    assert "error:" in captured.err


def test_check_rejects_bad_tolerance(tmp_path, capsys):
    src = tmp_path / "a.qmat"
    write_scalar(src, Quaternion(1))
    code = main(["check", str(src), "--u", str(src), "--s", str(src),
                 "--v", str(src), "--tol", "-1"])
    capsys.readouterr()
    assert code == 2


# --- adjoint-svs ---------------------------------------------------------------


def test_adjoint_svs_prints_values(tmp_path, capsys):
    src = tmp_path / "two.qmat"
    write_scalar(src, Quaternion(2))
    assert main(["adjoint-svs", str(src)]) == 0
    assert capsys.readouterr().out == "2.0\n"


def test_adjoint_svs_zero_matrix(tmp_path, capsys):
    src = tmp_path / "z.qmat"
    write_qmatrix(QMatrix.zeros(2, 3), src)
    assert main(["adjoint-svs", str(src)]) == 0
    assert capsys.readouterr().out == "0.0\n0.0\n"


def test_adjoint_svs_agrees_with_svd_command(tmp_path, capsys):
    src = tmp_path / "a.qmat"
    assert main(["gen", "--rows", "4", "--cols", "4", "--seed", "19", "--out", str(src)]) == 0
    out = tmp_path / "svd"
    assert main(["svd", str(src), "--out-dir", str(out), "--values-only"]) == 0
    capsys.readouterr()

    assert main(["adjoint-svs", str(src)]) == 0
    oracle = np.array([float(line) for line in capsys.readouterr().out.split()])
    sigma = np.diagonal(read_rmatrix(out / "S.rmat").data)
    assert np.max(np.abs(sigma - oracle)) <= 1e-10 * max(oracle[0], 1.0)


# --- failure modes ----------------------------------------------------------------


def test_malformed_header_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.qmat"
    bad.write_text("QMAT 2\n1 1\n1.0 0.0 0.0 0.0\n")
    code = main(["svd", str(bad), "--out-dir", str(tmp_path / "out")])
    captured = capsys.readouterr()
    assert code == 2
    assert "line 1" in captured.err


def test_missing_input_exits_two(tmp_path, capsys):
    code = main(["svd", str(tmp_path / "absent.qmat"), "--out-dir", str(tmp_path / "out")])
    captured = capsys.readouterr()
    assert code == 2
    assert "no such file" in captured.err


def test_unknown_command_exits_two(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()
