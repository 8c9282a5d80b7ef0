"""Command-line front end for batch work on QMAT/RMAT files.

Commands: ``gen`` (seeded random matrix), ``bidiag`` (real bidiagonal
reduction), ``svd`` (full decomposition), ``check`` (verify stored
factors against the source matrix), ``adjoint-svs`` (oracle singular
values).  Exit codes: 0 success/pass, 1 verification failure, 2 parse
or shape problems, 3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .errors import FormatError, NoConvergence, ShapeMismatch
from .formats import read_qmatrix, read_rmatrix, write_qmatrix, write_rmatrix
from .oracle import adjoint_singular_values
from .bidiag import bidiagonalize
from .qmat import RMatrix, random_qmatrix
from .qsvd import QsvdResult, qsvd, verify

__all__ = ["main", "entry"]


class _CommandError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _tolerance(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0.0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def _read(path: str, reader):
    try:
        return reader(path)
    except FileNotFoundError:
        raise _CommandError(2, f"{path}: no such file") from None
    except FormatError as err:
        raise _CommandError(2, f"{path}: {err}") from None
    except OSError as err:
        raise _CommandError(2, f"{path}: {err}") from None


def _out_dir(ns) -> Path:
    directory = Path(ns.out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    return directory


def _run_gen(ns) -> int:
    rng = np.random.Generator(np.random.PCG64(ns.seed))
    matrix = random_qmatrix(ns.rows, ns.cols, rng)
    Path(ns.out).parent.mkdir(parents=True, exist_ok=True)
    write_qmatrix(matrix, ns.out)
    return 0


def _run_bidiag(ns) -> int:
    a = _read(ns.input, read_qmatrix)
    result = bidiagonalize(a)
    directory = _out_dir(ns)
    write_qmatrix(result.left, directory / "L.qmat")
    write_rmatrix(result.bidiagonal, directory / "B.rmat")
    write_qmatrix(result.right, directory / "R.qmat")
    return 0


def _run_svd(ns) -> int:
    a = _read(ns.input, read_qmatrix)
    result = qsvd(a, want_vectors=not ns.values_only)
    directory = _out_dir(ns)
    sig = np.zeros(a.shape)
    n = len(result.sigma)
    sig[:n, :n] = np.diag(result.sigma)
    write_rmatrix(RMatrix(sig), directory / "S.rmat")
    if not ns.values_only:
        write_qmatrix(result.u, directory / "U.qmat")
        write_qmatrix(result.v, directory / "V.qmat")
    return 0


def _sigma_from_file(s: RMatrix, rows: int, cols: int) -> np.ndarray:
    if s.shape != (rows, cols):
        raise ShapeMismatch(
            f"singular value matrix is {s.rows}x{s.cols}, expected {rows}x{cols}")
    return np.diagonal(s.data)[: min(rows, cols)].copy()


def _run_check(ns) -> int:
    a = _read(ns.input, read_qmatrix)
    u = _read(ns.u, read_qmatrix)
    s = _read(ns.s, read_rmatrix)
    v = _read(ns.v, read_qmatrix)
    r, c = a.shape
    if u.shape != (r, r):
        raise ShapeMismatch(f"U is {u.rows}x{u.cols}, expected {r}x{r}")
    if v.shape != (c, c):
        raise ShapeMismatch(f"V is {v.rows}x{v.cols}, expected {c}x{c}")
    sigma = _sigma_from_file(s, r, c)

    report = verify(a, QsvdResult(u=u, sigma=sigma, v=v), tol=ns.tol)
    for check in report.checks:
        status = "pass" if check.passed else "FAIL"
        print(f"{check.name}: {check.value:.6e} (bound {check.bound:.6e}) {status}")
    if report.passed:
        print("PASS")
        return 0
    print("FAIL: " + ", ".join(c.name for c in report.failures()))
    return 1


def _run_adjoint_svs(ns) -> int:
    a = _read(ns.input, read_qmatrix)
    for value in adjoint_singular_values(a):
        print(repr(float(value)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatsvd",
        description="Quaternion matrix SVD toolbox over QMAT/RMAT text files.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a seeded random quaternion matrix")
    gen.add_argument("--rows", type=_positive_int, required=True)
    gen.add_argument("--cols", type=_positive_int, required=True)
    gen.add_argument("--seed", type=_seed, required=True)
    gen.add_argument("--out", required=True, help="output QMAT path")
    gen.set_defaults(func=_run_gen)

    bid = sub.add_parser("bidiag", help="reduce to a real bidiagonal matrix")
    bid.add_argument("input", help="input QMAT path")
    bid.add_argument("--out-dir", required=True, help="directory for L.qmat, B.rmat, R.qmat")
    bid.set_defaults(func=_run_bidiag)

    svd = sub.add_parser("svd", help="full singular value decomposition")
    svd.add_argument("input", help="input QMAT path")
    svd.add_argument("--out-dir", required=True, help="directory for U.qmat, S.rmat, V.qmat")
    svd.add_argument("--values-only", action="store_true",
                     help="skip singular vectors; write S.rmat only")
    svd.set_defaults(func=_run_svd)

    chk = sub.add_parser("check", help="verify stored factors against a matrix")
    chk.add_argument("input", help="source QMAT path")
    chk.add_argument("--u", required=True, help="U.qmat path")
    chk.add_argument("--s", required=True, help="S.rmat path")
    chk.add_argument("--v", required=True, help="V.qmat path")
    chk.add_argument("--tol", type=_tolerance, default=1e-10)
    chk.set_defaults(func=_run_check)

    adj = sub.add_parser("adjoint-svs", help="singular values via the real adjoint oracle")
    adj.add_argument("input", help="input QMAT path")
    adj.set_defaults(func=_run_adjoint_svs)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return ns.func(ns)
    except _CommandError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code
    except (ShapeMismatch, FormatError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except NoConvergence as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
