"""Reduction of a quaternion matrix to a real bidiagonal matrix.

``bidiagonalize`` alternates left and right Householder reflectors: the
left one sends the trailing part of column k to ``alpha * e1`` (alpha a
nonnegative real), the right one does the same to the trailing part of
row k.  Every value the construction guarantees to vanish — entries
below/right of the band and the vector parts of band entries — is then
written as exact zero, with the discarded magnitude folded into a
diagnostic, so the returned B is real and banded by construction rather
than up to rounding noise.

Tall-or-square input yields an upper bidiagonal B; a wide matrix is
handled by reducing its conjugate transpose and transposing back, which
gives a lower bidiagonal B.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotBidiagonal
from .householder import (HouseholderReflector, _apply_left_block,
                          _apply_right_block, _z4, left_householder,
                          right_householder)
from .qmat import QMatrix, QVector, RMatrix

__all__ = ["BidiagResult", "bidiagonalize", "check_bidiagonal", "extract_band"]


@dataclass(frozen=True)
class BidiagResult:
    """Factors with ``left @ A @ right == bidiagonal`` (promoted to quaternion)."""
    left: QMatrix | None
    bidiagonal: RMatrix
    right: QMatrix | None
    upper: bool
    snap_residue: float


def _unit_target(n: int) -> np.ndarray:
    v = np.zeros(n)
    v[0] = 1.0
    return v


def _reflect(h: HouseholderReflector, block: np.ndarray, left: bool) -> np.ndarray:
    if h.is_identity:
        return block
    if left:
        return _apply_left_block(h.u.data, _z4(h), block)
    return _apply_right_block(h.u.data, _z4(h), block)


def bidiagonalize(a: QMatrix, accumulate: bool = True) -> BidiagResult:
    """Compute unitary L (r x r) and R (c x c) with L A R real bidiagonal.

    With ``accumulate=False`` the factors are skipped (returned as None)
    and only the band and the snap diagnostic are produced.
    """
    r, c = a.shape
    if c > r:
        flipped = bidiagonalize(a.conj_transpose(), accumulate=accumulate)
        return BidiagResult(
            left=flipped.right.conj_transpose() if accumulate else None,
            bidiagonal=RMatrix(flipped.bidiagonal.data.T.copy()),
            right=flipped.left.conj_transpose() if accumulate else None,
            upper=False,
            snap_residue=flipped.snap_residue,
        )

    work = a.data.copy()
    lacc = QMatrix.identity(r).data if accumulate else None
    racc = QMatrix.identity(c).data if accumulate else None
    residue = 0.0

    for k in range(c):
        col = QVector(work[k:, k, :].copy())
        h = left_householder(col, _unit_target(r - k))
        work[k:, k:, :] = _reflect(h, work[k:, k:, :], left=True)
        if accumulate:
            lacc[k:, :, :] = _reflect(h, lacc[k:, :, :], left=True)

        # The reflector sent this column to a real multiple of e1; anything
        # left over is rounding noise.  Measure it, then zero it.
        residue = max(residue, float(np.linalg.norm(work[k, k, 1:])),
                      _max_entry_norm(work[k + 1:, k, :]))
        work[k, k, 1:] = 0.0
        work[k + 1:, k, :] = 0.0

        if k <= c - 2:
            row = QVector(work[k, k + 1:, :].copy())
            g = right_householder(row, _unit_target(c - 1 - k))
            work[k:, k + 1:, :] = _reflect(g, work[k:, k + 1:, :], left=False)
            if accumulate:
                racc[:, k + 1:, :] = _reflect(g, racc[:, k + 1:, :], left=False)

            residue = max(residue, float(np.linalg.norm(work[k, k + 1, 1:])),
                          _max_entry_norm(work[k, k + 2:, :]))
            work[k, k + 1, 1:] = 0.0
            work[k, k + 2:, :] = 0.0

    return BidiagResult(
        left=QMatrix(lacc) if accumulate else None,
        bidiagonal=RMatrix(work[:, :, 0].copy()),
        right=QMatrix(racc) if accumulate else None,
        upper=True,
        snap_residue=residue,
    )


def _max_entry_norm(block: np.ndarray) -> float:
    if block.size == 0:
        return 0.0
    return float(np.linalg.norm(block, axis=-1).max())


def check_bidiagonal(b: RMatrix, upper: bool, tol: float = 0.0) -> bool:
    """True iff every entry outside the diagonal and the adjacent
    off-diagonal (super for upper, sub for lower) has magnitude <= tol."""
    m = b.data
    rows, cols = m.shape
    i, j = np.indices((rows, cols))
    band = (j == i) | ((j == i + 1) if upper else (j == i - 1))
    outside = m[~band]
    return bool(outside.size == 0 or np.abs(outside).max() <= tol)


def extract_band(b: RMatrix, lower: bool = False):
    """Compact (d, e) form of a bidiagonal matrix: d the diagonal of the
    leading n x n block (n = min(r, c)), e the adjacent off-diagonal,
    length n - 1.  A lower bidiagonal input is transposed first."""
    m = b.data.T if lower else b.data
    rows, cols = m.shape
    if not check_bidiagonal(RMatrix(m), upper=True):
        raise NotBidiagonal("matrix has entries outside the bidiagonal band")
    n = min(rows, cols)
    d = np.array([m[i, i] for i in range(n)])
    e = np.array([m[i, i + 1] for i in range(n - 1)])
    return d, e
