"""Householder bidiagonalization of quaternion matrices."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatsvd import (
    NotBidiagonal,
    QMatrix,
    QVector,
    Quaternion,
    RMatrix,
    bidiagonalize,
    check_bidiagonal,
    extract_band,
    form_matrix,
    left_householder,
    random_qmatrix,
    right_householder,
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)
dims = st.integers(min_value=1, max_value=7)


def e1(n):
    v = np.zeros(n)
    v[0] = 1.0
    return v


def recon_error(a: QMatrix, res) -> float:
    lhs = res.left @ a @ res.right
    return (lhs - res.bidiagonal.promote()).frobenius_norm()


def unitary_error(q: QMatrix) -> float:
    n = q.rows
    ident = QMatrix.identity(n)
    return max(
        ((q @ q.conj_transpose()) - ident).frobenius_norm(),
        ((q.conj_transpose() @ q) - ident).frobenius_norm(),
    )


# --- frozen examples ---------------------------------------------------------


def test_one_by_one_example():
    q = Quaternion(1, 1, 1, 1)
    res = bidiagonalize(QMatrix.from_quaternions([[q]]))
    assert res.upper
    assert res.bidiagonal.data.shape == (1, 1)
    assert abs(res.bidiagonal.data[0, 0] - 2.0) <= 1e-15
    # L is conj(q)/2, R is the 1x1 identity (no right reflector fires)
    expect = np.array([[[0.5, -0.5, -0.5, -0.5]]])
    assert np.allclose(res.left.data, expect, atol=1e-15, rtol=0)
    assert np.array_equal(res.right.data, QMatrix.identity(1).data)


def test_zero_matrix_is_fixed_point():
    a = QMatrix.zeros(3, 2)
    res = bidiagonalize(a)
    assert np.array_equal(res.left.data, QMatrix.identity(3).data)
    assert np.array_equal(res.right.data, QMatrix.identity(2).data)
    assert np.array_equal(res.bidiagonal.data, np.zeros((3, 2)))
    assert res.snap_residue == 0.0
    assert res.upper


def test_real_matrix_stays_real_valued():
    a = RMatrix(np.array([[3.0, 0.0], [4.0, 0.0], [0.0, 1.0]])).promote()
    res = bidiagonalize(a)
    assert recon_error(a, res) <= 1e-14
    assert abs(res.bidiagonal.data[0, 0] - 5.0) <= 1e-14


# --- reference implementation cross-check ------------------------------------


def _embed(m: QMatrix, size: int, offset: int) -> QMatrix:
    full = QMatrix.identity(size).data
    full[offset:, offset:, :] = m.data
    return QMatrix(full)


def explicit_bidiagonalize(a: QMatrix):
    """Slow reference: form every reflector as a dense matrix and multiply."""
    r, c = a.shape
    if c > r:
        lt, bt, rt = explicit_bidiagonalize(a.conj_transpose())
        return rt.conj_transpose(), RMatrix(bt.data.T.copy()), lt.conj_transpose()
    left = QMatrix.identity(r)
    right = QMatrix.identity(c)
    work = a.copy()
    for k in range(c):
        h = left_householder(QVector(work.data[k:, k, :].copy()), e1(r - k))
        hm = _embed(form_matrix(h), r, k)
        work = hm @ work
        left = hm @ left
        if k <= c - 2:
            g = right_householder(QVector(work.data[k, k + 1 :, :].copy()), e1(c - 1 - k))
            gm = _embed(form_matrix(g), c, k + 1)
            work = work @ gm
            right = right @ gm
    return left, RMatrix(work.data[..., 0].copy()), right


@given(seeds, dims, dims)
@settings(max_examples=40, deadline=None)
def test_matches_dense_reference(seed, r, c):
    rng = np.random.default_rng(seed)
    a = random_qmatrix(r, c, rng)
    res = bidiagonalize(a)
    left, band, right = explicit_bidiagonalize(a)
    scale = max(a.frobenius_norm(), 1.0)
    assert (res.left - left).frobenius_norm() <= 1e-10 * scale
    assert (res.right - right).frobenius_norm() <= 1e-10 * scale
    assert np.linalg.norm(res.bidiagonal.data - band.data) <= 1e-10 * scale


# --- contract properties ------------------------------------------------------


@given(seeds, dims, dims)
@settings(max_examples=60, deadline=None)
def test_factorization_contract(seed, r, c):
    rng = np.random.default_rng(seed)
    a = random_qmatrix(r, c, rng)
    res = bidiagonalize(a)
    norm = a.frobenius_norm()
    m = max(r, c)

    assert res.upper == (c <= r)
    assert res.bidiagonal.data.shape == (r, c)
    # band is exactly banded and exactly real: snapping is part of the contract
    assert check_bidiagonal(res.bidiagonal, upper=res.upper, tol=0.0)
    assert res.snap_residue <= 1e-12 * norm
    assert recon_error(a, res) <= 1e-12 * m * norm
    assert unitary_error(res.left) <= 1e-11 * m
    assert unitary_error(res.right) <= 1e-11 * m
    # unitary maps preserve the Frobenius norm, so the band inherits it
    assert res.bidiagonal.frobenius_norm() == pytest.approx(norm, rel=1e-12, abs=1e-13)


@given(seeds, dims, dims)
@settings(max_examples=30, deadline=None)
def test_band_only_mode_matches(seed, r, c):
    rng = np.random.default_rng(seed)
    a = random_qmatrix(r, c, rng)
    full = bidiagonalize(a)
    lean = bidiagonalize(a, accumulate=False)
    assert lean.left is None and lean.right is None
    assert np.array_equal(lean.bidiagonal.data, full.bidiagonal.data)
    assert lean.snap_residue == full.snap_residue
    assert lean.upper == full.upper


def test_wide_matrix_gives_lower_band():
    rng = np.random.default_rng(7)
    a = random_qmatrix(2, 5, rng)
    res = bidiagonalize(a)
    assert not res.upper
    assert check_bidiagonal(res.bidiagonal, upper=False, tol=0.0)
    assert not check_bidiagonal(res.bidiagonal, upper=True, tol=0.0)
    assert recon_error(a, res) <= 1e-12 * 5 * a.frobenius_norm()


# --- band predicates ----------------------------------------------------------


@pytest.mark.parametrize(
    "m, upper, ok",
    [
        ([[1.0, 0.0], [0.0, 1.0]], True, True),
        ([[1.0, 0.0], [1.0, 1.0]], True, False),
        ([[1.0, 0.0], [1.0, 1.0]], False, True),
        ([[1.0, 2.0, 0.0], [0.0, 3.0, 4.0]], True, True),
        ([[1.0, 2.0, 5.0], [0.0, 3.0, 4.0]], True, False),
        ([[1.0], [2.0], [0.0]], False, True),
        ([[1.0], [2.0], [0.0]], True, False),
    ],
)
def test_check_bidiagonal_table(m, upper, ok):
    assert check_bidiagonal(RMatrix(np.array(m)), upper=upper) == ok


def test_check_bidiagonal_tolerance():
    m = RMatrix(np.array([[1.0, 0.0], [1e-13, 1.0]]))
    assert not check_bidiagonal(m, upper=True)
    assert check_bidiagonal(m, upper=True, tol=1e-12)


@pytest.mark.parametrize(
    "m, lower, d, e",
    [
        ([[3.0, 0.0], [0.0, 4.0]], False, [3.0, 4.0], [0.0]),
        ([[1.0, 1.0], [0.0, 1.0]], False, [1.0, 1.0], [1.0]),
        # wide upper band: the entry hanging past the square block drops off
        ([[1.0, 2.0, 0.0], [0.0, 3.0, 4.0]], False, [1.0, 3.0], [2.0]),
        ([[1.0, 0.0], [2.0, 3.0], [0.0, 4.0]], True, [1.0, 3.0], [2.0]),
        ([[5.0]], False, [5.0], []),
    ],
)
def test_extract_band_table(m, lower, d, e):
    got_d, got_e = extract_band(RMatrix(np.array(m)), lower=lower)
    assert np.array_equal(got_d, np.array(d))
    assert np.array_equal(got_e, np.array(e))


def test_extract_band_rejects_full_matrix():
    with pytest.raises(NotBidiagonal):
        extract_band(RMatrix(np.array([[1.0, 1.0], [1.0, 1.0]])))


def test_extract_band_respects_lower_flag():
    m = RMatrix(np.array([[1.0, 0.0], [2.0, 3.0]]))
    with pytest.raises(NotBidiagonal):
        extract_band(m)  # read as upper it has a stray subdiagonal
    d, e = extract_band(m, lower=True)
    assert np.array_equal(d, [1.0, 3.0])
    assert np.array_equal(e, [2.0])
