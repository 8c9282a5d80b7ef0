"""Independent singular-value oracle via the real adjoint representation.

Each quaternion entry q = w + xi + yj + zk maps to the 4x4 real block of
left-multiplication by q, turning an r x c quaternion matrix into a
4r x 4c real one with the same singular values, each repeated four
times.  The squared values are recovered as eigenvalues of the Gram
matrix by a cyclic Jacobi sweep — deliberately a different algorithm
family from the QR kernel in rsvd, so the two routes share no code.

Only suitable as a test/reference path: the Gram matrix squares the
condition number, so values below ~1e-7 of the largest are unreliable.
"""

from __future__ import annotations

import numpy as np

from .errors import GroupingFailure, NoConvergence, NotSymmetric
from .qmat import QMatrix, RMatrix

MAX_SWEEPS = 50

__all__ = ["real_adjoint", "jacobi_eigen", "adjoint_singular_values"]

# Left-multiplication blocks of the quaternion units: chi(q) = w I + x E1 + y E2 + z E3.
_E1 = np.array([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], dtype=np.float64)
_E2 = np.array([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]], dtype=np.float64)
_E3 = np.array([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]], dtype=np.float64)


def real_adjoint(a: QMatrix) -> RMatrix:
    """4r x 4c real block matrix acting on quaternion columns written out
    as four real coordinates.  Ring homomorphism: adjoint(A @ B) equals
    adjoint(A) @ adjoint(B), and conjugate-transpose maps to transpose."""
    comps = a.data
    out = np.kron(comps[..., 0], np.eye(4))
    out += np.kron(comps[..., 1], _E1)
    out += np.kron(comps[..., 2], _E2)
    out += np.kron(comps[..., 3], _E3)
    return RMatrix(out)


def jacobi_eigen(s: RMatrix) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
    ascending.  Raises NotSymmetric when the input is not symmetric to
    1e-12 relative, NoConvergence after 50 full sweeps."""
    a = s.data
    if a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"matrix is {a.shape[0]}x{a.shape[1]}, not square")
    norm = float(np.linalg.norm(a))
    if float(np.linalg.norm(a - a.T)) > 1e-12 * max(norm, 1e-300):
        raise NotSymmetric("matrix is not symmetric within 1e-12 relative")

    a = (a + a.T) / 2.0
    n = a.shape[0]
    if n == 1 or norm == 0.0:
        return np.sort(np.diag(a))

    for _ in range(MAX_SWEEPS):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= 1e-14 * norm:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-15 * norm / n:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau == 0.0:
                    t = 1.0
                else:
                    t = np.sign(tau) / (abs(tau) + np.sqrt(tau * tau + 1.0))
                c = 1.0 / np.sqrt(1.0 + t * t)
                sn = t * c
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - sn * row_q
                a[q, :] = sn * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - sn * col_q
                a[:, q] = sn * col_p + c * col_q

    off = float(np.linalg.norm(a - np.diag(np.diag(a))))
    if off <= 1e-14 * norm:
        return np.sort(np.diag(a))
    raise NoConvergence(f"Jacobi sweep limit ({MAX_SWEEPS}) reached, off-diagonal {off:.3e}")


def adjoint_singular_values(a: QMatrix) -> np.ndarray:
    """Singular values of a quaternion matrix, descending, computed
    entirely through the real adjoint.

    Every singular value shows up four times in the adjoint's spectrum;
    the sorted square roots are partitioned into min(r, c) consecutive
    runs of 4 and each run is collapsed to its mean.  A run wider than
    1e-8 of the largest value means the fourfold structure was lost to
    conditioning and raises GroupingFailure.
    """
    if a.cols > a.rows:
        a = a.conj_transpose()  # Gram on the smaller side: exactly 4*min(r,c) eigenvalues
    chi = real_adjoint(a).data
    gram = RMatrix(chi.T @ chi)
    eigs = jacobi_eigen(gram)
    vals = np.sqrt(np.clip(eigs, 0.0, None))[::-1]  # descending

    n = len(vals) // 4
    groups = vals.reshape(n, 4)
    top = float(vals[0]) if len(vals) else 0.0
    spread = float((groups[:, 0] - groups[:, -1]).max())
    if spread > 1e-8 * top:
        raise GroupingFailure(
            f"fourfold multiplicity not resolved: group spread {spread:.3e} "
            f"exceeds 1e-8 * {top:.3e}")
    return groups.mean(axis=1)
