"""Dense quaternion matrices and vectors.

Storage is a row-major float64 component array with a trailing axis of
length 4 holding ``(w, x, y, z)``.  All products expand the Hamilton
product into real operations on the component slices, which keeps the
non-commutative ordering explicit.
"""

from __future__ import annotations

import numpy as np

from .errors import ShapeMismatch
from .quat import Quaternion

__all__ = ["QMatrix", "QVector", "RMatrix", "random_qmatrix"]


# ---------------------------------------------------------------------------
# component-array helpers (shapes: matrices (r, c, 4), vectors (n, 4))

def _as_components(data, expected_ndim):
    arr = np.asarray(data, dtype=np.float64)
    if arr.ndim != expected_ndim or arr.shape[-1] != 4:
        raise ShapeMismatch(
            f"expected component array of ndim {expected_ndim} with trailing axis 4, "
            f"got shape {arr.shape}")
    return np.ascontiguousarray(arr)


def _conj(a):
    out = a.copy()
    out[..., 1:] = -out[..., 1:]
    return out


def _hmatmul(a, b):
    """Hamilton product of component arrays (r, m, 4) @ (m, c, 4)."""
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    bw, bx, by, bz = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack([
        aw @ bw - ax @ bx - ay @ by - az @ bz,
        aw @ bx + ax @ bw + ay @ bz - az @ by,
        aw @ by - ax @ bz + ay @ bw + az @ bx,
        aw @ bz + ax @ by - ay @ bx + az @ bw,
    ], axis=-1)


def _hscale(q, a, side):
    """Multiply every entry of `a` by the quaternion 4-tuple `q` on one side."""
    qw, qx, qy, qz = q
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    if side == "left":
        return np.stack([
            qw * aw - qx * ax - qy * ay - qz * az,
            qw * ax + qx * aw + qy * az - qz * ay,
            qw * ay - qx * az + qy * aw + qz * ax,
            qw * az + qx * ay - qy * ax + qz * aw,
        ], axis=-1)
    return np.stack([
        aw * qw - ax * qx - ay * qy - az * qz,
        aw * qx + ax * qw + ay * qz - az * qy,
        aw * qy - ax * qz + ay * qw + az * qx,
        aw * qz + ax * qy - ay * qx + az * qw,
    ], axis=-1)


def _safe_norm(flat):
    # Scale by the largest component so squaring cannot overflow.
    if flat.size == 0:
        return 0.0
    m = float(np.max(np.abs(flat)))
    if m == 0.0 or not np.isfinite(m):
        return m
    scaled = flat / m
    return m * float(np.sqrt(np.dot(scaled, scaled)))


# ---------------------------------------------------------------------------


class QVector:
    """Dense quaternion vector backed by an (n, 4) component array."""

    __slots__ = ("data",)

    def __init__(self, data):
        self.data = _as_components(data, 2)
        if len(self.data) < 1:
            raise ShapeMismatch("vector must have at least one entry")

    @classmethod
    def zeros(cls, n: int) -> QVector:
        return cls(np.zeros((n, 4)))

    @classmethod
    def from_quaternions(cls, entries) -> QVector:
        rows = [_entry_components(q) for q in entries]
        return cls(np.array(rows, dtype=np.float64))

    def __len__(self) -> int:
        return len(self.data)

    def __getitem__(self, i: int) -> Quaternion:
        return Quaternion(*self.data[i])

    def __setitem__(self, i: int, value):
        self.data[i] = _entry_components(value)

    def conjugate(self) -> QVector:
        return QVector(_conj(self.data))

    def norm(self) -> float:
        """Euclidean norm, the square root of the summed squared moduli."""
        return _safe_norm(self.data.ravel())

    def dot_transpose(self, other: QVector) -> Quaternion:
        """Plain transpose inner product sum_i self[i] * other[i] (no conjugation)."""
        if len(self) != len(other):
            raise ShapeMismatch("vector lengths differ")
        prod = _hmatmul(self.data[np.newaxis, :, :], other.data[:, np.newaxis, :])
        return Quaternion(*prod[0, 0])

    def outer_hermitian(self) -> QMatrix:
        """Rank-one Hermitian matrix with entries ``u_i * conj(u_j)``."""
        u = self.data
        out = _hmatmul(u[:, np.newaxis, :], _conj(u)[np.newaxis, :, :])
        # Mirror the strict triangle: (i,j) and (j,i) sum the same products in
        # different orders, so symmetry would otherwise hold only to rounding.
        i, j = np.triu_indices(len(u), 1)
        out[j, i, 0] = out[i, j, 0]
        out[j, i, 1:] = -out[i, j, 1:]
        # Diagonal entries are |u_i|^2: wipe the vector-part rounding residue.
        k = np.arange(len(u))
        out[k, k, 1:] = 0.0
        return QMatrix(out)

    def as_column(self) -> QMatrix:
        return QMatrix(self.data[:, np.newaxis, :].copy())

    def as_row(self) -> QMatrix:
        return QMatrix(self.data[np.newaxis, :, :].copy())

    def copy(self) -> QVector:
        return QVector(self.data.copy())

    def __repr__(self) -> str:
        return f"QVector(len={len(self)})"


class QMatrix:
    """Dense quaternion matrix backed by an (rows, cols, 4) component array."""

    __slots__ = ("data",)

    def __init__(self, data):
        self.data = _as_components(data, 3)
        if self.rows < 1 or self.cols < 1:
            raise ShapeMismatch("matrix must have at least one row and column")

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> QMatrix:
        return cls(np.zeros((rows, cols, 4)))

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        data = np.zeros((n, n, 4))
        data[np.arange(n), np.arange(n), 0] = 1.0
        return cls(data)

    @classmethod
    def from_quaternions(cls, rows) -> QMatrix:
        data = [[_entry_components(q) for q in row] for row in rows]
        return cls(np.array(data, dtype=np.float64))

    def __getitem__(self, ij) -> Quaternion:
        i, j = ij
        return Quaternion(*self.data[i, j])

    def __setitem__(self, ij, value):
        i, j = ij
        self.data[i, j] = _entry_components(value)

    def column(self, j: int) -> QVector:
        return QVector(self.data[:, j, :].copy())

    def row(self, i: int) -> QVector:
        return QVector(self.data[i, :, :].copy())

    def conjugate(self) -> QMatrix:
        return QMatrix(_conj(self.data))

    def conj_transpose(self) -> QMatrix:
        """Transpose with entrywise conjugation (the quaternion adjoint)."""
        return QMatrix(np.ascontiguousarray(_conj(self.data).swapaxes(0, 1)))

    def __matmul__(self, other):
        if isinstance(other, RMatrix):
            other = other.promote()
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return QMatrix(_hmatmul(self.data, other.data))

    def __add__(self, other: QMatrix) -> QMatrix:
        if self.shape != other.shape:
            raise ShapeMismatch("shapes differ")
        return QMatrix(self.data + other.data)

    def __sub__(self, other: QMatrix) -> QMatrix:
        if self.shape != other.shape:
            raise ShapeMismatch("shapes differ")
        return QMatrix(self.data - other.data)

    def scale_left(self, q: Quaternion) -> QMatrix:
        return QMatrix(_hscale((q.w, q.x, q.y, q.z), self.data, "left"))

    def scale_right(self, q: Quaternion) -> QMatrix:
        return QMatrix(_hscale((q.w, q.x, q.y, q.z), self.data, "right"))

    def frobenius_norm(self) -> float:
        return _safe_norm(self.data.ravel())

    def max_abs_vector_part(self) -> float:
        """Largest magnitude of any imaginary component; 0 for a real matrix."""
        if self.data.size == 0:
            return 0.0
        return float(np.max(np.abs(self.data[..., 1:])))

    def real_part(self) -> RMatrix:
        return RMatrix(self.data[..., 0].copy())

    def is_unitary(self, tol: float) -> bool:
        """Whether both ``conj_transpose(A) @ A`` and ``A @ conj_transpose(A)``
        are within `tol` of the identity in Frobenius norm."""
        if self.rows != self.cols:
            raise ShapeMismatch("unitarity is defined for square matrices only")
        ct = self.conj_transpose()
        eye = QMatrix.identity(self.rows)
        left = (ct @ self) - eye
        right = (self @ ct) - eye
        return left.frobenius_norm() <= tol and right.frobenius_norm() <= tol

    def copy(self) -> QMatrix:
        return QMatrix(self.data.copy())

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols})"


class RMatrix:
    """Dense real matrix.  A separate type so that realness is a guarantee,
    not a convention about small vector parts."""

    __slots__ = ("data",)

    def __init__(self, data):
        arr = np.asarray(data, dtype=np.float64)
        if arr.ndim != 2:
            raise ShapeMismatch(f"expected a 2-d real array, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ShapeMismatch("matrix must have at least one row and column")
        self.data = np.ascontiguousarray(arr)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RMatrix:
        return cls(np.zeros((rows, cols)))

    @classmethod
    def identity(cls, n: int) -> RMatrix:
        return cls(np.eye(n))

    def __getitem__(self, ij) -> float:
        return float(self.data[ij])

    def __setitem__(self, ij, value):
        self.data[ij] = float(value)

    def transpose(self) -> RMatrix:
        return RMatrix(self.data.T.copy())

    def promote(self) -> QMatrix:
        """Embed as a quaternion matrix with zero vector parts."""
        out = np.zeros((self.rows, self.cols, 4))
        out[..., 0] = self.data
        return QMatrix(out)

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            return self.promote() @ other
        if not isinstance(other, RMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return RMatrix(self.data @ other.data)

    def frobenius_norm(self) -> float:
        return _safe_norm(self.data.ravel())

    def copy(self) -> RMatrix:
        return RMatrix(self.data.copy())

    def __repr__(self) -> str:
        return f"RMatrix({self.rows}x{self.cols})"


def _entry_components(value):
    if isinstance(value, Quaternion):
        return (value.w, value.x, value.y, value.z)
    if isinstance(value, (int, float)):
        return (float(value), 0.0, 0.0, 0.0)
    arr = np.asarray(value, dtype=np.float64)
    if arr.shape != (4,):
        raise ShapeMismatch("matrix entry must be a Quaternion, a real number, "
                            "or a length-4 component sequence")
    return tuple(arr)


def random_qmatrix(rows: int, cols: int, rng: np.random.Generator) -> QMatrix:
    """Matrix with all 4*rows*cols components uniform on [-1, 1]."""
    return QMatrix(rng.uniform(-1.0, 1.0, size=(rows, cols, 4)))
