"""QMAT / RMAT text formats, version 1.

QMAT: line 1 ``QMAT 1``, line 2 ``<rows> <cols>``, then rows*cols lines of
four whitespace-separated floats ``w x y z`` in row-major order.  RMAT is
the same with header ``RMAT 1`` and one float per line.  Files are UTF-8
with LF line endings; lines starting with ``#`` are ignored.  Floats are
written with shortest round-trip formatting, so write/parse is bit-exact.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import FormatError
from .qmat import QMatrix, RMatrix

QMAT_MAGIC = "QMAT"
RMAT_MAGIC = "RMAT"
FORMAT_VERSION = 1


def _fmt(value: float) -> str:
    return repr(float(value))


def write_qmatrix(matrix: QMatrix, path) -> None:
    lines = [f"{QMAT_MAGIC} {FORMAT_VERSION}", f"{matrix.rows} {matrix.cols}"]
    for row in matrix.data.reshape(-1, 4):
        lines.append(" ".join(_fmt(c) for c in row))
    _write_lines(path, lines)


def write_rmatrix(matrix: RMatrix, path) -> None:
    lines = [f"{RMAT_MAGIC} {FORMAT_VERSION}", f"{matrix.rows} {matrix.cols}"]
    lines.extend(_fmt(v) for v in matrix.data.ravel())
    _write_lines(path, lines)


def read_qmatrix(path) -> QMatrix:
    rows, cols, values = _read_body(path, QMAT_MAGIC, per_line=4)
    return QMatrix(values.reshape(rows, cols, 4))


def read_rmatrix(path) -> RMatrix:
    rows, cols, values = _read_body(path, RMAT_MAGIC, per_line=1)
    return RMatrix(values.reshape(rows, cols))


def _write_lines(path, lines) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")


def _content_lines(path):
    """Yield (line_no, stripped_text) skipping comments and blank lines."""
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            text = raw.rstrip("\n").rstrip("\r")
            if not text.strip() or text.lstrip().startswith("#"):
                continue
            yield line_no, text


def _read_body(path, magic, per_line):
    lines = _content_lines(path)

    line_no, header = _next_line(lines, "missing header")
    parts = header.split()
    if parts != [magic, str(FORMAT_VERSION)]:
        raise FormatError(line_no, f"expected header '{magic} {FORMAT_VERSION}', got {header!r}")

    line_no, dims = _next_line(lines, "missing dimensions line")
    fields = dims.split()
    if len(fields) != 2:
        raise FormatError(line_no, f"expected '<rows> <cols>', got {dims!r}")
    try:
        rows, cols = int(fields[0]), int(fields[1])
    except ValueError:
        raise FormatError(line_no, f"dimensions must be integers, got {dims!r}") from None
    if rows < 1 or cols < 1:
        raise FormatError(line_no, f"dimensions must be positive, got {rows} x {cols}")

    count = rows * cols
    values = np.empty(count * per_line, dtype=np.float64)
    filled = 0
    last_line = line_no
    for line_no, text in lines:
        if filled >= count * per_line:
            raise FormatError(line_no, "unexpected extra data after matrix entries")
        tokens = text.split()
        if len(tokens) != per_line:
            raise FormatError(line_no, f"expected {per_line} value(s) per line, got {len(tokens)}")
        for tok in tokens:
            try:
                values[filled] = float(tok)
            except ValueError:
                raise FormatError(line_no, f"not a float: {tok!r}") from None
            filled += 1
        last_line = line_no
    if filled != count * per_line:
        raise FormatError(last_line, f"expected {count} entry line(s), file ended after "
                                     f"{filled // per_line}")
    return rows, cols, values


def _next_line(lines, missing_message):
    try:
        return next(lines)
    except StopIteration:
        raise FormatError(0, missing_message) from None


def matrix_file_kind(path) -> str:
    """Peek at the header magic of a matrix file ('QMAT' or 'RMAT')."""
    name = os.fspath(path)
    for _, text in _content_lines(name):
        return text.split()[0]
    raise FormatError(0, "empty file")
