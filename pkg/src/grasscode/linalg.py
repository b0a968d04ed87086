"""Dense exact linear algebra over GF(q).

Matrices hold integer-encoded field elements in a numpy array and carry a
reference to their :class:`~grasscode.gf.Field`.  All row operations go
through the field's lookup tables, so every result is exact; there is no
pivoting tolerance.

Text serialization: a header line ``rows cols q`` followed by one line per
row of space-separated canonical integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import Field, field_from_order


def _as_array(field: Field, rows) -> np.ndarray:
    a = np.array(rows, dtype=np.int16)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.size and (a.min() < 0 or a.max() >= field.q):
        raise ValueError(f"matrix entries must lie in [0, {field.q})")
    return a


def rref_array(field: Field, a: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form of ``a`` (not modified) and its pivot columns."""
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    a = a.copy()
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = mul[int(inv[a[r, c]])][a[r]]
        col = a[:, c].copy()
        col[r] = 0
        rows_to_fix = np.nonzero(col)[0]
        if rows_to_fix.size:
            factors = neg[col[rows_to_fix]]
            a[rows_to_fix] = add[a[rows_to_fix], mul[factors[:, None], a[r][None, :]]]
        pivots.append(c)
        r += 1
    return a, tuple(pivots)


def kernel_array(field: Field, a: np.ndarray) -> np.ndarray:
    """Basis of the right null space {v : a @ v = 0}, one vector per row."""
    red, pivots = rref_array(field, a)
    ncols = a.shape[1]
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = np.zeros((len(free), ncols), dtype=np.int16)
    for i, f in enumerate(free):
        out[i, f] = 1
        for r, pc in enumerate(pivots):
            out[i, pc] = field.neg_table[red[r, f]]
    return out


def det_array(field: Field, a: np.ndarray) -> int:
    """Determinant by Gaussian elimination with exact field arithmetic."""
    n, m = a.shape
    if n != m:
        raise ValueError("determinant requires a square matrix")
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    a = a.copy()
    det = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        k = c + int(nz[0])
        if k != c:
            a[[c, k]] = a[[k, c]]
            det = int(neg[det])
        pivot = int(a[c, c])
        det = int(mul[det, pivot])
        pivot_inv = int(inv[pivot])
        for r in range(c + 1, n):
            f = int(a[r, c])
            if f:
                factor = int(mul[f, pivot_inv])
                a[r] = add[a[r], mul[int(neg[factor])][a[c]]]
    return det


def matmul_array(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact matrix product over the field."""
    if a.shape[1] != b.shape[0]:
        raise ValueError("inner dimensions do not match")
    add, mul = field.add_table, field.mul_table
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int16)
    for k in range(a.shape[1]):
        out = add[out, mul[a[:, k][:, None], b[k][None, :]]]
    return out


@dataclass(frozen=True)
class Mat:
    """Immutable matrix over GF(q); ``a`` is a (rows, cols) int array."""

    field: Field
    a: np.ndarray

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Mat":
        return cls(field, _as_array(field, rows))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Mat":
        return cls(field, np.zeros((rows, cols), dtype=np.int16))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        return cls(field, np.eye(n, dtype=np.int16))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def rref(self) -> tuple["Mat", tuple[int, ...]]:
        red, piv = rref_array(self.field, self.a)
        return Mat(self.field, red), piv

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> "Mat":
        return Mat(self.field, kernel_array(self.field, self.a))

    def det(self) -> int:
        return det_array(self.field, self.a)

    def minor(self, colset) -> int:
        """Determinant of the square submatrix on the given column indices.

        ``colset`` must be a strictly increasing tuple of length ``rows``
        with entries below ``cols``.
        """
        cs = tuple(colset)
        if len(cs) != self.rows:
            raise ValueError("column set size must equal the row count")
        if any(c1 >= c2 for c1, c2 in zip(cs, cs[1:])):
            raise ValueError("column set must be strictly increasing")
        if any(not 0 <= c < self.cols for c in cs):
            raise ValueError("column index out of range")
        return det_array(self.field, self.a[:, cs])

    def matmul(self, other: "Mat") -> "Mat":
        if self.field != other.field:
            raise ValueError("field mismatch")
        return Mat(self.field, matmul_array(self.field, self.a, other.a))

    def transpose(self) -> "Mat":
        return Mat(self.field, self.a.T.copy())

    def stack(self, other: "Mat") -> "Mat":
        if self.field != other.field or self.cols != other.cols:
            raise ValueError("incompatible matrices")
        return Mat(self.field, np.vstack([self.a, other.a]))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols} {self.field.q}"]
        lines.extend(" ".join(str(int(v)) for v in row) for row in self.a)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, field: Field | None = None) -> "Mat":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        rows, cols, q = (int(t) for t in lines[0].split())
        if field is None:
            field = field_from_order(q)
        elif field.q != q:
            raise ValueError(f"header field order {q} does not match GF({field.q})")
        data = [[int(t) for t in ln.split()] for ln in lines[1 : rows + 1]]
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("matrix body does not match header dimensions")
        return cls.from_rows(field, data)
