"""Dense exact linear algebra over GF(p).

Canonical reduced row echelon forms, nullspaces, linear solves, and
column-space preimages. Everything is deterministic: pivoting always takes
the first nonzero candidate, canonical bases come from reduced echelon
forms, and free variables receive fixed conventional values.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .field import FieldMismatchError, PrimeField

__all__ = [
    "MatrixGF",
    "rref",
    "rank",
    "nullspace",
    "solve",
    "preimage_of_colspace",
]


class MatrixGF:
    """Immutable dense matrix over a prime field.

    Entries are canonical residues in an int64 array with the writeable
    flag cleared. Row and column counts may be zero.
    """

    __slots__ = ("field", "a")

    def __init__(self, field: PrimeField, entries):
        arr = np.asarray(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"matrix entries must be 2-dimensional, got shape {arr.shape}")
        arr = arr % field.p
        arr.flags.writeable = False
        self.field = field
        self.a = arr

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> MatrixGF:
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> MatrixGF:
        return cls(field, np.zeros((rows, cols), np.int64))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    def transpose(self) -> MatrixGF:
        return MatrixGF(self.field, self.a.T)

    def _check_same_field(self, other: MatrixGF):
        if not isinstance(other, MatrixGF):
            raise TypeError("expected a MatrixGF operand")
        if other.field != self.field:
            raise FieldMismatchError(
                f"cannot combine GF({self.field.p}) and GF({other.field.p}) matrices"
            )

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        self._check_same_field(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch for product: {self.shape} @ {other.shape}")
        return MatrixGF(self.field, (self.a @ other.a) % self.field.p)

    def __add__(self, other: MatrixGF) -> MatrixGF:
        self._check_same_field(other)
        return MatrixGF(self.field, self.a + other.a)

    def __sub__(self, other: MatrixGF) -> MatrixGF:
        self._check_same_field(other)
        return MatrixGF(self.field, self.a - other.a)

    def __neg__(self) -> MatrixGF:
        return MatrixGF(self.field, -self.a)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return self.field == other.field and self.a.shape == other.a.shape and bool(
            np.array_equal(self.a, other.a)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"MatrixGF(GF({self.field.p}), shape={self.a.shape})"

    def rref(self):
        """Canonical reduced row echelon form: (R, rank, pivot columns)."""
        r, rk, piv = kernels.rref_array(self.a, self.field.p)
        return MatrixGF(self.field, r), rk, tuple(int(c) for c in piv)

    def rank(self) -> int:
        return kernels.rank_of_rows(self.a, self.field.p)

    def nullspace(self) -> np.ndarray:
        """Canonical right-nullspace basis, one row per free column.

        Row i of the result is the kernel vector whose i-th free variable
        (free columns taken in increasing order) equals 1 and whose other
        free variables are 0. The zero-dimensional case is a (0, cols)
        array.
        """
        p = self.field.p
        r, rk, piv = kernels.rref_array(self.a, p)
        free = [c for c in range(self.cols) if c not in set(int(x) for x in piv)]
        basis = np.zeros((len(free), self.cols), np.int64)
        for i, f in enumerate(free):
            basis[i, f] = 1
            for row, c in enumerate(piv):
                basis[i, c] = (-int(r[row, f])) % p
        return basis


def rref(m: MatrixGF):
    return m.rref()


def rank(m: MatrixGF) -> int:
    return m.rank()


def nullspace(m: MatrixGF) -> np.ndarray:
    return m.nullspace()


def solve(a: MatrixGF, b) -> np.ndarray | None:
    """One solution x of a @ x = b, or None when the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic. `b` is
    a length-rows vector.
    """
    p = a.field.p
    b = a.field.reduce(b)
    if b.ndim != 1 or b.shape[0] != a.rows:
        raise ValueError(f"right-hand side must have length {a.rows}")
    aug = np.concatenate([a.a, b[:, None]], axis=1)
    r, rk, piv = kernels.rref_array(aug, p)
    x = np.zeros(a.cols, np.int64)
    for row, c in enumerate(piv):
        if c == a.cols:
            return None
        x[c] = r[row, a.cols]
    return x


def preimage_of_colspace(a: MatrixGF, b: MatrixGF) -> np.ndarray:
    """Canonical basis of {c : b @ c lies in the column space of a}.

    Both matrices must have the same number of rows. Solutions (y, c) of
    a @ y = b @ c form the nullspace of [a | -b]; projecting them onto the
    c-block and re-echelonizing gives a canonical basis, returned as rows
    of shape (dim, b.cols).
    """
    if not isinstance(a, MatrixGF) or not isinstance(b, MatrixGF):
        raise TypeError("expected MatrixGF operands")
    if a.field != b.field:
        raise FieldMismatchError("operands live over different fields")
    if a.rows != b.rows:
        raise ValueError(f"row-count mismatch: {a.rows} vs {b.rows}")
    p = a.field.p
    stacked = MatrixGF(a.field, np.concatenate([a.a, (-b.a) % p], axis=1))
    ns = stacked.nullspace()
    proj = ns[:, a.cols :]
    r, rk, _ = kernels.rref_array(proj, p)
    return r[:rk].copy()
