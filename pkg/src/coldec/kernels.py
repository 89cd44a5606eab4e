"""GF(p) elimination kernels.

The hot loops live here in two interchangeable implementations:

* loop-style kernels compiled with numba ``@njit`` (the default whenever
  numba is importable), and
* pure-numpy fallbacks, vectorized one pivot at a time.

``COLDEC_BACKEND`` selects at import: ``numba``, ``numpy``, or ``auto``
(default, meaning numba when available). :func:`select_backend` switches at
runtime; the benchmark uses it to compare both paths in one process.

Both backends return identical public results. Reduced row echelon form
over a field is unique, and every consumer of the incremental accumulator
depends only on ranks and row spans, never on which echelon basis of the
span was stored.

All matrices are C-contiguous int64 arrays of canonical residues; entries
stay below 2**16 so products fit comfortably in int64.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "NUMBA_AVAILABLE",
    "active_backend",
    "select_backend",
    "rref_array",
    "rank_of_rows",
    "Echelon",
    "warmup",
]


def _inv_scalar(a, p):
    """Inverse of a nonzero residue modulo a prime, by extended Euclid."""
    r0, r1 = a, p
    s0, s1 = 1, 0
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % p


# ---------------------------------------------------------------------------
# Loop-style kernels. These are the numba sources; they are only ever called
# through their compiled form (the numpy backend has its own functions).
# ---------------------------------------------------------------------------


def _rref_loops(a, p):
    # In-place reduced row echelon form. Returns (rank, pivot columns).
    rows, cols = a.shape
    piv = np.empty(cols, np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            for t in range(c, cols):
                tmp = a[r, t]
                a[r, t] = a[sel, t]
                a[sel, t] = tmp
        inv = _inv_scalar(a[r, c], p)
        if inv != 1:
            for t in range(c, cols):
                a[r, t] = (a[r, t] * inv) % p
        for i in range(rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for t in range(c, cols):
                    a[i, t] = (a[i, t] - f * a[r, t]) % p
        piv[r] = c
        r += 1
    return r, piv[:r].copy()


def _echelon_insert_loops(basis, pivrow, nbasis, rows, p, stop_rank):
    # Feed `rows` (destroyed) into a pivot-indexed echelon accumulator.
    # basis[0:nbasis] are normalized rows, pivrow[c] = basis row with pivot
    # at column c (or -1). Unused basis rows must be zero-filled. Returns
    # the new rank; stops consuming once it reaches stop_rank.
    rank = nbasis
    nr, cols = rows.shape
    for i in range(nr):
        if rank >= stop_rank:
            break
        c = 0
        while c < cols:
            v = rows[i, c]
            if v != 0:
                r = pivrow[c]
                if r >= 0:
                    for t in range(c, cols):
                        rows[i, t] = (rows[i, t] - v * basis[r, t]) % p
                else:
                    inv = _inv_scalar(v, p)
                    for t in range(c, cols):
                        basis[rank, t] = (rows[i, t] * inv) % p
                    pivrow[c] = rank
                    rank += 1
                    break
            c += 1
    return rank


def _reduce_rows_loops(basis, pivrow, rows, p):
    # Reduce each row (in place) against the accumulated echelon basis,
    # without inserting. A row reduces to zero iff it lies in the span.
    nr, cols = rows.shape
    for i in range(nr):
        for c in range(cols):
            v = rows[i, c]
            if v != 0:
                r = pivrow[c]
                if r >= 0:
                    for t in range(c, cols):
                        rows[i, t] = (rows[i, t] - v * basis[r, t]) % p


# ---------------------------------------------------------------------------
# Numpy fallbacks, vectorized per pivot column.
# ---------------------------------------------------------------------------


def _rref_numpy(a, p):
    rows, cols = a.shape
    piv = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        sel = r + int(nz[0])
        if sel != r:
            a[[r, sel]] = a[[sel, r]]
        inv = _inv_scalar(int(a[r, c]), p)
        if inv != 1:
            a[r] = (a[r] * inv) % p
        f = a[:, c].copy()
        f[r] = 0
        nzr = np.nonzero(f)[0]
        if nzr.size:
            a[nzr] = (a[nzr] - np.outer(f[nzr], a[r])) % p
        piv.append(c)
        r += 1
    return r, np.asarray(piv, np.int64)


def _echelon_insert_numpy(basis, pivrow, nbasis, rows, p, stop_rank):
    rank = nbasis
    nr, cols = rows.shape
    if rank >= stop_rank or nr == 0:
        return rank
    # Bulk-eliminate existing pivots in increasing column order. Stored
    # basis rows are zero left of their pivot, so earlier columns stay zero.
    for c in np.nonzero(pivrow >= 0)[0]:
        f = rows[:, c]
        nz = np.nonzero(f)[0]
        if nz.size:
            rows[nz] = (rows[nz] - np.outer(f[nz], basis[pivrow[c]])) % p
    # Forward-eliminate the block against itself, appending each new pivot.
    r = 0
    for c in range(cols):
        if rank >= stop_rank or r >= nr:
            break
        nz = np.nonzero(rows[r:, c])[0]
        if nz.size == 0:
            continue
        sel = r + int(nz[0])
        if sel != r:
            rows[[r, sel]] = rows[[sel, r]]
        inv = _inv_scalar(int(rows[r, c]), p)
        if inv != 1:
            rows[r] = (rows[r] * inv) % p
        below = rows[r + 1 :, c]
        nzb = np.nonzero(below)[0]
        if nzb.size:
            rows[r + 1 + nzb] = (rows[r + 1 + nzb] - np.outer(below[nzb], rows[r])) % p
        basis[rank] = rows[r]
        pivrow[c] = rank
        rank += 1
        r += 1
    return rank


def _reduce_rows_numpy(basis, pivrow, rows, p):
    for c in np.nonzero(pivrow >= 0)[0]:
        f = rows[:, c]
        nz = np.nonzero(f)[0]
        if nz.size:
            rows[nz] = (rows[nz] - np.outer(f[nz], basis[pivrow[c]])) % p


# ---------------------------------------------------------------------------
# Backend registry and selection.
# ---------------------------------------------------------------------------

_NUMPY_IMPL = {
    "rref": _rref_numpy,
    "insert": _echelon_insert_numpy,
    "reduce": _reduce_rows_numpy,
}

try:
    from numba import njit

    _inv_scalar = njit(cache=True)(_inv_scalar)
    _NUMBA_IMPL = {
        "rref": njit(cache=True)(_rref_loops),
        "insert": njit(cache=True)(_echelon_insert_loops),
        "reduce": njit(cache=True)(_reduce_rows_loops),
    }
    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    _NUMBA_IMPL = None
    NUMBA_AVAILABLE = False

_active_name = ""
_active = _NUMPY_IMPL


def select_backend(name: str) -> str:
    """Activate a kernel backend ("numba" or "numpy"); returns the previous name.

    Not thread-safe; switch only while no kernel calls are in flight.
    """
    global _active, _active_name
    previous = _active_name
    if name == "numba":
        if not NUMBA_AVAILABLE:
            raise RuntimeError("numba backend requested but numba is not importable")
        _active = _NUMBA_IMPL
    elif name == "numpy":
        _active = _NUMPY_IMPL
    else:
        raise ValueError(f"unknown backend {name!r} (expected 'numba' or 'numpy')")
    _active_name = name
    return previous


def active_backend() -> str:
    return _active_name


_env = os.environ.get("COLDEC_BACKEND", "auto").strip().lower()
if _env == "auto":
    select_backend("numba" if NUMBA_AVAILABLE else "numpy")
elif _env in ("numba", "numpy"):
    select_backend(_env)
else:
    raise ValueError(
        f"COLDEC_BACKEND={_env!r} is not valid; use 'numba', 'numpy' or 'auto'"
    )


# ---------------------------------------------------------------------------
# Public wrappers.
# ---------------------------------------------------------------------------


def _as_matrix(rows, p) -> np.ndarray:
    a = np.array(rows, dtype=np.int64, copy=True, order="C")
    if a.ndim != 2:
        raise ValueError("expected a 2-dimensional array of rows")
    np.mod(a, p, out=a)
    return a


def rref_array(a, p: int):
    """Reduced row echelon form over GF(p).

    Returns (R, rank, pivots) where R is a fresh canonical-residue array.
    The input is not modified.
    """
    m = _as_matrix(a, p)
    if m.shape[0] == 0 or m.shape[1] == 0:
        return m, 0, ()
    rank, piv = _active["rref"](m, p)
    return m, int(rank), tuple(int(c) for c in piv)


class Echelon:
    """Incremental echelon accumulator for rows over GF(p).

    Keeps one normalized row per pivot column (zero left of the pivot, one
    at it); insertion order never changes ranks or spans, which is all
    callers may rely on. The row buffer grows geometrically up to `cols`.
    """

    def __init__(self, cols: int, p: int):
        self.cols = int(cols)
        self.p = int(p)
        self.rank = 0
        self._cap = 0
        self._basis = np.zeros((0, self.cols), np.int64)
        self._pivrow = np.full(self.cols, -1, np.int64)

    def _ensure_capacity(self, incoming: int):
        need = min(self.cols, self.rank + incoming)
        if need <= self._cap:
            return
        new_cap = min(self.cols, max(need, 2 * self._cap, 32))
        grown = np.zeros((new_cap, self.cols), np.int64)
        if self.rank:
            grown[: self.rank] = self._basis[: self.rank]
        self._basis = grown
        self._cap = new_cap

    def insert(self, rows, stop_rank: int | None = None, consume: bool = False) -> int:
        """Feed rows into the accumulator; returns the updated rank.

        Stops consuming once `stop_rank` is reached. With consume=True the
        caller hands over ownership of a fresh C-contiguous int64 residue
        array, which is destroyed in place.
        """
        if not consume:
            rows = _as_matrix(rows, self.p)
        if rows.shape[0] == 0:
            return self.rank
        stop = self.cols if stop_rank is None else min(stop_rank, self.cols)
        if self.rank >= stop:
            return self.rank
        self._ensure_capacity(rows.shape[0])
        self.rank = int(
            _active["insert"](self._basis, self._pivrow, self.rank, rows, self.p, stop)
        )
        return self.rank

    def reduce(self, rows) -> np.ndarray:
        """Reduce rows against the accumulated basis (copy; no insertion)."""
        rows = _as_matrix(rows, self.p)
        if rows.shape[0] and self.rank:
            _active["reduce"](self._basis, self._pivrow, rows, self.p)
        return rows

    def basis_rows(self):
        """Accumulated basis as (rows, pivots), ordered by pivot column."""
        piv_cols = np.nonzero(self._pivrow >= 0)[0]
        rows = self._basis[self._pivrow[piv_cols]].copy()
        return rows, tuple(int(c) for c in piv_cols)


def rank_of_rows(rows, p: int, stop_rank: int | None = None) -> int:
    """Rank of a stack of rows over GF(p), with optional early exit."""
    rows = _as_matrix(rows, p)
    if rows.shape[0] == 0 or rows.shape[1] == 0:
        return 0
    acc = Echelon(rows.shape[1], p)
    return acc.insert(rows, stop_rank=stop_rank, consume=True)


def warmup():
    """Force JIT compilation of the active kernels on tiny inputs."""
    demo = [[1, 1, 0], [0, 1, 1]]
    rref_array(demo, 2)
    acc = Echelon(3, 2)
    acc.insert(demo)
    acc.reduce([[1, 0, 1]])
