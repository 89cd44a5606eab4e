"""Exact matrix layer: canonical RREF, nullspaces, solving, preimages."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coldec import (
    FieldMismatchError,
    MatrixGF,
    PrimeField,
    nullspace,
    preimage_of_colspace,
    rank,
    rref,
    solve,
)


def M(p, rows):
    return MatrixGF(PrimeField(p), rows)


def test_construction_reduces_and_freezes():
    m = M(5, [[-1, 7], [10, 3]])
    assert m.a.tolist() == [[4, 2], [0, 3]]
    with pytest.raises(ValueError):
        m.a[0, 0] = 1  # backing array is read-only


def test_identity_zeros_shape():
    F = PrimeField(3)
    assert MatrixGF.identity(F, 3).a.tolist() == np.eye(3, dtype=int).tolist()
    assert MatrixGF.zeros(F, 2, 4).shape == (2, 4)


def test_matmul_add_sub_neg():
    a = M(7, [[1, 2], [3, 4]])
    b = M(7, [[5, 6], [0, 1]])
    assert (a @ b).a.tolist() == [[5, 1], [1, 1]]
    assert (a + b).a.tolist() == [[6, 1], [3, 5]]
    assert (a - b).a.tolist() == [[3, 3], [3, 3]]
    assert (-a).a.tolist() == [[6, 5], [4, 3]]


def test_cross_field_matrix_ops_rejected():
    with pytest.raises(FieldMismatchError):
        _ = M(5, [[1]]) @ M(7, [[1]])


def test_rank_known_examples():
    assert rank(M(2, [[1, 1], [1, 1]])) == 1
    assert rank(M(5, [[1, 2], [2, 4]])) == 1
    assert rank(M(2, [[1, 0], [0, 1]])) == 2
    assert rank(M(3, [[0, 0], [0, 0]])) == 0


def test_rref_is_canonical_and_idempotent():
    m = M(7, [[2, 4, 2], [1, 2, 4], [0, 0, 3]])
    R, r, piv = rref(m)
    assert r == 2 and piv == (0, 2)
    # pivots are 1 and pivot columns are unit vectors
    for row_idx, col in enumerate(piv):
        col_vals = R.a[:, col].tolist()
        assert col_vals[row_idx] == 1 and sum(col_vals) == 1
    R2, r2, piv2 = rref(R)
    assert r2 == r and piv2 == piv and R2 == R


def test_nullspace_known_example():
    ns = nullspace(M(2, [[1, 1, 0], [0, 1, 1]]))
    assert ns.tolist() == [[1, 1, 1]]


def test_nullspace_canonical_free_columns():
    # x1 free, x3 free: canonical basis has a 1 in each free column in turn
    ns = nullspace(M(5, [[1, 2, 0, 1]]))
    assert ns.shape == (3, 4)
    free_cols = [1, 2, 3]
    for row, col in zip(ns, free_cols):
        assert row[col] == 1
    m = M(5, [[1, 2, 0, 1]])
    assert all((m.a @ row % 5 == 0).all() for row in ns)


def test_nullspace_full_rank_is_empty():
    ns = nullspace(M(3, [[1, 0], [0, 1]]))
    assert ns.shape == (0, 2)


def test_solve_unique_and_inconsistent():
    a = M(5, [[1, 1], [0, 1]])
    x = solve(a, [3, 2])
    assert x.tolist() == [1, 2]
    bad = solve(M(2, [[1, 1], [1, 1]]), [0, 1])
    assert bad is None


def test_solve_underdetermined_sets_free_vars_to_zero():
    a = M(7, [[1, 2, 3]])
    x = solve(a, [4])
    assert x.tolist() == [4, 0, 0]
    assert (a.a @ x % 7).tolist() == [4]


def test_preimage_of_colspace_known_example():
    # col(A) = span{e1}; preimage of that inside col(I2) is the x-axis
    A = M(2, [[1], [0]])
    B = MatrixGF.identity(PrimeField(2), 2)
    pre = preimage_of_colspace(A, B)
    assert pre.tolist() == [[1, 0]]


def test_preimage_of_colspace_full():
    # every column of B already lies in col(A): preimage is everything
    A = MatrixGF.identity(PrimeField(3), 2)
    B = M(3, [[1, 2], [0, 1]])
    pre = preimage_of_colspace(A, B)
    assert pre.tolist() == [[1, 0], [0, 1]]


def test_preimage_of_colspace_property():
    rng = np.random.default_rng(3)
    F = PrimeField(5)
    for _ in range(20):
        A = MatrixGF(F, rng.integers(0, 5, size=(4, 3)))
        B = MatrixGF(F, rng.integers(0, 5, size=(4, 2)))
        pre = preimage_of_colspace(A, B)
        # every reported combination c satisfies B @ c in col(A)
        for c in pre:
            target = (B.a @ c) % 5
            aug = MatrixGF(F, np.column_stack([A.a, target]))
            assert rank(aug) == rank(A)


@st.composite
def small_matrix(draw):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    rows = draw(st.integers(1, 6))
    cols = draw(st.integers(1, 6))
    entries = draw(
        st.lists(
            st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return p, entries


@given(small_matrix())
@settings(max_examples=150)
def test_rank_transpose_and_nullity(data):
    p, entries = data
    m = M(p, entries)
    r = rank(m)
    assert r == rank(m.transpose())
    ns = nullspace(m)
    assert r + ns.shape[0] == m.cols
    for row in ns:
        assert (m.a @ row % p == 0).all()


@given(small_matrix())
@settings(max_examples=100)
def test_rref_row_space_preserved(data):
    p, entries = data
    m = M(p, entries)
    R, r, _ = rref(m)
    stacked = MatrixGF(m.field, np.vstack([m.a, R.a]))
    assert rank(stacked) == r
