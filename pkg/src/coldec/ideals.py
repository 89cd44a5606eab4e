"""Ideals of products of linear forms, handled as graded linear algebra.

A generator matrix column (a_1j, ..., a_kj) dualizes to the linear form
L_j = a_1j x_1 + ... + a_kj x_k. The ideal generated by all products of s
distinct column forms is represented by the coefficient matrix of those
products in the degree-s monomial basis. Every question asked here reduces
to ranks of such matrices:

* the code's minimum distance is the largest s for which the degree-s
  products span the full degree-s space;
* Hilbert function values are codimensions of graded pieces, and their
  stabilized value is the degree (the projective zero set's point count,
  with multiplicity);
* the colon of the ideal by a variable power, restricted to linear forms,
  is a column-space preimage problem, and for a uniquely decodable word it
  cuts out one projective point carrying the error.

Graded pieces above the generating degree are accumulated iteratively:
the degree-(m+1) piece is spanned by the variable multiples of a cached
echelon basis of the degree-m piece. Ideals here are generated in a single
degree, which makes that iteration exact.
"""

from __future__ import annotations

import itertools
import warnings
from typing import TYPE_CHECKING

import numpy as np

from . import kernels
from .field import PrimeField
from .linalg import MatrixGF, preimage_of_colspace
from .polybasis import (
    LinearForm,
    PolyVector,
    checked_binomial,
    monomial_basis,
    multiply_by_form,
    product_of_linear_forms,
)

if TYPE_CHECKING:  # pragma: no cover
    from .code import LinearCode

__all__ = [
    "StabilizationError",
    "NotSinglePointError",
    "LinearFormSpace",
    "ProjectivePoint",
    "IdealPiece",
    "build_ideal",
    "graded_piece_rank",
    "min_distance",
    "colon_linear_piece",
    "point_from_forms",
    "hilbert_function",
    "ideal_degree",
    "colon_degree",
    "verify_saturation_identity",
    "verify_power_containment",
]


class StabilizationError(RuntimeError):
    """A Hilbert function failed to stabilize below the scan cap."""


class NotSinglePointError(ValueError):
    """A form space expected to cut out one projective point does not."""


class LinearFormSpace:
    """A space of linear forms, stored as a canonical echelon basis."""

    __slots__ = ("field", "nvars", "basis")

    def __init__(self, field: PrimeField, nvars: int, rows):
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, nvars)
        r, rank, _ = kernels.rref_array(rows, field.p) if rows.shape[0] else (rows, 0, None)
        basis = r[:rank].copy()
        basis.flags.writeable = False
        self.field = field
        self.nvars = int(nvars)
        self.basis = basis

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def forms(self) -> list[LinearForm]:
        return [LinearForm(self.field, row) for row in self.basis]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearFormSpace):
            return NotImplemented
        return (
            self.field == other.field
            and self.nvars == other.nvars
            and bool(np.array_equal(self.basis, other.basis))
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"LinearFormSpace(GF({self.field.p}), nvars={self.nvars}, dim={self.dim})"


class ProjectivePoint:
    """A projective point, normalized so its last nonzero coordinate is 1."""

    __slots__ = ("field", "coords")

    def __init__(self, field: PrimeField, coords):
        arr = field.reduce(coords)
        if arr.ndim != 1 or arr.shape[0] < 1:
            raise ValueError("projective coordinates must form a nonempty vector")
        nz = np.nonzero(arr)[0]
        if nz.size == 0:
            raise ValueError("the zero vector does not define a projective point")
        scale = field.inv(int(arr[nz[-1]]))
        if scale != 1:
            arr = (arr * scale) % field.p
        arr.flags.writeable = False
        self.field = field
        self.coords = arr

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.field == other.field and bool(np.array_equal(self.coords, other.coords))

    def __hash__(self) -> int:
        return hash((self.field.p, tuple(int(x) for x in self.coords)))

    def __repr__(self) -> str:
        return f"ProjectivePoint(GF({self.field.p}), {self.coords.tolist()})"


class IdealPiece:
    """An ideal generated in one degree, as a generator coefficient matrix.

    `gens` has one row per generator in the degree-`gen_degree` monomial
    basis. Echelon bases of higher graded pieces are cached as they are
    computed.
    """

    __slots__ = ("field", "nvars", "gen_degree", "gens", "_pieces")

    def __init__(self, field: PrimeField, nvars: int, gen_degree: int, gens):
        gen_degree = int(gen_degree)
        if gen_degree < 1:
            raise ValueError("generators must have degree at least 1")
        size = monomial_basis(nvars, gen_degree).size
        gens = gens if isinstance(gens, MatrixGF) else MatrixGF(field, gens)
        if gens.field != field:
            raise ValueError("generator matrix field does not match")
        if gens.cols != size:
            raise ValueError(
                f"degree-{gen_degree} generators in {nvars} variables need "
                f"{size} columns, got {gens.cols}"
            )
        self.field = field
        self.nvars = int(nvars)
        self.gen_degree = gen_degree
        self.gens = gens
        self._pieces: dict[int, tuple[np.ndarray, int]] = {}

    def piece(self, m: int):
        """Echelon basis rows and rank of the degree-m graded piece."""
        m = int(m)
        if m < self.gen_degree:
            raise ValueError(
                f"graded piece degree {m} is below the generating degree {self.gen_degree}"
            )
        cached = self._pieces.get(m)
        if cached is not None:
            return cached
        p = self.field.p
        size = monomial_basis(self.nvars, m).size
        acc = kernels.Echelon(size, p)
        if m == self.gen_degree:
            acc.insert(self.gens.a)
        else:
            prev_rows, _ = self.piece(m - 1)
            prev_basis = monomial_basis(self.nvars, m - 1)
            for v in range(self.nvars):
                if prev_rows.shape[0] == 0:
                    break
                block = np.zeros((prev_rows.shape[0], size), np.int64)
                block[:, prev_basis.mult_map(v)] = prev_rows
                acc.insert(block, consume=True)
        rows, _ = acc.basis_rows()
        result = (rows, int(acc.rank))
        self._pieces[m] = result
        return result

    def __repr__(self) -> str:
        return (
            f"IdealPiece(GF({self.field.p}), nvars={self.nvars}, "
            f"gen_degree={self.gen_degree}, gens={self.gens.rows})"
        )


def _column_forms(C: "LinearCode") -> list[LinearForm]:
    return [LinearForm(C.field, col) for col in C.G.a.T]


def _iter_product_rows(field: PrimeField, forms: list[LinearForm], s: int):
    """Coefficient rows of all products of s distinct forms.

    Subsets are enumerated in lexicographic order; prefix products are
    shared along the recursion, so each yielded row costs one linear-form
    multiplication.
    """
    n = len(forms)
    nvars = forms[0].nvars

    def rec(start: int, prefix: PolyVector):
        depth = prefix.degree
        if depth == s:
            yield prefix.coeffs
            return
        for j in range(start, n - (s - depth) + 1):
            yield from rec(j + 1, multiply_by_form(prefix, forms[j]))

    yield from rec(0, PolyVector.one(field, nvars))


def build_ideal(C: "LinearCode", s: int) -> IdealPiece:
    """The ideal generated by all products of s distinct column forms of C.

    Generators appear in lexicographic order of the column subsets, one
    row per subset.
    """
    s = int(s)
    if not 1 <= s <= C.n:
        raise ValueError(f"product size must satisfy 1 <= s <= {C.n}, got {s}")
    forms = _column_forms(C)
    count = checked_binomial(C.n, s, "generator count")
    size = monomial_basis(C.k, s).size
    rows = np.zeros((count, size), np.int64)
    for i, row in enumerate(_iter_product_rows(C.field, forms, s)):
        rows[i] = row
    return IdealPiece(C.field, C.k, s, rows)


def graded_piece_rank(ideal: IdealPiece, m: int) -> int:
    """Dimension of the degree-m graded piece of the ideal."""
    return ideal.piece(m)[1]


def min_distance(C: "LinearCode") -> int:
    """Minimum distance of a code, by graded ranks of column-form products.

    The distance is the largest s for which the products of s distinct
    column forms span the whole degree-s space; s is probed upward with
    early exit as soon as a piece fills up. The value is cached on the
    code. A code with an all-zero coordinate has no nonzero-weight
    guarantee at all; that degenerate case reports 0 with a warning.
    """
    if C._dmin is not None:
        return C._dmin
    if not C.G.a.any(axis=0).all():
        warnings.warn(
            "generator matrix has an all-zero column; reporting minimum distance 0",
            stacklevel=2,
        )
        C._dmin = 0
        return 0
    p = C.field.p
    forms = _column_forms(C)
    s = 1
    while True:
        target = monomial_basis(C.k, s).size
        acc = kernels.Echelon(target, p)
        buf: list[np.ndarray] = []
        reached = False
        for row in _iter_product_rows(C.field, forms, s):
            buf.append(row)
            if len(buf) >= 64:
                if acc.insert(np.stack(buf), stop_rank=target) >= target:
                    reached = True
                    break
                buf.clear()
        if not reached and buf:
            reached = acc.insert(np.stack(buf), stop_rank=target) >= target
        if not reached:
            C._dmin = s - 1
            return C._dmin
        s += 1
        if s > C.n + 1:  # unreachable: products of more than n factors cannot span
            raise RuntimeError("minimum-distance scan failed to terminate")


def hilbert_function(ideal: IdealPiece, m: int) -> int:
    """dim (S/I)_m, the codimension of the degree-m piece."""
    m = int(m)
    if m < 0:
        raise ValueError("degree must be nonnegative")
    size = monomial_basis(ideal.nvars, m).size
    if m < ideal.gen_degree:
        return size
    return size - ideal.piece(m)[1]


def _stabilized_value(values, cap_label: str):
    prev = next(values)
    for cur in values:
        if cur == prev:
            return cur
        prev = cur
    raise StabilizationError(
        f"Hilbert function failed to stabilize by degree {cap_label}; the zero "
        "set looks positive-dimensional or a graded piece is wrong"
    )


def ideal_degree(ideal: IdealPiece) -> int:
    """Stabilized Hilbert function value: the degree of the zero scheme.

    For the ideal of (d+1)-fold column-form products this counts the
    projective minimum-weight codewords. Expects a zero set of projective
    dimension at most 0; the scan is capped at gen_degree + nvars + 4 and
    failing to stabilize by then raises StabilizationError.
    """
    cap = ideal.gen_degree + ideal.nvars + 4
    return _stabilized_value(
        (hilbert_function(ideal, m) for m in range(ideal.gen_degree, cap + 1)),
        str(cap),
    )


def colon_degree(ideal: IdealPiece, var: int) -> int:
    """Degree of the colon ideal (I : x_var), by its stabilized Hilbert values.

    The degree-m piece of the colon is {f in S_m : f * x_var in I}; via the
    injective multiplication map its dimension equals rank (I)_{m+1} minus
    the rank of the piece projected onto the monomials not divisible by
    x_var. The scan starts at gen_degree - 1 (the colon piece is zero
    below) and is capped like ideal_degree.
    """
    var = int(var)
    if not 0 <= var < ideal.nvars:
        raise ValueError(f"variable index {var} out of range")
    start = max(ideal.gen_degree - 1, 0)
    cap = ideal.gen_degree + ideal.nvars + 4

    def value(m: int) -> int:
        rows, rank = ideal.piece(m + 1)
        exps = monomial_basis(ideal.nvars, m + 1).exponents()
        nondiv = np.nonzero(exps[:, var] == 0)[0]
        sub_rank = kernels.rank_of_rows(rows[:, nondiv], ideal.field.p) if rank else 0
        colon_dim = rank - sub_rank
        return monomial_basis(ideal.nvars, m).size - colon_dim

    return _stabilized_value((value(m) for m in range(start, cap + 1)), str(cap))


def colon_linear_piece(ideal: IdealPiece, var: int, u: int) -> LinearFormSpace:
    """Linear forms L with L * x_var**u inside the ideal's graded piece.

    Requires u >= gen_degree - 1 so the membership happens in a nonzero
    piece (below that the answer is trivially zero). The defining
    condition is a column-space preimage: the candidate L ranges over
    degree-1 coefficient vectors, x_var**u times L is a fixed injective
    index map, and membership is against the degree-(u+1) piece.
    """
    var = int(var)
    u = int(u)
    if not 0 <= var < ideal.nvars:
        raise ValueError(f"variable index {var} out of range")
    if u < ideal.gen_degree - 1:
        raise ValueError(
            f"degree mismatch: forms times x_{var}^{u} land in degree {u + 1}, "
            f"below the generating degree {ideal.gen_degree}"
        )
    field = ideal.field
    rows, rank = ideal.piece(u + 1)
    size = monomial_basis(ideal.nvars, u + 1).size
    a = MatrixGF(field, rows.T if rank else np.zeros((size, 0), np.int64))
    targets = monomial_basis(ideal.nvars, 1).power_map(var, u)
    b = np.zeros((size, ideal.nvars), np.int64)
    b[targets, np.arange(ideal.nvars)] = 1
    basis = preimage_of_colspace(a, MatrixGF(field, b))
    return LinearFormSpace(field, ideal.nvars, basis)


def point_from_forms(space: LinearFormSpace) -> ProjectivePoint:
    """The single projective point cut out by a codimension-1 form space."""
    if space.dim != space.nvars - 1:
        raise NotSinglePointError(
            f"a form space of dimension {space.dim} in {space.nvars} variables "
            "does not cut out a single point"
        )
    ns = MatrixGF(space.field, space.basis).nullspace()
    if ns.shape[0] != 1:  # defensive; dim nvars-1 forces a line
        raise NotSinglePointError("the form space does not cut out a single point")
    return ProjectivePoint(space.field, ns[0])


def _point_evaluation(field: PrimeField, point: ProjectivePoint, m: int) -> np.ndarray:
    """Values of the degree-m monomials at the point, as a vector."""
    exps = monomial_basis(point.coords.shape[0], m).exponents()
    vals = np.ones(exps.shape[0], np.int64)
    for v in range(exps.shape[1]):
        c = int(point.coords[v])
        col = exps[:, v]
        powers = np.ones(exps.shape[0], np.int64)
        for e in range(1, int(col.max()) + 1 if exps.shape[0] else 0):
            powers = np.where(col >= e, (powers * c) % field.p, powers)
        vals = (vals * powers) % field.p
    return vals


def verify_saturation_identity(ideal: IdealPiece, space: LinearFormSpace) -> bool:
    """Check that the ideal's generating piece equals the point ideal's piece.

    `space` must cut out a single projective point P; its homogeneous
    vanishing ideal has graded pieces of codimension exactly 1. The check
    is two-sided: the ideal's generating piece must have that rank and all
    its basis rows must vanish at P, which together force equality of the
    two pieces.
    """
    if space.field != ideal.field or space.nvars != ideal.nvars:
        raise ValueError("form space and ideal live in different rings")
    if space.dim != ideal.nvars - 1:
        raise ValueError("the form space must cut out a single projective point")
    g = ideal.gen_degree
    rows, rank = ideal.piece(g)
    if rank != monomial_basis(ideal.nvars, g).size - 1:
        return False
    point = point_from_forms(space)
    vals = _point_evaluation(ideal.field, point, g)
    return not ((rows @ vals) % ideal.field.p).any()


def verify_power_containment(ideal: IdealPiece, space: LinearFormSpace) -> bool:
    """Check that every gen_degree-fold product of the space's basis forms
    lies in the ideal's generating piece.

    This is the piece-level containment of the point ideal's power: with g
    = gen_degree, all products of g basis forms (repetition allowed) must
    reduce to zero against the echelon basis of the ideal's degree-g
    piece.
    """
    if space.field != ideal.field or space.nvars != ideal.nvars:
        raise ValueError("form space and ideal live in different rings")
    g = ideal.gen_degree
    rows, rank = ideal.piece(g)
    acc = kernels.Echelon(monomial_basis(ideal.nvars, g).size, ideal.field.p)
    if rank:
        acc.insert(rows)
    products = [
        product_of_linear_forms(combo).coeffs
        for combo in itertools.combinations_with_replacement(space.forms(), g)
    ]
    if not products:
        return True
    residues = acc.reduce(np.stack(products))
    return not residues.any()
