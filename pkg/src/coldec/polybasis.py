"""Monomial bases of fixed total degree and homogeneous coefficient vectors.

A homogeneous polynomial of degree g in `nvars` variables is a dense
coefficient vector indexed by the monomials of degree g in graded
lexicographic order: index 0 is the lexicographically largest exponent
vector (g, 0, ..., 0), the last index is (0, ..., 0, g). Multiplying by a
linear form or a variable power becomes index arithmetic through cached
position maps, so products of linear forms never touch a symbolic
polynomial type.

All index computations are checked against 64-bit overflow; a basis whose
size would not fit raises BinomialOverflowError naming the offending
(nvars, degree) pair.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .field import FieldMismatchError, PrimeField

__all__ = [
    "BinomialOverflowError",
    "checked_binomial",
    "MonomialBasis",
    "monomial_basis",
    "LinearForm",
    "PolyVector",
    "multiply",
    "multiply_by_form",
    "multiply_by_power",
    "product_of_linear_forms",
]

_INT64_MAX = 2**63 - 1


class BinomialOverflowError(OverflowError):
    """A binomial coefficient does not fit in signed 64-bit indexing."""


def checked_binomial(n: int, k: int, what: str = "") -> int:
    """math.comb(n, k) guarded against values beyond int64."""
    if n < 0 or k < 0:
        return 0
    value = math.comb(n, k)
    if value > _INT64_MAX:
        where = f" ({what})" if what else ""
        raise BinomialOverflowError(
            f"C({n},{k}) = {value} exceeds 64-bit indexing{where}"
        )
    return value


class MonomialBasis:
    """The monomials of one total degree in graded lexicographic order."""

    __slots__ = ("nvars", "degree", "size", "_exps", "_mult_maps", "_power_maps")

    def __init__(self, nvars: int, degree: int):
        if nvars < 1:
            raise ValueError(f"need at least one variable, got {nvars}")
        if degree < 0:
            raise ValueError(f"degree must be nonnegative, got {degree}")
        self.nvars = int(nvars)
        self.degree = int(degree)
        self.size = checked_binomial(
            nvars + degree - 1, degree, f"monomial basis nvars={nvars}, degree={degree}"
        )
        self._exps = None
        self._mult_maps = {}
        self._power_maps = {}

    def rank(self, exponents) -> int:
        """Position of an exponent vector within the basis."""
        e = tuple(int(x) for x in exponents)
        if len(e) != self.nvars or any(x < 0 for x in e):
            raise ValueError(f"bad exponent vector {e} for {self.nvars} variables")
        if sum(e) != self.degree:
            raise ValueError(f"exponents {e} do not have total degree {self.degree}")
        m = self.nvars
        rem = self.degree
        r = 0
        for i in range(m - 1):
            t = m - 1 - i
            # count exponent vectors that agree so far but are larger at i
            r += math.comb(rem - e[i] - 1 + t, t) if rem - e[i] >= 1 else 0
            rem -= e[i]
        return r

    def unrank(self, index: int) -> tuple:
        """Exponent vector at a basis position."""
        i = int(index)
        if not 0 <= i < self.size:
            raise ValueError(f"index {i} out of range for basis of size {self.size}")
        m = self.nvars
        rem = self.degree
        out = []
        for pos in range(m - 1):
            t = m - 1 - pos
            for a in range(rem, -1, -1):
                block = math.comb(rem - a + t - 1, t - 1)
                if i < block:
                    out.append(a)
                    rem -= a
                    break
                i -= block
        out.append(rem)
        return tuple(out)

    def exponents(self) -> np.ndarray:
        """Full (size, nvars) exponent table, computed once."""
        if self._exps is None:
            table = np.empty((self.size, self.nvars), np.int64)
            for i in range(self.size):
                table[i] = self.unrank(i)
            table.flags.writeable = False
            self._exps = table
        return self._exps

    def mult_map(self, var: int) -> np.ndarray:
        """Index map for multiplication by variable `var`.

        Entry j is the rank, in the degree+1 basis, of the j-th monomial
        times the variable. The map is injective.
        """
        var = int(var)
        if not 0 <= var < self.nvars:
            raise ValueError(f"variable index {var} out of range")
        cached = self._mult_maps.get(var)
        if cached is None:
            target = monomial_basis(self.nvars, self.degree + 1)
            exps = self.exponents()
            cached = np.empty(self.size, np.int64)
            for j in range(self.size):
                e = exps[j].copy()
                e[var] += 1
                cached[j] = target.rank(e)
            cached.flags.writeable = False
            self._mult_maps[var] = cached
        return cached

    def power_map(self, var: int, u: int) -> np.ndarray:
        """Index map for multiplication by `var` raised to the power u."""
        var = int(var)
        u = int(u)
        if not 0 <= var < self.nvars:
            raise ValueError(f"variable index {var} out of range")
        if u < 0:
            raise ValueError("power must be nonnegative")
        key = (var, u)
        cached = self._power_maps.get(key)
        if cached is None:
            target = monomial_basis(self.nvars, self.degree + u)
            exps = self.exponents()
            cached = np.empty(self.size, np.int64)
            for j in range(self.size):
                e = exps[j].copy()
                e[var] += u
                cached[j] = target.rank(e)
            cached.flags.writeable = False
            self._power_maps[key] = cached
        return cached

    def __repr__(self) -> str:
        return f"MonomialBasis(nvars={self.nvars}, degree={self.degree}, size={self.size})"


@lru_cache(maxsize=None)
def monomial_basis(nvars: int, degree: int) -> MonomialBasis:
    """Shared per-(nvars, degree) basis instance with cached maps."""
    return MonomialBasis(nvars, degree)


class LinearForm:
    """A homogeneous linear form, stored as its coefficient vector."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs):
        arr = field.reduce(coeffs)
        if arr.ndim != 1 or arr.shape[0] < 1:
            raise ValueError("a linear form needs a 1-dimensional coefficient vector")
        arr.flags.writeable = False
        self.field = field
        self.coeffs = arr

    @property
    def nvars(self) -> int:
        return self.coeffs.shape[0]

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def as_poly(self) -> PolyVector:
        return PolyVector(self.field, self.nvars, 1, self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.field == other.field and bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self) -> str:
        return f"LinearForm(GF({self.field.p}), {self.coeffs.tolist()})"


class PolyVector:
    """A homogeneous polynomial as a dense degree-graded coefficient vector."""

    __slots__ = ("field", "nvars", "degree", "coeffs")

    def __init__(self, field: PrimeField, nvars: int, degree: int, coeffs):
        basis = monomial_basis(nvars, degree)
        arr = field.reduce(coeffs)
        if arr.ndim != 1 or arr.shape[0] != basis.size:
            raise ValueError(
                f"degree-{degree} polynomial in {nvars} variables needs "
                f"{basis.size} coefficients, got shape {arr.shape}"
            )
        arr.flags.writeable = False
        self.field = field
        self.nvars = nvars
        self.degree = degree
        self.coeffs = arr

    @classmethod
    def zero(cls, field: PrimeField, nvars: int, degree: int) -> PolyVector:
        return cls(field, nvars, degree, np.zeros(monomial_basis(nvars, degree).size, np.int64))

    @classmethod
    def one(cls, field: PrimeField, nvars: int) -> PolyVector:
        return cls(field, nvars, 0, np.ones(1, np.int64))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyVector):
            return NotImplemented
        return (
            self.field == other.field
            and self.nvars == other.nvars
            and self.degree == other.degree
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"PolyVector(GF({self.field.p}), nvars={self.nvars}, "
            f"degree={self.degree}, {self.coeffs.tolist()})"
        )


def _common_field(a, b) -> PrimeField:
    if a.field != b.field:
        raise FieldMismatchError("operands live over different fields")
    return a.field


def multiply(f: PolyVector, g: PolyVector) -> PolyVector:
    """Product of two homogeneous polynomials (degrees add)."""
    field = _common_field(f, g)
    if f.nvars != g.nvars:
        raise ValueError("operands use different variable counts")
    p = field.p
    out_basis = monomial_basis(f.nvars, f.degree + g.degree)
    bf = monomial_basis(f.nvars, f.degree).exponents()
    bg = monomial_basis(g.nvars, g.degree).exponents()
    out = np.zeros(out_basis.size, np.int64)
    for i in np.nonzero(f.coeffs)[0]:
        ci = int(f.coeffs[i])
        ei = bf[i]
        for j in np.nonzero(g.coeffs)[0]:
            r = out_basis.rank(ei + bg[j])
            out[r] = (out[r] + ci * int(g.coeffs[j])) % p
    return PolyVector(field, f.nvars, f.degree + g.degree, out)


def multiply_by_form(f: PolyVector, form: LinearForm) -> PolyVector:
    """Product with a linear form through the cached variable maps."""
    field = _common_field(f, form)
    if f.nvars != form.nvars:
        raise ValueError("operands use different variable counts")
    p = field.p
    basis = monomial_basis(f.nvars, f.degree)
    out = np.zeros(monomial_basis(f.nvars, f.degree + 1).size, np.int64)
    for v in np.nonzero(form.coeffs)[0]:
        idx = basis.mult_map(int(v))
        out[idx] = (out[idx] + int(form.coeffs[v]) * f.coeffs) % p
    return PolyVector(field, f.nvars, f.degree + 1, out)


def multiply_by_power(f: PolyVector, var: int, u: int) -> PolyVector:
    """Product with var**u; a pure index shift of the coefficients."""
    idx = monomial_basis(f.nvars, f.degree).power_map(var, u)
    out = np.zeros(monomial_basis(f.nvars, f.degree + u).size, np.int64)
    out[idx] = f.coeffs
    return PolyVector(f.field, f.nvars, f.degree + u, out)


def product_of_linear_forms(forms) -> PolyVector:
    """Left-fold product of a nonempty sequence of linear forms."""
    forms = list(forms)
    if not forms:
        raise ValueError("cannot take a product of zero linear forms")
    field = forms[0].field
    nvars = forms[0].nvars
    for form in forms[1:]:
        if form.field != field:
            raise FieldMismatchError("forms live over different fields")
        if form.nvars != nvars:
            raise ValueError("forms use different variable counts")
    acc = forms[0].as_poly()
    for form in forms[1:]:
        acc = multiply_by_form(acc, form)
    return acc
