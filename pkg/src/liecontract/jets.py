"""Truncated polynomials in a formal parameter, the stand-in for curve germs.

A Jet stores algebra-valued coefficients, index = power of the parameter,
discarded silently from degree ``trunc`` on; a MatrixJet does the same with
square matrix coefficients.  Truncation mismatches between operands are
errors, because the truncation order is part of the value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from . import linalg
from .linalg import as_vector, rat


def _trim(coeffs, is_zero):
    end = len(coeffs)
    while end and is_zero(coeffs[end - 1]):
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class Jet:
    """Vector-valued truncated polynomial; zero is the empty coefficient tuple."""

    dim: int
    trunc: int
    coeffs: tuple

    def __post_init__(self):
        if self.trunc < 1:
            raise DimensionMismatch("truncation order must be positive")
        coeffs = tuple(tuple(c) for c in self.coeffs[: self.trunc])
        if any(len(c) != self.dim for c in coeffs):
            raise DimensionMismatch("coefficient length differs from jet dimension")
        object.__setattr__(self, "coeffs", _trim(coeffs, linalg.is_zero_vector))

    @classmethod
    def make(cls, dim, trunc, coeffs):
        return cls(dim, trunc, tuple(as_vector(c) for c in coeffs))

    @classmethod
    def zero(cls, dim, trunc):
        return cls(dim, trunc, ())

    @classmethod
    def constant(cls, vector, trunc):
        return cls(len(vector), trunc, (tuple(vector),))

    @property
    def degree(self):
        """Largest stored nonzero degree, or -1 for the zero jet."""
        return len(self.coeffs) - 1

    def coeff(self, k):
        if k < len(self.coeffs):
            return self.coeffs[k]
        return linalg.zero_vector(self.dim)

    def _check_compatible(self, other):
        if self.dim != other.dim:
            raise DimensionMismatch("jet dimensions differ")
        if self.trunc != other.trunc:
            raise DimensionMismatch("jet truncation orders differ")

    def __add__(self, other):
        self._check_compatible(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Jet(self.dim, self.trunc,
                   tuple(linalg.vec_add(self.coeff(k), other.coeff(k)) for k in range(n)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Jet(self.dim, self.trunc, tuple(linalg.vec_neg(c) for c in self.coeffs))

    def scale(self, c):
        c = rat(c)
        return Jet(self.dim, self.trunc, tuple(linalg.vec_scale(c, v) for v in self.coeffs))

    def shift(self, k):
        """Multiply by the k-th power of the parameter, truncating silently."""
        if k < 0:
            raise DimensionMismatch("shift must be by a nonnegative power")
        padded = (linalg.zero_vector(self.dim),) * k + self.coeffs
        return Jet(self.dim, self.trunc, padded)

    def truncated(self, trunc):
        """Same jet viewed at a different truncation order."""
        return Jet(self.dim, trunc, self.coeffs)

    def eval_at(self, point):
        """Horner evaluation using the stored coefficients only."""
        point = rat(point)
        acc = linalg.zero_vector(self.dim)
        for c in reversed(self.coeffs):
            acc = linalg.vec_add(linalg.vec_scale(point, acc), c)
        return acc

    def component_polys(self):
        """Per-coordinate coefficient tuples, trailing zeros trimmed."""
        return tuple(
            linalg.poly_trim(tuple(c[i] for c in self.coeffs)) for i in range(self.dim)
        )


def bracket_poly(alg, p, q):
    """Coefficient-wise bracket of jets: the Cauchy convolution."""
    p._check_compatible(q)
    if alg.dim != p.dim:
        raise DimensionMismatch("jet dimension differs from algebra dimension")
    top = min(p.trunc - 1, p.degree + q.degree)
    coeffs = []
    for m in range(top + 1):
        acc = linalg.zero_vector(alg.dim)
        for i in range(max(0, m - q.degree), min(m, p.degree) + 1):
            acc = linalg.vec_add(acc, alg.bracket(p.coeffs[i], q.coeffs[m - i]))
        coeffs.append(acc)
    return Jet(alg.dim, p.trunc, tuple(coeffs))


def jet_through_subalgebra(split, p):
    """Whether the jet's value at 0 lies in the subalgebra."""
    return split.contains(p.coeff(0))


def jet_in_filtration(split, p, k):
    """Whether the first k coefficients vanish and the k-th lies in the subalgebra."""
    if k >= p.trunc:
        raise DimensionMismatch("filtration level must stay below the truncation order")
    if any(not linalg.is_zero_vector(p.coeff(i)) for i in range(k)):
        return False
    return split.contains(p.coeff(k))


@dataclass(frozen=True)
class MatrixJet:
    """Square-matrix-valued truncated polynomial."""

    size: int
    trunc: int
    coeffs: tuple

    def __post_init__(self):
        if self.trunc < 1:
            raise DimensionMismatch("truncation order must be positive")
        coeffs = tuple(tuple(tuple(row) for row in c) for c in self.coeffs[: self.trunc])
        for c in coeffs:
            if len(c) != self.size or any(len(row) != self.size for row in c):
                raise DimensionMismatch("matrix coefficient has wrong shape")
        object.__setattr__(self, "coeffs", _trim(coeffs, linalg.is_zero_matrix))

    @classmethod
    def zero(cls, size, trunc):
        return cls(size, trunc, ())

    @classmethod
    def identity(cls, size, trunc):
        return cls(size, trunc, (linalg.identity(size),))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, k):
        if k < len(self.coeffs):
            return self.coeffs[k]
        return linalg.zero_matrix(self.size)

    def _check_compatible(self, other):
        if self.size != other.size:
            raise DimensionMismatch("matrix jet sizes differ")
        if self.trunc != other.trunc:
            raise DimensionMismatch("jet truncation orders differ")

    def __add__(self, other):
        self._check_compatible(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return MatrixJet(self.size, self.trunc,
                         tuple(linalg.mat_add(self.coeff(k), other.coeff(k)) for k in range(n)))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = rat(c)
        return MatrixJet(self.size, self.trunc,
                         tuple(linalg.mat_scale(c, m) for m in self.coeffs))

    def matmul(self, other):
        self._check_compatible(other)
        top = min(self.trunc - 1, self.degree + other.degree)
        if self.degree < 0 or other.degree < 0:
            return MatrixJet.zero(self.size, self.trunc)
        coeffs = []
        for m in range(top + 1):
            acc = linalg.zero_matrix(self.size)
            for i in range(max(0, m - other.degree), min(m, self.degree) + 1):
                acc = linalg.mat_add(acc, linalg.mat_mul(self.coeffs[i], other.coeffs[m - i]))
            coeffs.append(acc)
        return MatrixJet(self.size, self.trunc, tuple(coeffs))

    def apply(self, p):
        """Convolution action on a vector jet of matching dimension."""
        if p.dim != self.size:
            raise DimensionMismatch("jet dimension differs from matrix size")
        top = min(p.trunc - 1, self.degree + p.degree)
        if self.degree < 0 or p.degree < 0:
            return Jet.zero(p.dim, p.trunc)
        coeffs = []
        for m in range(top + 1):
            acc = linalg.zero_vector(p.dim)
            for i in range(max(0, m - p.degree), min(m, self.degree) + 1):
                acc = linalg.vec_add(acc, linalg.mat_vec(self.coeffs[i], p.coeffs[m - i]))
            coeffs.append(acc)
        return Jet(p.dim, p.trunc, tuple(coeffs))

    def eval_at(self, point):
        point = rat(point)
        acc = linalg.zero_matrix(self.size)
        for c in reversed(self.coeffs):
            acc = linalg.mat_add(linalg.mat_scale(point, acc), c)
        return acc
