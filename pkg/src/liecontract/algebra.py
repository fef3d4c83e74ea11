"""Finite-dimensional Lie algebras with exact rational structure constants.

A LieAlgebra stores the dense tensor f[a][b][c] defined by
[X_a, X_b] = sum_c f[a][b][c] X_c.  Antisymmetry and the Jacobi identity are
not enforced at construction time: ``validate`` produces an exact report, so
deliberately broken tensors can be represented and diagnosed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import DimensionMismatch, NotASubalgebra
from . import linalg
from .linalg import ZERO, EchelonBasis, as_vector, rat

MAX_DIM = 32


@dataclass
class Violation:
    kind: str
    location: tuple
    detail: str

    def __str__(self):
        return f"{self.kind} at {self.location}: {self.detail}"


@dataclass
class ValidationReport:
    checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def record(self, kind, location, detail):
        self.violations.append(Violation(kind, location, detail))

    def merge(self, other):
        self.checks += other.checks
        self.violations.extend(other.violations)
        return self

    def summary(self):
        if self.ok:
            return f"valid ({self.checks} checks)"
        lines = [f"{len(self.violations)} violation(s) in {self.checks} checks:"]
        lines += [f"  {v}" for v in self.violations]
        return "\n".join(lines)


def _format_vector(names, v):
    parts = []
    for name, c in zip(names, v):
        if c == 0:
            continue
        parts.append(f"{c}*{name}" if c != 1 else name)
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    basis_names: tuple
    structure: tuple  # structure[a][b][c], all Fractions

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise DimensionMismatch(f"dimension must be in 1..{MAX_DIM}")
        if len(self.basis_names) != self.dim:
            raise DimensionMismatch("basis name count differs from dimension")
        if len(self.structure) != self.dim or any(
            len(plane) != self.dim or any(len(row) != self.dim for row in plane)
            for plane in self.structure
        ):
            raise DimensionMismatch("structure tensor has wrong shape")

    @classmethod
    def from_brackets(cls, dim, basis_names, entries):
        """Build from sparse entries (a, b, c, coeff), zero-based, a != b.

        The antisymmetric completion f[b][a][c] = -f[a][b][c] fills in pairs
        without an explicit mirror entry.  Explicit mirror entries are stored
        as given, so deliberately broken tensors remain representable and are
        caught by ``validate`` instead of being rejected here.
        """
        explicit = {}
        for a, b, c, coeff in entries:
            coeff = rat(coeff)
            if not (0 <= a < dim and 0 <= b < dim and 0 <= c < dim):
                raise DimensionMismatch(f"bracket entry ({a},{b},{c}) out of range")
            if a == b:
                raise DimensionMismatch(f"diagonal bracket entry ({a},{a},{c})")
            key = (a, b, c)
            if key in explicit and explicit[key] != coeff:
                raise DimensionMismatch(f"conflicting entries for {key}")
            explicit[key] = coeff
        f = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (a, b, c), coeff in explicit.items():
            f[a][b][c] = coeff
        for (a, b, c), coeff in explicit.items():
            if (b, a, c) not in explicit:
                f[b][a][c] = -coeff
        tensor = tuple(tuple(tuple(row) for row in plane) for plane in f)
        return cls(dim, tuple(basis_names), tensor)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, basis_names={self.basis_names!r})"

    @cached_property
    def _sparse(self):
        """Nonzero rows f[a][b] for a < b, as (a, b, ((c, coeff), ...))."""
        out = []
        for a in range(self.dim):
            for b in range(a + 1, self.dim):
                row = [(c, f) for c, f in enumerate(self.structure[a][b]) if f != 0]
                if row:
                    out.append((a, b, tuple(row)))
        return tuple(out)

    def zero_vector(self):
        return linalg.zero_vector(self.dim)

    def basis_vector(self, a):
        return linalg.basis_vector(self.dim, a)

    def vector(self, values):
        v = as_vector(values)
        if len(v) != self.dim:
            raise DimensionMismatch("coefficient count differs from dimension")
        return v

    def bracket(self, x, y):
        """Exact bracket of two coefficient vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vector length differs from algebra dimension")
        acc = [ZERO] * self.dim
        for a, b, row in self._sparse:
            t = x[a] * y[b] - x[b] * y[a]
            if t:
                for c, f in row:
                    acc[c] += t * f
        return tuple(acc)

    def format_vector(self, v):
        return _format_vector(self.basis_names, v)

    def validate(self):
        """Exact antisymmetry and Jacobi report over all index combinations."""
        report = ValidationReport()
        f = self.structure
        n = self.dim
        for a in range(n):
            for b in range(a, n):
                for c in range(n):
                    report.checks += 1
                    if f[a][b][c] + f[b][a][c] != 0:
                        report.record(
                            "antisymmetry", (a + 1, b + 1, c + 1),
                            f"f[{a + 1}][{b + 1}][{c + 1}]={f[a][b][c]} but "
                            f"f[{b + 1}][{a + 1}][{c + 1}]={f[b][a][c]}")
        for a in range(n):
            ea = self.basis_vector(a)
            for b in range(a + 1, n):
                eb = self.basis_vector(b)
                ab = self.bracket(ea, eb)
                for c in range(b + 1, n):
                    ec = self.basis_vector(c)
                    residual = linalg.vec_add(
                        linalg.vec_add(self.bracket(ab, ec),
                                       self.bracket(self.bracket(eb, ec), ea)),
                        self.bracket(self.bracket(ec, ea), eb))
                    report.checks += 1
                    if not linalg.is_zero_vector(residual):
                        report.record(
                            "jacobi", (a + 1, b + 1, c + 1),
                            f"residual {self.format_vector(residual)}")
        return report


def validate_algebra(alg):
    return alg.validate()


@dataclass(frozen=True)
class SubalgebraSplit:
    """A subalgebra with a chosen vector space complement and exact projectors."""

    algebra: LieAlgebra
    h_basis: tuple
    n_basis: tuple
    proj_h: tuple
    proj_n: tuple

    @property
    def dim_h(self):
        return len(self.h_basis)

    @property
    def dim_n(self):
        return len(self.n_basis)

    def project_h(self, x):
        return linalg.mat_vec(self.proj_h, x)

    def project_n(self, x):
        return linalg.mat_vec(self.proj_n, x)

    def coset_reduce(self, x):
        """Canonical representative of x modulo the subalgebra."""
        return self.project_n(x)

    def contains(self, x):
        """Exact membership of x in the subalgebra span."""
        return linalg.is_zero_vector(self.project_n(x))


def _projectors(alg, h_basis, n_basis):
    n = alg.dim
    cols = list(h_basis) + list(n_basis)
    base_change = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    inv = linalg.invert(base_change)
    dh = len(h_basis)
    sel_h = tuple(tuple(Fraction(int(i == j and i < dh)) for j in range(n)) for i in range(n))
    proj_h = linalg.mat_mul(linalg.mat_mul(base_change, sel_h), inv)
    proj_n = linalg.mat_sub(linalg.identity(n), proj_h)
    return proj_h, proj_n


def _closure_check(alg, h_basis):
    eb = EchelonBasis(alg.dim)
    for v in h_basis:
        eb.add(v)
    for i, u in enumerate(h_basis):
        for v in h_basis[i:]:
            w = alg.bracket(u, v)
            if not eb.contains(w):
                raise NotASubalgebra(
                    f"bracket [{alg.format_vector(u)}, {alg.format_vector(v)}] = "
                    f"{alg.format_vector(w)} leaves the span",
                    witness=(u, v, w))


def span_subalgebra(alg, vectors):
    """Split the algebra along the span of ``vectors``.

    The span must be bracket-closed; linearly dependent input is pruned.  The
    complement is picked by greedy pivoting of the standard basis vectors in
    index order, so it always consists of standard basis vectors.
    """
    vectors = [alg.vector(v) for v in vectors]
    h_basis = linalg.independent_subset(vectors, alg.dim)
    _closure_check(alg, h_basis)
    eb = EchelonBasis(alg.dim)
    for v in h_basis:
        eb.add(v)
    n_basis = []
    for i in range(alg.dim):
        e = alg.basis_vector(i)
        if eb.add(e):
            n_basis.append(e)
    proj_h, proj_n = _projectors(alg, h_basis, n_basis)
    return SubalgebraSplit(alg, tuple(h_basis), tuple(n_basis), proj_h, proj_n)


def split_with_complement(alg, h_vectors, n_vectors):
    """Like span_subalgebra but with an explicitly chosen complement."""
    h_basis = linalg.independent_subset([alg.vector(v) for v in h_vectors], alg.dim)
    _closure_check(alg, h_basis)
    n_basis = [alg.vector(v) for v in n_vectors]
    eb = EchelonBasis(alg.dim)
    for v in h_basis:
        eb.add(v)
    for v in n_basis:
        if not eb.add(v):
            raise DimensionMismatch("complement vectors are not independent of the subalgebra")
    if eb.rank != alg.dim:
        raise DimensionMismatch("subalgebra and complement do not span the algebra")
    proj_h, proj_n = _projectors(alg, h_basis, n_basis)
    return SubalgebraSplit(alg, tuple(h_basis), tuple(n_basis), proj_h, proj_n)


def coset_reduce(split, x):
    return split.coset_reduce(x)
