"""The expansion group: a subgroup part acting on a truncated-BCH nilpotent part.

Group elements pair an automorphism (the stored adjoint matrix of a subgroup
element) with a nilpotent tuple of k middle coefficients and a coset top
slot.  Multiplication is (h1, a) (h2, b) = (h1 h2, a star Ad_{h1} b), where
star lifts the tuples to polynomials through zero, multiplies them with the
truncated BCH product, and reads the first k+1 coefficients back, reducing
the last one modulo the subalgebra.  Rational data stays exact; matrices with
float entries are accepted and validated against a small tolerance.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import SubalgebraSplit
from .bch import local_mult
from .errors import DimensionMismatch
from . import linalg
from .jets import Jet

FLOAT_TOL = 1e-12


def _is_exact(value):
    return not isinstance(value, float)


def _matrix_exact(m):
    return all(_is_exact(x) for row in m for x in row)


def _close(u, v, tol):
    return all(abs(a - b) <= tol for a, b in zip(u, v))


@dataclass(frozen=True)
class NilTuple:
    """k middle coefficients plus a canonical coset representative."""

    mids: tuple
    top: tuple


@dataclass(frozen=True)
class HElement:
    """Subgroup element stored through its adjoint matrix.

    ``defining`` optionally carries a defining-representation matrix for
    display; the group law only ever uses ``ad``.
    """

    ad: tuple
    defining: tuple = None

    @property
    def exact(self):
        return _matrix_exact(self.ad)


@dataclass(frozen=True)
class GroupElement:
    h: HElement
    nil: NilTuple


class ExpansionGroup:
    """Order-k expansion group over a subalgebra split."""

    def __init__(self, split: SubalgebraSplit, order: int, order_cap=None):
        if order < 0:
            raise DimensionMismatch("group order must be nonnegative")
        self.split = split
        self.algebra = split.algebra
        self.order = order
        self.order_cap = order_cap

    # ----- nilpotent part ------------------------------------------------

    def nil(self, mids, top=None) -> NilTuple:
        n = self.algebra.dim
        mids = tuple(tuple(linalg.rat(x) for x in m) for m in mids)
        if len(mids) != self.order:
            raise DimensionMismatch(f"expected {self.order} middle slots, got {len(mids)}")
        if any(len(m) != n for m in mids):
            raise DimensionMismatch("middle slot length differs from algebra dimension")
        if top is None:
            top = linalg.zero_vector(n)
        top = tuple(linalg.rat(x) for x in top)
        if len(top) != n:
            raise DimensionMismatch("top slot length differs from algebra dimension")
        return NilTuple(mids, self.split.coset_reduce(top))

    def zero_nil(self) -> NilTuple:
        return self.nil([linalg.zero_vector(self.algebra.dim)] * self.order)

    def nil_negate(self, a: NilTuple) -> NilTuple:
        return NilTuple(tuple(linalg.vec_neg(m) for m in a.mids), linalg.vec_neg(a.top))

    def nil_is_zero(self, a: NilTuple, tol=0.0):
        return all(
            all(abs(x) <= tol for x in slot) for slot in (*a.mids, a.top))

    def _lift(self, a: NilTuple) -> Jet:
        n = self.algebra.dim
        coeffs = (linalg.zero_vector(n),) + a.mids + (a.top,)
        return Jet(n, self.order + 2, coeffs)

    def star(self, a: NilTuple, b: NilTuple) -> NilTuple:
        """Truncated-BCH product on nilpotent tuples."""
        z = local_mult(self.algebra, self._lift(a), self._lift(b),
                       self.order + 1, cap=self.order_cap)
        mids = tuple(z.coeff(m) for m in range(1, self.order + 1))
        return NilTuple(mids, self.split.coset_reduce(z.coeff(self.order + 1)))

    # ----- subgroup part -------------------------------------------------

    def h_element(self, ad, defining=None, tol=FLOAT_TOL) -> HElement:
        """Validate and wrap an adjoint matrix.

        The matrix must be a bracket automorphism and must preserve the
        subalgebra; both checks are exact for rational entries and use
        ``tol`` componentwise for float entries.
        """
        alg = self.algebra
        n = alg.dim
        ad = tuple(tuple(linalg.rat(x) for x in row) for row in ad)
        if len(ad) != n or any(len(row) != n for row in ad):
            raise DimensionMismatch("adjoint matrix must be square of the algebra dimension")
        exact = _matrix_exact(ad)
        check_tol = 0 if exact else tol
        cols = [linalg.mat_vec(ad, alg.basis_vector(a)) for a in range(n)]
        for a in range(n):
            for b in range(a + 1, n):
                lhs = linalg.mat_vec(ad, alg.bracket(alg.basis_vector(a), alg.basis_vector(b)))
                rhs = alg.bracket(cols[a], cols[b])
                if not _close(lhs, rhs, check_tol):
                    raise DimensionMismatch(
                        f"matrix is not a bracket automorphism at pair "
                        f"({alg.basis_names[a]}, {alg.basis_names[b]})")
        for v in self.split.h_basis:
            image = linalg.mat_vec(ad, v)
            if not _close(self.split.project_n(image),
                          linalg.zero_vector(n), check_tol):
                raise DimensionMismatch("matrix does not preserve the subalgebra")
        if defining is not None:
            defining = tuple(tuple(linalg.rat(x) for x in row) for row in defining)
        return HElement(ad, defining)

    def identity_h(self) -> HElement:
        return HElement(linalg.identity(self.algebra.dim))

    def h_compose(self, h1: HElement, h2: HElement) -> HElement:
        defining = None
        if h1.defining is not None and h2.defining is not None:
            defining = linalg.mat_mul(h1.defining, h2.defining)
        return HElement(linalg.mat_mul(h1.ad, h2.ad), defining)

    def h_inverse(self, h: HElement) -> HElement:
        defining = None if h.defining is None else linalg.invert(h.defining)
        return HElement(linalg.invert(h.ad), defining)

    def ad_nil(self, h: HElement, a: NilTuple) -> NilTuple:
        """Slotwise adjoint action, reducing the top slot."""
        mids = tuple(linalg.mat_vec(h.ad, m) for m in a.mids)
        return NilTuple(mids, self.split.coset_reduce(linalg.mat_vec(h.ad, a.top)))

    # ----- full group law --------------------------------------------------

    def element(self, h: HElement, nil: NilTuple) -> GroupElement:
        return GroupElement(h, nil)

    def identity(self) -> GroupElement:
        return GroupElement(self.identity_h(), self.zero_nil())

    def mult(self, g1: GroupElement, g2: GroupElement) -> GroupElement:
        return GroupElement(
            self.h_compose(g1.h, g2.h),
            self.star(g1.nil, self.ad_nil(g1.h, g2.nil)))

    def inverse(self, g: GroupElement) -> GroupElement:
        hinv = self.h_inverse(g.h)
        return GroupElement(hinv, self.ad_nil(hinv, self.nil_negate(g.nil)))


# ---------------------------------------------------------------------------
# the rotation-group example at orders 0 and 1
# ---------------------------------------------------------------------------

@dataclass
class ExampleCheck:
    description: str
    passed: bool


@dataclass
class ExampleReport:
    order: int
    checks: list
    float_summary: dict = None

    @property
    def passed(self):
        ok = all(c.passed for c in self.checks)
        if self.float_summary is not None:
            ok = ok and self.float_summary["passed"]
        return ok

    def as_dict(self):
        out = {
            "order": self.order,
            "passed": self.passed,
            "checks": [{"description": c.description, "passed": c.passed}
                       for c in self.checks],
        }
        if self.float_summary is not None:
            out["float_mode"] = {
                "samples": self.float_summary["samples"],
                "tolerance": self.float_summary["tolerance"],
                "max_deviation": self.float_summary["max_deviation"],
                "passed": self.float_summary["passed"],
            }
        return out


QUARTER_TURN = (
    (Fraction(0), Fraction(-1), Fraction(0)),
    (Fraction(1), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1)),
)


def _rotation_ad(angle):
    c, s = math.cos(angle), math.sin(angle)
    return ((c, -s, 0.0), (s, c, 0.0), (0.0, 0.0, 1.0))


def _plane_compose(rot1, t1, rot2, t2):
    """Euclidean-plane composition (R, t) (R', t') = (R R', t + R t')."""
    return linalg.mat_mul(rot1, rot2), linalg.vec_add(t1, linalg.mat_vec(rot1, t2))


def _plane_block(ad):
    return tuple(tuple(row[:2]) for row in ad[:2])


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def so3_example(order, seed=2024, float_samples=1000, rational_samples=100,
                tol=FLOAT_TOL) -> ExampleReport:
    """Check the expansion group of the rotation algebra against closed forms.

    Order 0 compares group multiplication with direct Euclidean-plane
    composition: exactly at quarter turns, within ``tol`` on float samples.
    Order 1 compares the star product with its cross-product closed form on
    random rational tuples.
    """
    from .catalog import builtin

    if order not in (0, 1):
        raise DimensionMismatch("the example is built for orders 0 and 1")
    alg, _ = builtin("so3")
    from .algebra import span_subalgebra

    split = span_subalgebra(alg, [alg.basis_vector(2)])
    grp = ExpansionGroup(split, order)
    rng = random.Random(seed)
    checks = []
    float_summary = None

    if order == 0:
        turns = [linalg.identity(3)]
        for _ in range(3):
            turns.append(linalg.mat_mul(QUARTER_TURN, turns[-1]))
        samples = [(1, 0, (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))]
        for _ in range(24):
            samples.append((
                rng.randrange(4), rng.randrange(4),
                (linalg.random_fraction(rng), linalg.random_fraction(rng)),
                (linalg.random_fraction(rng), linalg.random_fraction(rng))))
        for idx, (i1, i2, t1, t2) in enumerate(samples):
            h1 = grp.h_element(turns[i1])
            h2 = grp.h_element(turns[i2])
            g = grp.mult(
                grp.element(h1, grp.nil((), (*t1, Fraction(0)))),
                grp.element(h2, grp.nil((), (*t2, Fraction(0)))))
            rot, t = _plane_compose(_plane_block(turns[i1]), t1,
                                    _plane_block(turns[i2]), t2)
            ok = (_plane_block(g.h.ad) == rot and g.nil.top[:2] == t
                  and g.nil.top[2] == 0)
            checks.append(ExampleCheck(
                f"quarter-turn sample {idx}: group law matches plane composition", ok))
        max_dev = 0.0
        for _ in range(float_samples):
            a1, a2 = rng.uniform(0, 2 * math.pi), rng.uniform(0, 2 * math.pi)
            t1 = (rng.uniform(-2, 2), rng.uniform(-2, 2))
            t2 = (rng.uniform(-2, 2), rng.uniform(-2, 2))
            h1 = grp.h_element(_rotation_ad(a1), tol=1e-9)
            h2 = grp.h_element(_rotation_ad(a2), tol=1e-9)
            g = grp.mult(
                grp.element(h1, grp.nil((), (*t1, 0.0))),
                grp.element(h2, grp.nil((), (*t2, 0.0))))
            rot, t = _plane_compose(_plane_block(h1.ad), t1, _plane_block(h2.ad), t2)
            for got, want in zip(g.nil.top[:2], t):
                max_dev = max(max_dev, abs(got - want))
            for row_got, row_want in zip(_plane_block(g.h.ad), rot):
                for got, want in zip(row_got, row_want):
                    max_dev = max(max_dev, abs(got - want))
        float_summary = {
            "samples": float_samples,
            "tolerance": repr(tol),
            "max_deviation": repr(max_dev),
            "passed": max_dev <= tol,
        }
    else:
        special = [
            ((Fraction(1), Fraction(0), Fraction(0)),
             (Fraction(0), Fraction(1), Fraction(0))),
            ((Fraction(0), Fraction(0), Fraction(1)),
             (Fraction(1), Fraction(0), Fraction(0))),
        ]
        cases = special + [
            (linalg.random_vector(rng, 3), linalg.random_vector(rng, 3))
            for _ in range(rational_samples)
        ]
        for idx, (v, v_hat) in enumerate(cases):
            w = (linalg.random_fraction(rng), linalg.random_fraction(rng), Fraction(0))
            w_hat = (linalg.random_fraction(rng), linalg.random_fraction(rng), Fraction(0))
            got = grp.star(grp.nil((v,), w), grp.nil((v_hat,), w_hat))
            half_cross = linalg.vec_scale(Fraction(1, 2), _cross(v, v_hat))
            want_top = (w[0] + w_hat[0] + half_cross[0],
                        w[1] + w_hat[1] + half_cross[1],
                        Fraction(0))
            ok = got.mids[0] == linalg.vec_add(v, v_hat) and got.top == want_top
            label = ("closed-form special case" if idx < len(special)
                     else "closed-form random sample")
            checks.append(ExampleCheck(f"{label} {idx}: star matches cross-product form", ok))
    return ExampleReport(order, checks, float_summary)
