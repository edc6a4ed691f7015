"""Truncated exact arithmetic in the algebra generated by a, b with ab - ba = b^2.

An AlgebraElement is a sparse table of Gaussian-rational coefficients over
monomials in one of the two normal orderings:

    LEFT   a^p b^q      (key (p, q))
    RIGHT  b^q a^p      (key (p, q), same key, different monomial)

All computation happens in the quotient of the algebra by the two-sided
ideal of total degree > N.  The defining relation is homogeneous of degree
2, so this quotient is a finite-dimensional algebra and every operation
below is exact in it; truncation never introduces approximation.

The change of basis between the orderings is governed by the integers
reorder_coeff(p, q, j):

    a^p b^q = sum_j reorder_coeff(p,q,j) * b^(q+j) a^(p-j)
    b^q a^p = sum_j (-1)^j reorder_coeff(p,q,j) * a^(p-j) b^(q+j)
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import cache

from .coefficients import ONE, Coefficient, GaussianRational, RationalLike
from .errors import OrderingMismatchError, OrderMismatchError


class Ordering(enum.Enum):
    LEFT = "left"   # monomials a^p b^q
    RIGHT = "right"  # monomials b^q a^p


LEFT = Ordering.LEFT
RIGHT = Ordering.RIGHT


@cache
def reorder_coeff(p: int, q: int, j: int) -> int:
    """The exact integer coefficient of b^(q+j) a^(p-j) in a^p b^q.

    Zero outside 0 <= j <= p.  For q >= 1 the closed form is
    C(q+j-1, j) * p!/(p-j)!; for q = 0 the reordering is trivial.
    Satisfies both recursions

        G(p+1,q,j) = G(p,q,j) + (q+j-1) G(p,q,j-1)
        G(p+1,q,j) = G(p,q,j) + q G(p,q+1,j-1)
    """
    if j < 0 or j > p:
        return 0
    if q == 0:
        return 1 if j == 0 else 0
    return math.comb(q + j - 1, j) * math.perm(p, j)


class AlgebraElement:
    """An element of the order-N quotient algebra, in a fixed normal ordering.

    Immutable.  Zero coefficients are never stored; no stored key exceeds
    total degree `order`.  Equality demands identical order and ordering:
    comparing across truncations or orderings raises instead of silently
    returning False - convert explicitly.
    """

    __slots__ = ("order", "ordering", "coeffs")

    def __init__(self, order: int, ordering: Ordering, coeffs: dict):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        table = {}
        for (p, q), c in coeffs.items():
            if p < 0 or q < 0:
                raise ValueError(f"negative exponent in key {(p, q)}")
            if p + q > order:
                raise ValueError(f"key {(p, q)} exceeds truncation order {order}")
            c = GaussianRational.coerce(c)
            if c:
                table[(p, q)] = c
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "ordering", ordering)
        object.__setattr__(self, "coeffs", table)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero(order: int, ordering: Ordering = LEFT) -> AlgebraElement:
        return AlgebraElement(order, ordering, {})

    @staticmethod
    def one(order: int, ordering: Ordering = LEFT) -> AlgebraElement:
        return AlgebraElement(order, ordering, {(0, 0): ONE})

    @staticmethod
    def monomial(p: int, q: int, order: int, coeff=ONE,
                 ordering: Ordering = LEFT) -> AlgebraElement:
        return AlgebraElement(order, ordering, {(p, q): GaussianRational.coerce(coeff)})

    @staticmethod
    def scalar(value, order: int, ordering: Ordering = LEFT) -> AlgebraElement:
        return AlgebraElement.monomial(0, 0, order, value, ordering)

    # -- structure -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Maximal total degree of a stored monomial; None for zero."""
        return max(p + q for p, q in self.coeffs) if self.coeffs else None

    @property
    def valuation(self):
        """Minimal total degree of a stored monomial; None for zero."""
        return min(p + q for p, q in self.coeffs) if self.coeffs else None

    @property
    def is_homogeneous(self) -> bool:
        return len({p + q for p, q in self.coeffs}) <= 1

    def coefficient(self, p: int, q: int) -> Coefficient:
        return self.coeffs.get((p, q), GaussianRational())

    @property
    def constant_term(self) -> Coefficient:
        return self.coefficient(0, 0)

    def homogeneous_part(self, n: int) -> AlgebraElement:
        return AlgebraElement(self.order, self.ordering,
                              {k: c for k, c in self.coeffs.items() if k[0] + k[1] == n})

    def truncated(self, order: int) -> AlgebraElement:
        """Image in the smaller quotient of the given order."""
        if order > self.order:
            raise OrderMismatchError(f"cannot truncate order {self.order} up to {order}")
        return AlgebraElement(order, self.ordering,
                              {k: c for k, c in self.coeffs.items() if k[0] + k[1] <= order})

    def lifted(self, order: int) -> AlgebraElement:
        """The zero-tail representative in a larger quotient.

        Degrees above self.order are unknown for a truncated value; this
        picks the zero representative, exact whenever self is an actual
        polynomial or when only degrees <= self.order matter downstream.
        """
        if order < self.order:
            raise OrderMismatchError(f"cannot lift order {self.order} down to {order}")
        return AlgebraElement(order, self.ordering, dict(self.coeffs))

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.order != other.order:
            raise OrderMismatchError(
                f"comparing elements of different truncation orders ({self.order} vs {other.order})")
        if self.ordering is not other.ordering:
            raise OrderingMismatchError(
                "comparing elements in different orderings; convert explicitly")
        return self.coeffs == other.coeffs

    __hash__ = None

    # -- arithmetic sugar ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, AlgebraElement):
            return add(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, AlgebraElement):
            return add(self, negated(other))
        return NotImplemented

    def __neg__(self):
        return negated(self)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        if isinstance(other, (GaussianRational,) + RationalLike):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (GaussianRational,) + RationalLike):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, n: int):
        return power(self, n)

    # -- conversions -----------------------------------------------------

    def to_right(self) -> AlgebraElement:
        return to_right(self)

    def to_left(self) -> AlgebraElement:
        return to_left(self)

    def with_ordering(self, ordering: Ordering) -> AlgebraElement:
        return with_ordering(self, ordering)

    def __repr__(self):
        terms = ", ".join(f"{k}: {v}" for k, v in sorted(self.coeffs.items()))
        return f"<AlgebraElement order={self.order} {self.ordering.value} {{{terms}}}>"


def gen_a(order: int) -> AlgebraElement:
    return AlgebraElement.monomial(1, 0, order)


def gen_b(order: int) -> AlgebraElement:
    return AlgebraElement.monomial(0, 1, order)


# -- guards ---------------------------------------------------------------

def _check_same_ordering(x: AlgebraElement, y: AlgebraElement):
    if x.ordering is not y.ordering:
        raise OrderingMismatchError(
            f"orderings differ ({x.ordering.value} vs {y.ordering.value}); convert explicitly")


def _check_same_order(x: AlgebraElement, y: AlgebraElement):
    if x.order != y.order:
        raise OrderMismatchError(f"truncation orders differ ({x.order} vs {y.order})")


# -- linear operations ------------------------------------------------------

def add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Coefficientwise sum; the result lives at the smaller of the two orders."""
    _check_same_ordering(x, y)
    order = min(x.order, y.order)
    out = {k: c for k, c in x.coeffs.items() if k[0] + k[1] <= order}
    for k, c in y.coeffs.items():
        if k[0] + k[1] <= order:
            out[k] = out.get(k, GaussianRational()) + c
    return AlgebraElement(order, x.ordering, out)


def scale(c, x: AlgebraElement) -> AlgebraElement:
    c = GaussianRational.coerce(c)
    if not c:
        return AlgebraElement.zero(x.order, x.ordering)
    return AlgebraElement(x.order, x.ordering, {k: c * v for k, v in x.coeffs.items()})


def negated(x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(x.order, x.ordering, {k: -v for k, v in x.coeffs.items()})


# -- ordering conversions -----------------------------------------------------

def to_right(x: AlgebraElement) -> AlgebraElement:
    """Rewrite a LEFT element on the basis b^q a^p (value-equal, same order)."""
    if x.ordering is not LEFT:
        raise OrderingMismatchError("to_right expects a LEFT-ordered element")
    out: dict = {}
    for (p, q), c in x.coeffs.items():
        if q == 0:
            out[(p, 0)] = out.get((p, 0), GaussianRational()) + c
            continue
        for j in range(p + 1):
            key = (p - j, q + j)
            out[key] = out.get(key, GaussianRational()) + c * reorder_coeff(p, q, j)
    return AlgebraElement(x.order, RIGHT, out)


def to_left(x: AlgebraElement) -> AlgebraElement:
    """Rewrite a RIGHT element on the basis a^p b^q; inverse of to_right."""
    if x.ordering is not RIGHT:
        raise OrderingMismatchError("to_left expects a RIGHT-ordered element")
    out: dict = {}
    for (p, q), c in x.coeffs.items():
        if q == 0:
            out[(p, 0)] = out.get((p, 0), GaussianRational()) + c
            continue
        for j in range(p + 1):
            g = reorder_coeff(p, q, j)
            if j % 2:
                g = -g
            key = (p - j, q + j)
            out[key] = out.get(key, GaussianRational()) + c * g
    return AlgebraElement(x.order, LEFT, out)


def with_ordering(x: AlgebraElement, ordering: Ordering) -> AlgebraElement:
    if x.ordering is ordering:
        return x
    return to_right(x) if ordering is RIGHT else to_left(x)


# -- multiplication --------------------------------------------------------------

def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Product in the truncated algebra; both factors must be LEFT-ordered.

    For x-term a^p b^q and y-term a^p' b^q' the inner factor b^q a^p' is
    rewritten by the inverse ordering formula, so the (m, n) output
    coefficient is the sum of (-1)^j reorder_coeff(p',q,j) x_{p,q} y_{p',q'}
    over p+p'-j = m, q+q'+j = n.  The relation being homogeneous, the
    product of degree-d and degree-d' monomials is homogeneous of degree
    d+d': grading is exact, and truncation only drops whole degrees > N.
    """
    _check_same_ordering(x, y)
    if x.ordering is not LEFT:
        raise OrderingMismatchError("mul expects LEFT-ordered operands")
    _check_same_order(x, y)
    order = x.order
    out: dict = {}
    for (p, q), c in x.coeffs.items():
        dx = p + q
        for (p2, q2), d in y.coeffs.items():
            if dx + p2 + q2 > order:
                continue
            cd = c * d
            if q == 0:
                key = (p + p2, q2)
                out[key] = out.get(key, GaussianRational()) + cd
                continue
            for j in range(p2 + 1):
                g = reorder_coeff(p2, q, j)
                if j % 2:
                    g = -g
                key = (p + p2 - j, q + q2 + j)
                out[key] = out.get(key, GaussianRational()) + cd * g
    return AlgebraElement(order, LEFT, out)


def power(x: AlgebraElement, n: int) -> AlgebraElement:
    if n < 0:
        raise ValueError("negative powers are not defined here; see division.invert")
    out = AlgebraElement.one(x.order, x.ordering)
    if x.ordering is LEFT:
        for _ in range(n):
            out = mul(out, x)
        return out
    left = with_ordering(x, LEFT)
    for _ in range(n):
        out = mul(out, left)
    return with_ordering(out, RIGHT)


# -- the anti-automorphism and the shear automorphisms ------------------------

def anti_automorphism(x: AlgebraElement, ordering: Ordering | None = None) -> AlgebraElement:
    """The involutive anti-automorphism fixing a and sending b to -b.

    It reverses products and maps the LEFT monomial a^p b^q to the RIGHT
    monomial (-1)^q b^q a^p (and symmetrically), so on the coefficient
    table it swaps the ordering tag and flips the sign of odd-q terms.
    Pass `ordering` to convert the result; by default the swapped form is
    returned as-is.
    """
    swapped = RIGHT if x.ordering is LEFT else LEFT
    out = {(p, q): (-c if q % 2 else c) for (p, q), c in x.coeffs.items()}
    result = AlgebraElement(x.order, swapped, out)
    if ordering is not None:
        result = with_ordering(result, ordering)
    return result


def rising_product(x, j: int) -> Coefficient:
    """(x+j-1)(x+j-2)...x as an explicit product; 1 for j = 0.

    Evaluated literally so that non-integer and negative x work (for
    x = -1 the factor x+1 kills every j >= 2 term).
    """
    x = GaussianRational.coerce(x)
    out = ONE
    for t in range(j):
        out = out * (x + t)
    return out


def binomial_pow(x, p: int, order: int) -> AlgebraElement:
    """(a + x*b)^p expanded in RIGHT ordering.

    Closed form: sum_j rising_product(x, j) * C(p, j) * b^j a^(p-j).
    Agrees with the p-fold product of (a + x*b).
    """
    if p > order:
        raise OrderMismatchError(f"degree {p} exceeds truncation order {order}")
    x = GaussianRational.coerce(x)
    out: dict = {}
    rising = ONE
    for j in range(p + 1):
        if j:
            rising = rising * (x + (j - 1))
        c = rising * math.comb(p, j)
        if c:
            out[(p - j, j)] = c
    return AlgebraElement(order, RIGHT, out)


def shear(x, X: AlgebraElement) -> AlgebraElement:
    """The unitary automorphism a -> a + x*b, b -> b, applied to X.

    Computed on the RIGHT form termwise: b^q a^p -> b^q (a + x*b)^p, the
    b^q prefix simply shifting the RIGHT keys.  Multiplicative, fixes the
    b-subalgebra, and shear(x, shear(y, X)) = shear(x+y, X).  The result
    comes back in X's ordering.
    """
    x = GaussianRational.coerce(x)
    src = with_ordering(X, RIGHT)
    order = X.order
    out: dict = {}
    for (p, q), c in src.coeffs.items():
        if p == 0:
            out[(0, q)] = out.get((0, q), GaussianRational()) + c
            continue
        for (pp, jj), d in binomial_pow(x, p, order - q).coeffs.items():
            key = (pp, jj + q)
            out[key] = out.get(key, GaussianRational()) + c * d
    result = AlgebraElement(order, RIGHT, out)
    return with_ordering(result, X.ordering)


def coefficient_profile(x: AlgebraElement) -> list[Fraction]:
    """Per-degree size profile: entry n is max over p+q = n of magnitude/q!.

    Purely diagnostic (an exact echo of the factorial growth class the
    algebra's coefficient estimates live in); length order+1.
    """
    out = [Fraction(0)] * (x.order + 1)
    for (p, q), c in x.coeffs.items():
        n = p + q
        value = c.magnitude() / math.factorial(q)
        if value > out[n]:
            out[n] = value
    return out
