"""Unit inversion, division with remainder, and homogeneous factorization.

Division is offered against the divisor shapes that admit an exact
division theory here: a single linear form (a - lam*b), and products

    P = (a - lam_1 b) S_1 (a - lam_2 b) S_2 ... (a - lam_k b) S_k

with each S_i a unit of the b-subalgebra.  The quotient of an order-N
dividend is determined to order N-k and the remainder (a-degree <= k-1)
to order N; both identities are exact in the truncated algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coefficients import GaussianRational, ONE
from .elements import (LEFT, RIGHT, AlgebraElement, mul, reorder_coeff, scale, shear,
                       to_right, with_ordering)
from .errors import (NotHomogeneousError, NotMonicError, OrderMismatchError,
                     ZeroConstantTermError, ZeroElementError)
from .polynomials import Poly, gaussian_roots, interpolate
from .series import APolynomial, BSeries


def invert(x: AlgebraElement) -> AlgebraElement:
    """Two-sided inverse of a unit in the order-N quotient.

    After scaling the constant term to 1, the inverse's LEFT coefficients
    are produced by the product-formula recursion

        y_{m,n} = - sum over x-terms (p,q) != (0,0), j in [0, n-q] of
                    (-1)^j reorder_coeff(m+j-p, q, j) x_{p,q} y_{m+j-p, n-q-j}

    where every referenced y has strictly smaller total degree, so filling
    the table degree by degree terminates.  (The recursion defines a right
    inverse; the truncated algebra is finite-dimensional, so it is
    automatically two-sided.)
    """
    src = with_ordering(x, LEFT)
    c0 = src.constant_term
    if not c0:
        raise ZeroConstantTermError("constant term is zero; element is not a unit")
    xs = scale(c0.inverse(), src)
    order = x.order
    terms = [(k, c) for k, c in xs.coeffs.items() if k != (0, 0)]
    y = {(0, 0): ONE}
    for d in range(1, order + 1):
        for m in range(d, -1, -1):
            n = d - m
            s = GaussianRational()
            for (p, q), xc in terms:
                if p > m:
                    continue  # reorder_coeff(m+j-p, q, j) needs j <= m+j-p
                for j in range(n - q + 1):
                    yc = y.get((m + j - p, n - q - j))
                    if yc is None:
                        continue
                    g = reorder_coeff(m + j - p, q, j)
                    if not g:
                        continue
                    if j % 2:
                        g = -g
                    s = s + (xc * yc) * g
            if s:
                y[(m, n)] = -s
    out = AlgebraElement(order, LEFT, y)
    return with_ordering(scale(c0.inverse(), out), x.ordering)


def divide_linear(x: AlgebraElement, lam) -> tuple[AlgebraElement, BSeries]:
    """Unique Q, R with  x = Q (a - lam*b) + R,  R a series in b.

    Shear by lam to reduce to division by a, split off the a-free part of
    the RIGHT form, shear the quotient back.  Q comes back at order N-1
    (that is how far it is determined), R at order N.
    """
    lam = GaussianRational.coerce(lam)
    order = x.order
    sheared = with_ordering(shear(lam, x), RIGHT)
    r_table = {}
    q_table = {}
    for (p, q), c in sheared.coeffs.items():
        if p == 0:
            r_table[q] = c
        else:
            q_table[(p - 1, q)] = c
    remainder = BSeries(order, r_table)
    quotient = AlgebraElement(max(order - 1, 0), RIGHT, q_table)
    quotient = with_ordering(shear(-lam, quotient), x.ordering)
    return quotient, remainder


def power_division_closed_form(m: int, lam) -> tuple[AlgebraElement, BSeries]:
    """The closed-form quotient and remainder of a^m by (a - lam*b).

        Q = a^(m-1) + lam a^(m-2) b + lam(lam+1) a^(m-3) b^2 + ...
        R = lam(lam+1)...(lam+m-1) b^m

    Serves as an independent oracle for divide_linear; Q is returned at
    order m-1 and R at order m to match it.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    lam = GaussianRational.coerce(lam)
    rising = ONE
    q_table = {}
    for i in range(m):
        if rising:
            q_table[(m - 1 - i, i)] = rising
        rising = rising * (lam + i)
    quotient = AlgebraElement(m - 1, LEFT, q_table)
    remainder = BSeries.monomial(m, m, rising)
    return quotient, remainder


@dataclass(frozen=True)
class FactoredProduct:
    """An ordered product of factors (a - lam_i b) S_i with unit S_i."""

    factors: tuple  # of (GaussianRational, BSeries)
    order: int

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a factored product needs at least one factor")
        checked = []
        for lam, s in self.factors:
            lam = GaussianRational.coerce(lam)
            if not isinstance(s, BSeries):
                raise TypeError("unit parts must be BSeries")
            s = s.truncated(self.order) if s.order > self.order else s.lifted(self.order)
            if not s.is_unit:
                raise ZeroConstantTermError("unit part has zero constant term")
            checked.append((lam, s))
        object.__setattr__(self, "factors", tuple(checked))

    @staticmethod
    def linear(lam, order: int) -> FactoredProduct:
        return FactoredProduct(((GaussianRational.coerce(lam), BSeries.one(order)),), order)

    @staticmethod
    def from_lambdas(lambdas, order: int) -> FactoredProduct:
        one = BSeries.one(order)
        return FactoredProduct(tuple((GaussianRational.coerce(l), one) for l in lambdas), order)

    def __len__(self):
        return len(self.factors)

    def expanded(self, order: int | None = None) -> AlgebraElement:
        order = self.order if order is None else order
        out = AlgebraElement.one(order)
        a = AlgebraElement.monomial(1, 0, order)
        b = AlgebraElement.monomial(0, 1, order)
        for lam, s in self.factors:
            out = mul(out, a - scale(lam, b))
            out = mul(out, s.lifted(order).to_element() if s.order < order
                      else s.truncated(order).to_element())
        return out


@dataclass(frozen=True)
class DivisionResult:
    """x = quotient * P + remainder, exactly modulo total degree > order."""

    quotient: AlgebraElement    # order N - k
    remainder: APolynomial      # order N, a-degree <= k-1


def divide(x: AlgebraElement, product: FactoredProduct) -> DivisionResult:
    """Division with remainder by a factored product (induction on the factors).

    Divide by the trailing k-1 factors, then peel the leading (a - lam_1 b)
    from Q_0 S_1^{-1}; the remainder recombines as
    R_0 + R_1 S_1 (a - lam_2 b) S_2 ... (a - lam_k b) S_k.
    """
    k = len(product)
    if x.order < k:
        raise OrderMismatchError(f"dividend order {x.order} below the {k}-factor divisor")
    if product.order < x.order:
        raise OrderMismatchError(
            f"divisor known only to order {product.order} < dividend order {x.order}")
    order = x.order
    if product.order != order:
        product = FactoredProduct(product.factors, order)
    quotient, rem_elem = _divide_padded(with_ordering(x, LEFT), product, order)
    remainder = APolynomial.from_element(rem_elem)
    if remainder.a_degree is not None and remainder.a_degree > k - 1:
        raise AssertionError("remainder a-degree exceeded k-1; internal bug")
    return DivisionResult(with_ordering(quotient.truncated(order - k), x.ordering), remainder)


def _divide_padded(x, product, order):
    """Work at a fixed padded order; callers truncate.  Returns (Q, R) elements."""
    lam1, s1 = product.factors[0]
    s1_elem = s1.to_element()
    s1_inv = s1.inverse().to_element()
    if len(product) == 1:
        q0, r0 = divide_linear(mul(x, s1_inv), lam1)
        return q0.lifted(order), mul(r0.to_element(), s1_elem)
    tail = FactoredProduct(product.factors[1:], order)
    q0, r0 = _divide_padded(x, tail, order)
    q1, r1 = divide_linear(mul(q0, s1_inv), lam1)
    r = r0 + mul(mul(r1.to_element(), s1_elem), tail.expanded(order))
    return q1.lifted(order), r


def remainder_polynomial(x: AlgebraElement) -> Poly:
    """The polynomial rho with rho(lam) b^m = remainder of x by (a - lam*b).

    Defined for homogeneous monic x of degree m (monic: the a^m coefficient
    is 1).  The remainder of a homogeneous degree-m element is a multiple
    of b^m and depends polynomially (degree <= m) on lam, so rho is pinned
    by exact interpolation at lam = 0..m.  lam is a root of rho iff
    (a - lam*b) divides x on the right.
    """
    if x.is_zero:
        raise ZeroElementError("remainder polynomial of the zero element")
    if not x.is_homogeneous:
        raise NotHomogeneousError("remainder_polynomial expects a homogeneous element")
    left = with_ordering(x, LEFT)
    m = left.degree
    if left.coefficient(m, 0) != ONE:
        raise NotMonicError("the a^m coefficient must be 1")
    points = []
    for lam in range(m + 1):
        _, rem = divide_linear(left, lam)
        points.append((GaussianRational(lam), rem.coefficient(m)))
    return interpolate(points)


@dataclass(frozen=True)
class HomogeneousFactorization:
    """scale * b^b_power * core * prod_i (a - lambdas[i] * b), re-expandable.

    `complete` means core is absent and the lambdas account for the whole
    element; otherwise `core` is the monic homogeneous part on which no
    further Gaussian-rational root was found.
    """

    scale: GaussianRational
    b_power: int
    lambdas: tuple
    core: AlgebraElement | None
    order: int

    @property
    def complete(self) -> bool:
        return self.core is None

    def expanded(self) -> AlgebraElement:
        out = AlgebraElement.monomial(0, self.b_power, self.order, self.scale)
        if self.core is not None:
            out = mul(out, self.core)
        a = AlgebraElement.monomial(1, 0, self.order)
        b = AlgebraElement.monomial(0, 1, self.order)
        for lam in self.lambdas:
            out = mul(out, a - scale(lam, b))
        return out


def factor_homogeneous(x: AlgebraElement) -> HomogeneousFactorization:
    """Best-effort factorization of a homogeneous element into linear forms.

    Strips the maximal left power of b (the smallest q in the RIGHT form),
    scales the rest monic, then repeatedly peels a right factor
    (a - lam*b) at a root lam of the remainder polynomial.  Roots are
    searched in Q(i); if none is found the peeled prefix is returned with
    the unfactored monic core.  Factorizations are not unique; the
    deterministic choice here is the largest root under (re, im) ordering.
    """
    if x.is_zero:
        raise ZeroElementError("cannot factor the zero element")
    if not x.is_homogeneous:
        raise NotHomogeneousError("factor_homogeneous expects a homogeneous element")
    order = x.order
    right = with_ordering(x, RIGHT)
    j = min(q for _, q in right.coeffs)
    stripped = AlgebraElement(order, RIGHT, {(p, q - j): c for (p, q), c in right.coeffs.items()})
    m = stripped.degree
    lead = stripped.coefficient(m, 0)
    core = with_ordering(scale(lead.inverse(), stripped), LEFT)
    lambdas = []
    while core.degree and core.degree > 0:
        rho = remainder_polynomial(core)
        roots = gaussian_roots(rho)
        if not roots:
            break
        lam = max(roots, key=lambda z: (z.re, z.im))
        q, rem = divide_linear(core, lam)
        if not rem.is_zero:
            raise AssertionError("root of the remainder polynomial left a remainder; bug")
        lambdas.append(lam)
        core = q.lifted(order)
    lambdas.reverse()
    done = core.degree == 0 or core.degree is None
    return HomogeneousFactorization(
        scale=lead,
        b_power=j,
        lambdas=tuple(lambdas),
        core=None if done else core,
        order=order,
    )
