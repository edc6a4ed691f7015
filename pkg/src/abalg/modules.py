"""Finite-rank module structures over the algebra.

Three carriers:

  * SimplePoleModule E(theta): a free rank-k module over the b-series with
    basis e and law  a e = theta * (b e).  The whole algebra acts through

        a^p e = (theta + (p-1)I) ... (theta + I) theta b^p e,

    so a RIGHT-ordered element sum x_{p,q} b^q a^p sends e to
    sum_j z_j b^j e with z_j = sum_{p+q=j} x_{p,q} * that matrix product.

  * Fresco: the cyclic quotient by a left ideal generated by a factored
    product P with k factors; elements are canonical remainders of
    a-degree <= k-1 and the action is multiply-then-divide.

  * SeriesPoleModule: the same shape as E(theta) but with a structure
    matrix X(b) that is a b-series; produced by the differential-system
    converter, which solves  a e = M(a) b e  by a fixed-point iteration
    gaining one b-adic order per step.

Module truncation is b-adic (order N in b), independent of the algebra's
total-degree truncation; acting with an element of total-degree order N on
entries known mod b^(N+1) is exact mod b^(N+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coefficients import GaussianRational, ONE, ZERO
from .division import DivisionResult, FactoredProduct, divide
from .elements import LEFT, RIGHT, AlgebraElement, mul, with_ordering
from .errors import AbalgError, OrderingMismatchError, OrderMismatchError
from .linalg import QMatrix, characteristic_polynomial, minimal_polynomial
from .polynomials import Poly, rational_roots
from .series import APolynomial, BSeries


# -- simple pole modules E(theta) ------------------------------------------


@dataclass(frozen=True)
class SimplePoleModule:
    """Free rank-k module with a e = theta b e, entries truncated at b^order."""

    theta: QMatrix
    order: int

    def __post_init__(self):
        if not self.theta.is_square:
            raise ValueError("theta must be square")

    @property
    def rank(self) -> int:
        return self.theta.shape[0]

    def zero(self) -> ModuleElement:
        return ModuleElement(self, tuple(BSeries.zero(self.order) for _ in range(self.rank)))

    def basis_vector(self, i: int) -> ModuleElement:
        entries = [BSeries.zero(self.order) for _ in range(self.rank)]
        entries[i] = BSeries.one(self.order)
        return ModuleElement(self, tuple(entries))

    def element(self, entries) -> ModuleElement:
        return ModuleElement(self, tuple(
            s if isinstance(s, BSeries) else BSeries(self.order, s) for s in entries))


@dataclass(frozen=True)
class ModuleElement:
    """Coordinates over the b-series basis e_1..e_k of the parent module."""

    module: SimplePoleModule
    entries: tuple  # of BSeries, length k

    def __post_init__(self):
        if len(self.entries) != self.module.rank:
            raise ValueError("entry count does not match the module rank")
        fixed = tuple(
            s if s.order == self.module.order else
            (s.truncated(self.module.order) if s.order > self.module.order
             else s.lifted(self.module.order))
            for s in self.entries)
        object.__setattr__(self, "entries", fixed)

    @property
    def is_zero(self) -> bool:
        return all(s.is_zero for s in self.entries)

    @property
    def b_valuation(self):
        vals = [s.valuation for s in self.entries if s.valuation is not None]
        return min(vals) if vals else None

    def __add__(self, other):
        if not isinstance(other, ModuleElement) or other.module != self.module:
            return NotImplemented
        return ModuleElement(self.module,
                             tuple(s + t for s, t in zip(self.entries, other.entries)))

    def __sub__(self, other):
        if not isinstance(other, ModuleElement) or other.module != self.module:
            return NotImplemented
        return ModuleElement(self.module,
                             tuple(s - t for s, t in zip(self.entries, other.entries)))

    def scaled(self, c) -> ModuleElement:
        return ModuleElement(self.module, tuple(s.scaled(c) for s in self.entries))


def _shift_factors(theta: QMatrix, top: int) -> list[QMatrix]:
    """[M_0..M_top] with M_p = (theta + (p-1)I) ... (theta + I) theta."""
    k = theta.shape[0]
    out = [QMatrix.identity(k)]
    ident = QMatrix.identity(k)
    for p in range(1, top + 1):
        out.append((theta + ident.scaled(p - 1)) @ out[-1])
    return out


def act_on_basis(x: AlgebraElement, module: SimplePoleModule) -> list[QMatrix]:
    """The series matrix Z(b) with x e = Z(b) e, as matrices [z_0 .. z_N].

    x must be RIGHT-ordered with truncation order >= the module's b-order;
    z_j collects the terms of total degree j.
    """
    if x.ordering is not RIGHT:
        raise OrderingMismatchError("act_on_basis expects a RIGHT-ordered element")
    if x.order < module.order:
        raise OrderMismatchError(
            f"element order {x.order} below module b-order {module.order}")
    n = module.order
    k = module.rank
    factors = _shift_factors(module.theta, min(x.degree or 0, n))
    zs = [QMatrix.zeros(k) for _ in range(n + 1)]
    for (p, q), c in x.coeffs.items():
        j = p + q
        if j <= n:
            zs[j] = zs[j] + factors[p].scaled(c)
    return zs


def _zmatrix_row(zs: list[QMatrix], i: int, module: SimplePoleModule) -> ModuleElement:
    k = module.rank
    entries = []
    for l in range(k):
        entries.append(BSeries(module.order, {j: z.entry(i, l) for j, z in enumerate(zs)}))
    return ModuleElement(module, tuple(entries))


def act(x: AlgebraElement, v: ModuleElement, module: SimplePoleModule) -> ModuleElement:
    """x . (sum_i V_i e_i) = sum_i (x V_i) e_i, each product acting on e_i.

    x is expected RIGHT-ordered (the natural input for the basis law) but
    the multiplication itself runs in LEFT form internally.
    """
    if v.module != module:
        raise ValueError("element does not belong to the module")
    if x.order < module.order:
        raise OrderMismatchError(
            f"element order {x.order} below module b-order {module.order}")
    left = with_ordering(x, LEFT)
    out = module.zero()
    for i, series in enumerate(v.entries):
        if series.is_zero:
            continue
        w = mul(left, series.to_element(x.order))
        zs = act_on_basis(with_ordering(w, RIGHT), module)
        out = out + _zmatrix_row(zs, i, module)
    return out


def bernstein(module: SimplePoleModule) -> Poly:
    """The minimal polynomial of -theta (monic, exact Krylov + lcm)."""
    return minimal_polynomial(-module.theta)


@dataclass(frozen=True)
class SpectrumCheck:
    """Outcome of the geometric-spectrum test; falsy when not geometric."""

    is_geometric: bool
    eigenvalues: tuple | None   # Fractions with multiplicity, when split over Q
    diagnostic: str | None

    def __bool__(self):
        return self.is_geometric


def is_geometric_spectrum(module: SimplePoleModule) -> SpectrumCheck:
    """True iff every eigenvalue of theta is a positive rational.

    Decided exactly: deflate rational roots out of the characteristic
    polynomial; anything left means the spectrum does not split over Q and
    the check fails with a diagnostic rather than attempting algebraic
    numbers.
    """
    eigen = []
    g = characteristic_polynomial(module.theta)
    while g.degree >= 1:
        found = None
        for r in rational_roots(g):
            q, rem = g.divmod(Poly([-GaussianRational(r), 1]))
            if rem.is_zero:
                found = (r, q)
                break
        if found is None:
            return SpectrumCheck(False, None,
                                 "characteristic polynomial does not split over Q")
        r, g = found
        eigen.append(r)
    eigen.sort()
    bad = [r for r in eigen if r <= 0]
    if bad:
        return SpectrumCheck(False, tuple(eigen),
                             f"non-positive eigenvalue {bad[0]}")
    return SpectrumCheck(True, tuple(eigen), None)


# -- frescos ------------------------------------------------------------------


@dataclass(frozen=True)
class Fresco:
    """The cyclic quotient by the left ideal generated by a factored product.

    Free over the b-series with basis 1, a, ..., a^(k-1); elements are the
    canonical remainders.
    """

    product: FactoredProduct

    @property
    def rank(self) -> int:
        return len(self.product)

    @property
    def order(self) -> int:
        return self.product.order

    def generator(self) -> APolynomial:
        return APolynomial.one(self.order)

    def reduce(self, x: AlgebraElement) -> APolynomial:
        return divide(x, self.product).remainder


def fresco_act(x: AlgebraElement, r: APolynomial, fresco: Fresco) -> APolynomial:
    """Canonical representative of x * r in the quotient (multiply, then divide)."""
    if r.a_degree is not None and r.a_degree > fresco.rank - 1:
        raise AbalgError("representative has a-degree >= the fresco rank")
    left = with_ordering(x, LEFT)
    prod = mul(left, r.to_element(LEFT).lifted(left.order)
               if r.order < left.order else r.to_element(LEFT).truncated(left.order))
    return fresco.reduce(prod)


def unit_fresco(order: int) -> Fresco:
    """The rank-1 fresco on (a - b): its generator satisfies a.e = b.e."""
    return Fresco(FactoredProduct.linear(1, order))


# -- differential systems -> series structure matrices ----------------------------


@dataclass(frozen=True)
class DifferentialSystem:
    """s dF/ds = M(s) F with M a matrix polynomial M_0 + M_1 s + ... ."""

    coeffs: tuple  # of QMatrix

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("need at least the constant matrix M(0)")
        k = self.coeffs[0].shape[0]
        for m in self.coeffs:
            if not m.is_square or m.shape[0] != k:
                raise ValueError("all coefficient matrices must be square of one size")

    @property
    def rank(self) -> int:
        return self.coeffs[0].shape[0]

    @property
    def residue(self) -> QMatrix:
        return self.coeffs[0]


@dataclass(frozen=True)
class SeriesPoleModule:
    """a e = X(b) b e with X a matrix of b-series: x_coeffs[t] holds the b^t matrices."""

    x_coeffs: tuple  # of QMatrix, length order+1
    order: int

    @property
    def rank(self) -> int:
        return self.x_coeffs[0].shape[0]

    def x_entry(self, i: int, l: int) -> BSeries:
        return BSeries(self.order, {t: m.entry(i, l) for t, m in enumerate(self.x_coeffs)})

    def x_at_zero(self) -> QMatrix:
        return self.x_coeffs[0]

    # row-vector action: a (V e) = (V X(b) b + b^2 V') e
    def act_a(self, entries: tuple) -> tuple:
        k = self.rank
        out = []
        for l in range(k):
            s = BSeries.zero(self.order)
            for i in range(k):
                if not entries[i].is_zero:
                    s = s + (entries[i] * self.x_entry(i, l)).shifted(1)
            s = s + entries[l].derivative().lifted(self.order).shifted(2)
            out.append(s)
        return tuple(out)

    def act_b(self, entries: tuple) -> tuple:
        return tuple(s.shifted(1) for s in entries)

    def basis_b_vector(self, j: int) -> tuple:
        return tuple(BSeries.monomial(1, self.order) if i == j else BSeries.zero(self.order)
                     for i in range(self.rank))


def _evaluate_system_on_be(system: DifferentialSystem, module: SeriesPoleModule):
    """Rows w_i = (M(a) b e)_i under the module's current a-action."""
    k = system.rank
    rows = [tuple(BSeries.zero(module.order) for _ in range(k)) for _ in range(k)]
    # cur[j] = a^d (b e_j), advanced in d
    cur = [module.basis_b_vector(j) for j in range(k)]
    for d, mat in enumerate(system.coeffs):
        if d:
            cur = [module.act_a(c) for c in cur]
        for i in range(k):
            for j in range(k):
                c = mat.entry(i, j)
                if c:
                    rows[i] = tuple(s + t.scaled(c) for s, t in zip(rows[i], cur[j]))
    return rows


def from_differential_system(system: DifferentialSystem, order: int
                             ) -> tuple[SeriesPoleModule, tuple]:
    """Solve a e = M(a) b e for the unique structure matrix X(b) mod b^(order+1).

    Fixed point iteration from X = M(0): re-evaluate M(a) b e with the
    current action and divide by b.  Each pass is provably one b-adic
    order closer (a raises b-valuation by at least one), so exactly
    `order` iterations pin X through b^order.  Returns the module and the
    coefficient matrices of X.
    """
    k = system.rank
    work = order + 1  # dividing by b costs the carrier's top coefficient
    x = [system.residue] + [QMatrix.zeros(k) for _ in range(work)]
    module = SeriesPoleModule(tuple(x), work)
    for _ in range(order):
        rows = _evaluate_system_on_be(system, module)
        tables = [[[ZERO] * k for _ in range(k)] for _ in range(work + 1)]
        for i in range(k):
            for l in range(k):
                w = rows[i][l]
                if w.coefficient(0):
                    raise AssertionError("M(a)be lost its b factor; internal bug")
                shifted = w.divided_by_b()
                for t in range(work + 1):
                    tables[t][i][l] = shifted.coefficient(t)
        module = SeriesPoleModule(tuple(QMatrix(t) for t in tables), work)
    module = SeriesPoleModule(module.x_coeffs[:order + 1], order)
    if module.x_at_zero() != system.residue:
        raise AssertionError("X(0) != M(0); internal bug")
    return module, module.x_coeffs


def satisfies_system(module: SeriesPoleModule, system: DifferentialSystem) -> bool:
    """Check a e = M(a) b e mod b^(order+1) by substituting the action back in."""
    rows = _evaluate_system_on_be(system, module)
    for i in range(module.rank):
        lhs = module.act_a(tuple(
            BSeries.one(module.order) if j == i else BSeries.zero(module.order)
            for j in range(module.rank)))
        if any(l != r for l, r in zip(lhs, rows[i])):
            return False
    return True
