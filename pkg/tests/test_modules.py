import random
from fractions import Fraction

import pytest

from abalg.checks import random_element, random_matrix
from abalg.coefficients import GaussianRational
from abalg.division import FactoredProduct
from abalg.elements import LEFT, RIGHT, AlgebraElement, gen_a, gen_b, mul, power, scale
from abalg.linalg import (QMatrix, evaluate_poly_at_matrix, matrix_power_sequence,
                          minimal_polynomial, solve_dependency)
from abalg.modules import (DifferentialSystem, Fresco, SimplePoleModule, act,
                           act_on_basis, bernstein, fresco_act, from_differential_system,
                           is_geometric_spectrum, satisfies_system, unit_fresco)
from abalg.polynomials import Poly
from abalg.series import APolynomial, BSeries


def rng():
    return random.Random(1234)


def _theta():
    return QMatrix([[Fraction(1, 2), 1], [0, 3]])


# -- action on the basis ------------------------------------------------------

def test_act_on_basis_examples():
    n = 6
    module = SimplePoleModule(_theta(), n)
    a, b = gen_a(n), gen_b(n)
    zs = act_on_basis(a.to_right(), module)
    assert zs[1] == _theta() and all(z.is_zero for i, z in enumerate(zs) if i != 1)
    zs = act_on_basis(power(a, 2).to_right(), module)
    assert zs[2] == (_theta() + QMatrix.identity(2)) @ _theta()
    for q in range(n + 1):
        zs = act_on_basis(power(b, q).to_right(), module)
        assert zs[q] == QMatrix.identity(2)
    # scalar multiples of b-powers act as scalars
    zs = act_on_basis(scale(5, power(b, 2)).to_right(), module)
    assert zs[2] == QMatrix.identity(2).scaled(5)


def test_act_examples():
    n = 6
    module = SimplePoleModule(_theta(), n)
    a, b = gen_a(n), gen_b(n)
    e0 = module.basis_vector(0)
    assert act(b.to_right(), e0, module).entries[0] == BSeries(n, {1: 1})
    # a (b e_i) = theta-row in degree b^2 plus b^2 e_i
    be0 = act(b.to_right(), e0, module)
    abe0 = act(a.to_right(), be0, module)
    assert abe0.entries[0] == BSeries(n, {2: _theta().entry(0, 0) + 1})
    assert abe0.entries[1] == BSeries(n, {2: _theta().entry(0, 1)})


def test_module_law_and_simple_pole():
    r = rng()
    n = 8
    for _ in range(12):
        k = r.randrange(1, 4)
        module = SimplePoleModule(random_matrix(r, k), n)
        v = module.element([BSeries(n, {r.randrange(0, n + 1): GaussianRational(
            Fraction(r.randrange(-3, 4), r.choice([1, 2])))}) for _ in range(k)])
        x = random_element(r, n, terms=3, ordering=RIGHT)
        y = random_element(r, n, terms=3, ordering=RIGHT)
        prod = mul(x.to_left(), y.to_left()).to_right()
        assert act(prod, v, module).entries == act(x, act(y, v, module), module).entries
        av = act(gen_a(n).to_right(), v, module)
        assert av.b_valuation is None or av.b_valuation >= 1


# -- Bernstein polynomials --------------------------------------------------------

def test_bernstein_examples():
    n = 4
    assert bernstein(SimplePoleModule(QMatrix.identity(2), n)) == Poly([1, 1])
    diag = SimplePoleModule(QMatrix([[Fraction(1, 2), 0], [0, 3]]), n)
    assert bernstein(diag) == Poly.from_roots([Fraction(-1, 2), -3])
    jordan = SimplePoleModule(QMatrix([[1, 1], [0, 1]]), n)
    assert bernstein(jordan) == Poly([1, 2, 1])


def test_bernstein_against_power_dependency():
    r = rng()
    for _ in range(15):
        k = r.randrange(1, 4)
        theta = random_matrix(r, k)
        p = bernstein(SimplePoleModule(theta, 4))
        assert p.is_monic and p.degree <= k
        assert evaluate_poly_at_matrix(p, -theta).is_zero
        powers = matrix_power_sequence(-theta, k)
        flat = [tuple(c for row in m.rows for c in row) for m in powers]
        d = 1
        while solve_dependency(flat[:d + 1]) is None:
            d += 1
        assert d == p.degree


def test_bernstein_diagonalizable_is_product_over_distinct_eigenvalues():
    theta = QMatrix([[2, 0, 0], [0, 2, 0], [0, 0, Fraction(1, 3)]])
    assert bernstein(SimplePoleModule(theta, 2)) == Poly.from_roots([-2, Fraction(-1, 3)])


# -- geometric spectra ---------------------------------------------------------------

def test_geometric_spectrum():
    n = 2
    good = SimplePoleModule(QMatrix([[Fraction(1, 2), 0], [0, 3]]), n)
    chk = is_geometric_spectrum(good)
    assert chk and chk.eigenvalues == (Fraction(1, 2), Fraction(3))
    bad = is_geometric_spectrum(SimplePoleModule(QMatrix([[-1]]), n))
    assert not bad and bad.eigenvalues == (Fraction(-1),)
    irr = is_geometric_spectrum(SimplePoleModule(QMatrix([[0, 2], [1, 0]]), n))
    assert not irr and irr.diagnostic is not None
    # repeated eigenvalues keep multiplicity
    rep = is_geometric_spectrum(SimplePoleModule(QMatrix([[2, 1], [0, 2]]), n))
    assert rep and rep.eigenvalues == (Fraction(2), Fraction(2))


# -- frescos --------------------------------------------------------------------------

def test_unit_fresco_relation():
    n = 8
    e1 = unit_fresco(n)
    one = e1.generator()
    assert fresco_act(gen_a(n), one, e1).to_element(LEFT) == gen_b(n)
    assert fresco_act(AlgebraElement.one(n), one, e1) == one


def test_fresco_ideal_annihilates_generator():
    r = rng()
    n = 8
    e1 = unit_fresco(n)
    pex = e1.product.expanded()
    for _ in range(10):
        x = random_element(r, n, terms=4)
        assert fresco_act(mul(x, pex), e1.generator(), e1).is_zero


def test_fresco_rank2_reduction():
    n = 6
    fresco = Fresco(FactoredProduct.from_lambdas([1, 2], n))
    a = gen_a(n)
    rep = fresco_act(a, APolynomial.from_element(a.to_right()), fresco)
    assert rep.to_element(LEFT) == scale(3, mul(a, gen_b(n))) - scale(3, power(gen_b(n), 2))
    assert rep.a_degree == 1


def test_fresco_action_is_associative():
    r = rng()
    n = 8
    for _ in range(10):
        k = r.randrange(1, 4)
        fresco = Fresco(FactoredProduct.from_lambdas(
            [Fraction(r.randrange(-3, 4)) for _ in range(k)], n))
        x = random_element(r, n, terms=3)
        y = random_element(r, n, terms=3)
        rep = APolynomial.from_element(
            random_element(r, n, terms=3, max_degree=k - 1, ordering=RIGHT))
        lhs = fresco_act(mul(x, y), rep, fresco)
        rhs = fresco_act(x, fresco_act(y, rep, fresco), fresco)
        assert lhs == rhs


def test_fresco_rejects_oversized_representatives():
    from abalg.errors import AbalgError
    fresco = unit_fresco(6)
    bad = APolynomial.from_element(gen_a(6).to_right())  # a-degree 1 in a rank-1 fresco
    with pytest.raises(AbalgError):
        fresco_act(gen_a(6), bad, fresco)


# -- differential systems ----------------------------------------------------------------

def test_scalar_system_closed_form():
    theta, c = Fraction(2), Fraction(3)
    system = DifferentialSystem((QMatrix([[theta]]), QMatrix([[c]])))
    module, coeffs = from_differential_system(system, 5)
    xs = module.x_entry(0, 0)
    expect = BSeries(5, {0: theta})
    for t in range(1, 6):
        expect = expect + BSeries(5, {t: (theta + 1) * c ** t})
    assert xs == expect
    assert satisfies_system(module, system)


def test_constant_system_is_fixed_point():
    theta = _theta()
    system = DifferentialSystem((theta,))
    module, coeffs = from_differential_system(system, 4)
    assert module.x_at_zero() == theta
    assert all(m.is_zero for m in coeffs[1:])
    assert satisfies_system(module, system)


def test_residue_always_survives():
    r = rng()
    for _ in range(10):
        k = r.randrange(1, 3)
        system = DifferentialSystem(tuple(
            random_matrix(r, k, rational_only=True) for _ in range(r.randrange(1, 4))))
        module, _ = from_differential_system(system, 6)
        assert module.x_at_zero() == system.residue
        assert satisfies_system(module, system)


def test_satisfies_system_is_a_real_check():
    theta = QMatrix([[Fraction(2)]])
    system = DifferentialSystem((theta, QMatrix([[Fraction(1)]])))
    module, _ = from_differential_system(system, 4)
    wrong = DifferentialSystem((theta, QMatrix([[Fraction(2)]])))
    assert not satisfies_system(module, wrong)
