"""Exact kernel for the noncommutative algebra generated by a, b with ab - ba = b^2.

Truncated (order-N) exact arithmetic over the Gaussian rationals, normal
orderings and their conversion, unit inversion and division with
remainder, a faithful operator-representation oracle on power series,
finite-rank module structures (simple-pole modules, frescos, Bernstein
polynomials, differential-system conversion, multivalued expansions) and
a CLI exposing all of it.
"""

from .coefficients import Coefficient, GaussianRational
from .division import (DivisionResult, FactoredProduct, HomogeneousFactorization, divide,
                       divide_linear, factor_homogeneous, invert,
                       power_division_closed_form, remainder_polynomial)
from .elements import (LEFT, RIGHT, AlgebraElement, Ordering, add, anti_automorphism,
                       binomial_pow, coefficient_profile, gen_a, gen_b, mul, power,
                       reorder_coeff, scale, shear, to_left, to_right)
from .errors import (AbalgError, ExprError, NotHomogeneousError, NotMonicError,
                     OrderingMismatchError, OrderMismatchError, SchemaError,
                     WitnessNotFoundError, ZeroConstantTermError, ZeroElementError)
from .expansions import XiElement, xi_act_a, xi_act_b, xi_check_simple_pole
from .expr import format_element, parse, parse_element, parse_scalar
from .linalg import QMatrix, characteristic_polynomial, minimal_polynomial
from .modules import (DifferentialSystem, Fresco, ModuleElement, SeriesPoleModule,
                      SimplePoleModule, SpectrumCheck, act_on_basis, bernstein,
                      fresco_act, from_differential_system, is_geometric_spectrum,
                      satisfies_system, unit_fresco)
from .modules import act as module_act
from .oracle import (PolySeries, act, act_a, act_b, act_composed, injectivity_witness,
                     oracle_check_mul)
from .polynomials import Poly, gaussian_roots, interpolate, rational_roots
from .series import APolynomial, BSeries

__version__ = "0.1.0"
