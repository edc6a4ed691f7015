import json
import random
from fractions import Fraction

import pytest

from abalg.checks import random_element
from abalg.cli import main
from abalg.coefficients import GaussianRational
from abalg.elements import LEFT, RIGHT, AlgebraElement, binomial_pow, gen_a, gen_b, mul
from abalg.errors import ExprError
from abalg.expr import format_element, parse, parse_element, parse_scalar
from abalg.jsonio import (element_from_json, element_to_json, matrix_to_json,
                          polyseries_from_json, polyseries_to_json, system_to_json,
                          xi_from_json, xi_to_json)
from abalg.linalg import QMatrix
from abalg.modules import DifferentialSystem
from abalg.oracle import PolySeries
from abalg.expansions import XiElement


# -- parsing ------------------------------------------------------------------

def test_defining_relation_elaborates_to_zero():
    assert parse_element("a*b - b*a - b^2", 5).is_zero


def test_parenthesized_power():
    x = parse_element("(a - 1/2*b)^3", 6)
    assert x.to_right() == binomial_pow(Fraction(-1, 2), 3, 6)


def test_parse_error_offset_and_expectations():
    with pytest.raises(ExprError) as err:
        parse("a**b")
    assert err.value.offset == 2
    assert "number" in " ".join(err.value.expected)


@pytest.mark.parametrize("bad, offset", [
    ("", 0),
    ("a +", 3),
    ("(a", 2),
    ("a b", 2),
    ("2 ^ b", 4),
    ("a $ b", 2),
])
def test_parse_errors(bad, offset):
    with pytest.raises(ExprError) as err:
        parse(bad)
    assert err.value.offset == offset


def test_no_implicit_multiplication():
    with pytest.raises(ExprError):
        parse("2a")
    with pytest.raises(ExprError):
        parse("a(b)")


def test_unary_minus_and_scalars():
    assert parse_element("-a + b", 4) == -gen_a(4) + gen_b(4)
    assert parse_scalar("-1/2") == GaussianRational(Fraction(-1, 2))
    assert parse_scalar("2*i - 1") == GaussianRational(-1, 2)
    with pytest.raises(ExprError):
        parse_scalar("a + 1")


def test_imaginary_arithmetic():
    x = parse_element("i^2 + 1", 3)
    assert x.is_zero
    assert parse_element("i*a", 3) == AlgebraElement(3, LEFT, {(1, 0): GaussianRational(0, 1)})


# -- printing -----------------------------------------------------------------------

def test_format_uses_degree_then_bpower_order():
    x = AlgebraElement(4, LEFT, {(0, 0): 1, (1, 1): 1, (2, 2): 1, (1, 3): -1})
    assert format_element(x) == "1 + a*b + a^2*b^2 - a*b^3"
    y = AlgebraElement(4, RIGHT, {(2, 1): 1, (1, 2): 2, (0, 3): 2})
    assert format_element(y) == "b*a^2 + 2*b^2*a + 2*b^3"
    assert format_element(AlgebraElement.zero(3)) == "0"


def test_format_gaussian_coefficients():
    x = AlgebraElement(3, LEFT, {
        (1, 0): GaussianRational(0, 1),
        (0, 1): GaussianRational(-1, 2),
        (0, 2): GaussianRational(0, Fraction(-1, 2)),
    })
    text = format_element(x)
    assert text == "i*a + (-1 + 2*i)*b - 1/2*i*b^2"
    assert parse_element(text, 3) == x


def test_print_parse_round_trip_random():
    rng = random.Random(2024)
    for _ in range(200):
        order = rng.randrange(0, 9)
        x = random_element(rng, order, terms=rng.randrange(0, 7),
                           ordering=rng.choice([LEFT, RIGHT]))
        assert parse_element(format_element(x), order, x.ordering) == x


# -- JSON schemas -----------------------------------------------------------------------

def test_element_json_round_trip():
    rng = random.Random(31)
    for _ in range(50):
        x = random_element(rng, 7, terms=5, ordering=rng.choice([LEFT, RIGHT]))
        doc = json.loads(json.dumps(element_to_json(x)))
        assert element_from_json(doc) == x


def test_polyseries_json_round_trip():
    f = PolySeries(9, {0: 1, 4: GaussianRational(Fraction(2, 3), -1)})
    assert polyseries_from_json(json.loads(json.dumps(polyseries_to_json(f)))) == f


def test_xi_json_round_trip():
    xi = XiElement(2, 1, 3, {(Fraction(1, 2), 1, 1):
                             (GaussianRational(1), GaussianRational(0, -2))})
    assert xi_from_json(json.loads(json.dumps(xi_to_json(xi)))) == xi


def test_matrix_and_system_json_shapes():
    theta = QMatrix([[Fraction(1, 2), 0], [1, 3]])
    doc = matrix_to_json(theta)
    assert doc["k"] == 2 and doc["entries"][0][0] == {"re": "1/2", "im": "0/1"}
    sysdoc = system_to_json(DifferentialSystem((theta,)))
    assert sysdoc["k"] == 2 and len(sysdoc["coeffs"]) == 1


# -- the CLI ----------------------------------------------------------------------------

def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_normalize_documented_output(capsys):
    code, out, _ = run_cli(capsys, "normalize", "--order", "4", "--form", "right",
                           "--pretty", "a^2*b")
    assert code == 0 and out == "b*a^2 + 2*b^2*a + 2*b^3\n"


def test_cli_inv_documented_output(capsys):
    code, out, _ = run_cli(capsys, "inv", "--order", "4", "--pretty", "1 - a*b")
    assert code == 0 and out == "1 + a*b + a^2*b^2 - a*b^3\n"


def test_cli_div_linear_documented_output(capsys):
    code, out, _ = run_cli(capsys, "div-linear", "--lambda", "1", "--order", "6",
                           "--pretty", "a^2")
    assert code == 0 and out == "Q = a + b\nR = 2*b^2\n"


def test_cli_json_output_is_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "normalize", "--order", "5", "i*a*b - 2/3*b^2")
    code2, out2, _ = run_cli(capsys, "normalize", "--order", "5", "i*a*b - 2/3*b^2")
    assert code1 == code2 == 0 and out1 == out2
    doc = json.loads(out1)
    assert element_from_json(doc) == parse_element("i*a*b - 2/3*b^2", 5)


def test_cli_mul_tau_antif(capsys):
    code, out, _ = run_cli(capsys, "mul", "--order", "4", "--pretty", "b", "a")
    assert code == 0 and out == "a*b - b^2\n"
    code, out, _ = run_cli(capsys, "tau", "--x", "1", "--order", "4", "--form", "right",
                           "--pretty", "a^2")
    assert code == 0 and out == "a^2 + 2*b*a + 2*b^2\n"
    code, out, _ = run_cli(capsys, "anti-f", "--order", "4", "--pretty", "a*b")
    assert code == 0 and out == "-a*b + b^2\n"


def test_cli_act_and_factor(capsys, tmp_path):
    poly = tmp_path / "f.json"
    poly.write_text(json.dumps(polyseries_to_json(PolySeries.monomial(0, 6))))
    code, out, _ = run_cli(capsys, "act", "--input", str(poly), "--order", "2",
                           "--degree", "6", "a - 3*b")
    assert code == 0
    doc = json.loads(out)
    assert doc["terms"] == [{"m": 1, "re": "-2/1", "im": "0/1"}]
    code, out, _ = run_cli(capsys, "factor", "--order", "6", "a^2 - 3*a*b + 3*b^2")
    doc = json.loads(out)
    assert code == 0 and doc["complete"] is True
    assert [lam["re"] for lam in doc["lambdas"]] == ["1/1", "2/1"]


def test_cli_exit_codes(capsys, tmp_path):
    code, _, err = run_cli(capsys, "normalize", "--order", "4", "a**b")
    assert code == 2 and "offset 2" in err
    code, _, err = run_cli(capsys, "inv", "--order", "4", "b")
    assert code == 3 and "unit" in err
    # malformed input documents are usage errors
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, "act", "--input", str(bad), "a")
    assert code == 2
    missing = tmp_path / "missing.json"
    code, _, err = run_cli(capsys, "bernstein", "--matrix", str(missing))
    assert code == 2
    # bad usage (unknown flag) is 2 as well
    code, _, _ = run_cli(capsys, "normalize", "--nope", "a")
    assert code == 2


def test_cli_bernstein_geometric_ode2ab(capsys, tmp_path):
    theta = tmp_path / "theta.json"
    theta.write_text(json.dumps(matrix_to_json(QMatrix([[Fraction(1, 2), 0], [0, 3]]))))
    code, out, _ = run_cli(capsys, "bernstein", "--matrix", str(theta), "--pretty")
    assert code == 0 and out == "x^2 + 7/2*x + 3/2\n"
    code, out, _ = run_cli(capsys, "geometric", "--matrix", str(theta))
    assert code == 0 and json.loads(out)["geometric"] is True

    system = tmp_path / "sys.json"
    system.write_text(json.dumps(system_to_json(
        DifferentialSystem((QMatrix([[2]]), QMatrix([[3]]))))))
    code, out, _ = run_cli(capsys, "ode2ab", "--system", str(system), "--order", "3")
    doc = json.loads(out)
    values = [m["entries"][0][0]["re"] for m in doc["coeffs"]]
    assert code == 0 and values == ["2/1", "9/1", "27/1", "81/1"]


def test_cli_xi_act(capsys, tmp_path):
    xi = tmp_path / "xi.json"
    xi.write_text(json.dumps(xi_to_json(
        XiElement.symbol(Fraction(1, 2), 0, 0, m_bound=2))))
    code, out, _ = run_cli(capsys, "xi-act", "--input", str(xi), "--op", "b")
    doc = json.loads(out)
    assert code == 0
    assert doc["terms"] == [{"alpha": "1/2", "m": 1, "j": 0,
                             "c": [{"re": "2/3", "im": "0/1"}]}]
