"""Exact integer polynomial arithmetic."""

import random
from fractions import Fraction

import pytest

from aurifeuille.errors import InexactDivision
from aurifeuille.poly import IntPolynomial, symmetry_class

X = IntPolynomial([0, 1])


def rand_poly(rng, max_degree=64, bits=128):
    degree = rng.randrange(max_degree + 1)
    coeffs = [rng.randrange(-(1 << bits), 1 << bits) for _ in range(degree + 1)]
    return IntPolynomial(coeffs)


def test_normalization_strips_trailing_zeros():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPolynomial([0, 0, 0]).coeffs == ()


def test_zero_polynomial_properties():
    z = IntPolynomial()
    assert z.degree == -1
    assert z.leading == 0
    assert not z
    assert not z.is_monic()
    assert z.to_text() == "0"


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError):
        IntPolynomial([1, 2.5])
    with pytest.raises(TypeError):
        IntPolynomial([Fraction(1, 2)])
    with pytest.raises(TypeError):
        IntPolynomial(["3"])


def test_from_descending_and_monomial():
    p = IntPolynomial.from_descending([2, 1, -1, -2])  # 2x^3 + x^2 - x - 2
    assert p.coeffs == (-2, -1, 1, 2)
    assert IntPolynomial.monomial(3) == IntPolynomial([0, 0, 0, 1])
    assert IntPolynomial.monomial(0, 7) == IntPolynomial([7])
    with pytest.raises(ValueError):
        IntPolynomial.monomial(-1)


def test_equality_and_hash():
    a = IntPolynomial([1, 2, 3])
    b = IntPolynomial([1, 2, 3, 0])
    assert a == b and hash(a) == hash(b)
    assert a != IntPolynomial([1, 2])
    assert (a == 6) is False  # no cross-type equality
    assert len({a, b}) == 1


def test_coefficient_accessor():
    p = IntPolynomial([5, 0, -3])
    assert p.coefficient(0) == 5
    assert p.coefficient(1) == 0
    assert p.coefficient(2) == -3
    assert p.coefficient(99) == 0
    with pytest.raises(IndexError):
        p.coefficient(-1)


def test_arithmetic_small_cases():
    p = IntPolynomial([1, 1])  # x + 1
    q = IntPolynomial([-1, 1])  # x - 1
    assert p + q == IntPolynomial([0, 2])
    assert p - q == IntPolynomial([2])
    assert p * q == IntPolynomial([-1, 0, 1])
    assert -p == IntPolynomial([-1, -1])
    assert 3 * p == p * 3 == IntPolynomial([3, 3])
    assert p + 1 == 1 + p == IntPolynomial([2, 1])
    assert 1 - p == IntPolynomial([0, -1])


def test_cancellation_renormalizes():
    p = IntPolynomial([0, 0, 1])
    assert (p - p).degree == -1
    assert (p + (-p)) == IntPolynomial()


def test_exact_div_small():
    num = IntPolynomial([-1, 0, 0, 0, 1])  # x^4 - 1
    den = IntPolynomial([-1, 1])  # x - 1
    assert num.exact_div(den) == IntPolynomial([1, 1, 1, 1])
    assert num // den == IntPolynomial([1, 1, 1, 1])


def test_exact_div_errors():
    with pytest.raises(ZeroDivisionError):
        IntPolynomial([1]).exact_div(IntPolynomial())
    with pytest.raises(InexactDivision):
        IntPolynomial([1, 1]).exact_div(IntPolynomial([0, 0, 1]))  # degree
    with pytest.raises(InexactDivision):
        IntPolynomial([1, 0, 1]).exact_div(IntPolynomial([1, 1]))  # remainder
    with pytest.raises(InexactDivision):
        IntPolynomial([1, 3]).exact_div(IntPolynomial([1, 2]))  # fractional step
    with pytest.raises(TypeError):
        IntPolynomial([1, 1]).exact_div(2)


def test_exact_div_zero_dividend():
    assert IntPolynomial().exact_div(IntPolynomial([1, 1])) == IntPolynomial()


def test_mul_then_div_roundtrip():
    rng = random.Random(20260823)
    for _ in range(60):
        p = rand_poly(rng)
        q = rand_poly(rng)
        if not q:
            continue
        assert (p * q).exact_div(q) == p


def test_ring_homomorphism_under_evaluation():
    rng = random.Random(1729)
    for _ in range(40):
        p = rand_poly(rng, max_degree=16, bits=32)
        q = rand_poly(rng, max_degree=16, bits=32)
        for x in (0, 1, -1, 3, rng.randrange(-50, 50), Fraction(2, 7)):
            assert (p + q)(x) == p(x) + q(x)
            assert (p * q)(x) == p(x) * q(x)


def test_evaluate_types():
    p = IntPolynomial([1, 2, 1])  # (x+1)^2
    assert p(10) == 121
    assert isinstance(p(10), int)
    assert p(Fraction(1, 2)) == Fraction(9, 4)
    assert p(0) == 1
    assert IntPolynomial()(5) == 0
    assert abs(p(1j) - (1j + 1) ** 2) < 1e-12


def test_compose_power():
    p = IntPolynomial([1, 2, 3])
    assert p.compose_power(1) is p
    assert p.compose_power(2) == IntPolynomial([1, 0, 2, 0, 3])
    assert p.compose_power(3)(2) == p(8)
    with pytest.raises(ValueError):
        p.compose_power(0)


def test_negate_arg():
    p = IntPolynomial([1, 2, 3, 4])
    assert p.negate_arg() == IntPolynomial([1, -2, 3, -4])
    assert p.negate_arg().negate_arg() == p
    for x in (2, -3, Fraction(1, 3)):
        assert p.negate_arg()(x) == p(-x)


def test_to_text():
    assert IntPolynomial.from_descending([2, 1, -1, -2]).to_text() == (
        "2*x^3 + x^2 - x - 2"
    )
    assert IntPolynomial([1, 8, 13, 8, 1]).to_text() == (
        "x^4 + 8*x^3 + 13*x^2 + 8*x + 1"
    )
    assert IntPolynomial([0, -1]).to_text() == "-x"
    assert IntPolynomial([-7]).to_text() == "-7"
    assert IntPolynomial([0, 0, 5]).to_text() == "5*x^2"
    assert str(IntPolynomial([1, 0, -1])) == "-x^2 + 1"


def test_json_roundtrip():
    rng = random.Random(7)
    for _ in range(20):
        p = rand_poly(rng, max_degree=10, bits=200)
        blob = p.to_json_dict()
        assert blob["order"] == "ascending"
        assert all(isinstance(c, str) for c in blob["coeffs"])
        assert IntPolynomial.from_json_dict(blob) == p
    with pytest.raises(ValueError):
        IntPolynomial.from_json_dict({"order": "descending", "coeffs": []})


def test_symmetry_class():
    assert symmetry_class(IntPolynomial([1, 3, 1])) == "palindromic"
    assert symmetry_class(IntPolynomial([1, 0, -1])) == "antipalindromic"
    assert symmetry_class(IntPolynomial([1, 2, 3])) == "neither"
    assert symmetry_class(IntPolynomial()) == "palindromic"
    assert symmetry_class(IntPolynomial([4])) == "palindromic"
