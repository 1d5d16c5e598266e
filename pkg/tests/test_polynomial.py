from __future__ import annotations

import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from ncpalgebra.errors import ParseError
from ncpalgebra.polynomial import (
    HILBERT,
    MONOMIAL,
    RationalPolynomial,
    format_polynomial,
    from_forward_differences,
    hilbert_in_monomial,
    parse_polynomial,
    power_in_hilbert,
)

coeff_lists = st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=9), max_size=6)


def H(k: int, x) -> Fraction:
    return Fraction(math.prod(x - j for j in range(k)), math.factorial(k))


def test_format_examples():
    p = RationalPolynomial([0, Fraction(3, 2), Fraction(-5, 2), 1])
    assert str(p) == "3/2*X - 5/2*X^2 + X^3"
    assert str(RationalPolynomial()) == "0"
    assert str(RationalPolynomial([-1, -1])) == "-1 - X"
    assert str(RationalPolynomial([0, 1, 2], HILBERT)) == "H_1 + 2*H_2"


@pytest.mark.parametrize("text", ["", "X^", "2**X", "X + H_2", "3/2*Y", "H_"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_polynomial(text)


@pytest.mark.parametrize("k", range(0, 8))
def test_hilbert_basis_matches_sympy(k):
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.expand_func(sympy.binomial(x, k)), x)
    expected = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    assert list(hilbert_in_monomial(k)) == expected


@pytest.mark.parametrize("n", range(0, 8))
def test_powers_in_hilbert_basis(n):
    for x in range(-3, 6):
        assert sum(c * H(k, x) for k, c in enumerate(power_in_hilbert(n))) == Fraction(x) ** n


@given(coeff_lists)
def test_text_roundtrip(coeffs):
    for basis in (MONOMIAL, HILBERT):
        p = RationalPolynomial(coeffs, basis)
        q = parse_polynomial(format_polynomial(p))
        assert q == p and (not p.coeffs or q.basis == basis or p.degree == 0)


@given(coeff_lists)
def test_basis_change_roundtrip(coeffs):
    p = RationalPolynomial(coeffs)
    h = p.to_hilbert()
    assert h.basis == HILBERT and h.to_monomial().coeffs == p.coeffs
    for x in range(-3, 4):
        assert h(x) == p(x) == sum(c * H(k, x) for k, c in enumerate(h.coeffs))


@given(coeff_lists, coeff_lists, st.integers(-4, 4))
def test_ring_operations_evaluate_pointwise(a, b, x):
    p, q = RationalPolynomial(a), RationalPolynomial(b, HILBERT)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p ** 2)(x) == p(x) ** 2
    assert p.substitute_negated()(x) == p(-x)


@given(st.lists(st.fractions(max_denominator=5), min_size=1, max_size=7))
def test_forward_differences_interpolate(values):
    p = from_forward_differences(values)
    assert p.degree < len(values)
    assert [p(j) for j in range(len(values))] == [Fraction(v) for v in values]


def test_equality_across_bases_and_scalars():
    x = RationalPolynomial.X()
    assert x == RationalPolynomial([0, 1], HILBERT)
    assert RationalPolynomial.constant(3) == 3
    assert hash(x) == hash(RationalPolynomial([0, 1], HILBERT))
    with pytest.raises(AttributeError):
        x.basis = HILBERT
