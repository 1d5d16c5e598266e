from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ncpalgebra import guards
from ncpalgebra.algebra import AlgebraElement, Monomial, coproduct_Delta, coproduct_delta, counit_delta, multiply, parse_element
from ncpalgebra.characters import eps_delta, lambda_all_one, lambda_ncp, lambda_strict, mu_ncp_closed
from ncpalgebra.errors import DegreeOverflow
from ncpalgebra.invariants import (
    ALGORITHMS,
    LAMBDA_STRICT,
    LAMBDA_WEAK,
    PHI0,
    act_character,
    antipode,
    coefficient_checks,
    count_order_maps,
    count_valid_colorations,
    lambda_invariant,
    phi0,
    phi_invariant,
    phi_ncp,
)
from ncpalgebra.partition import J, nesting_leq, parse_partition
from ncpalgebra.polynomial import RationalPolynomial, parse_polynomial

from conftest import monomials, partitions

P = parse_partition
X = RationalPolynomial.X()


def colorations_by_definition(pi, N: int) -> int:
    k = len(pi)
    blocks = pi.blocks
    count = 0
    for f in itertools.product(range(1, N + 1), repeat=k):
        ok = all(f[i] < f[j] for i in range(k) for j in range(k) if i != j and nesting_leq(pi, i, j))
        if ok:
            for i, j in itertools.permutations(range(k), 2):
                if f[i] == f[j] and blocks[i][-1] < blocks[j][0]:
                    lo, hi = blocks[i][-1], blocks[j][0]
                    if not any(f[m] < f[i] for m in range(k) if any(lo < x < hi for x in blocks[m])):
                        ok = False
                        break
        count += ok
    return count


def order_maps_by_definition(pi, n: int, strict: bool) -> int:
    k = len(pi)
    rel = [(i, j) for i in range(k) for j in range(k) if i != j and nesting_leq(pi, i, j)]
    return sum(
        all((f[i] < f[j]) if strict else (f[i] <= f[j]) for i, j in rel)
        for f in itertools.product(range(1, n + 1), repeat=k)
    )


def test_coloration_examples():
    assert count_valid_colorations(P("1,4|2|3"), 3) == 2
    assert count_valid_colorations(J(3), 2) == 1
    assert count_valid_colorations(J(3), 0) == 0


@given(partitions(1, 5), st.integers(0, 4))
def test_colorations_match_definition(pi, N):
    assert count_valid_colorations(pi, N) == colorations_by_definition(pi, N)


@given(partitions(1, 6), st.integers(0, 5))
def test_phi_counts_colorations(pi, N):
    assert phi_ncp(pi)(N) == count_valid_colorations(pi, N)


def test_coloration_guard(monkeypatch):
    monkeypatch.setattr(guards.GUARDS, "coloration_maps", 10)
    with pytest.raises(DegreeOverflow):
        count_valid_colorations(J(3), 4)


def test_phi_examples():
    assert phi_ncp(J(3)) == X * (X - 1) * (X - Fraction(3, 2))
    assert phi_ncp(P("1,3|2")) == X * (X - 1) * Fraction(1, 2)
    assert phi_ncp(J(4)) == X * (X - 1) * (X - 2) * (X - Fraction(4, 3))
    assert phi_ncp(P("1,4|2|3")) == X * (X - 1) * (X - 2) * Fraction(1, 3)
    assert phi_ncp(AlgebraElement.of(1)) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_three_algorithms_agree(n):
    from ncpalgebra.partition import enumerate_ncp

    for pi in enumerate_ncp(n):
        values = {a: phi_invariant(a)(pi) for a in ALGORITHMS}
        assert values["coproduct"] == values["recurrence"] == values["interpolation"], str(pi)


@given(monomials(3, 3))
def test_three_algorithms_agree_on_monomials(m):
    values = [phi_ncp(m, a) for a in ALGORITHMS]
    assert values[0] == values[1] == values[2]


@given(partitions(1, 6))
def test_phi_spot_values(pi):
    p = phi_ncp(pi)
    assert p(0) == 0
    assert p(1) == counit_delta(pi)
    assert p(-1) == mu_ncp_closed(pi)
    assert p.degree == len(pi)


@given(monomials(2, 3), monomials(2, 3))
def test_phi_is_multiplicative(a, b):
    x, y = AlgebraElement.of(a), AlgebraElement.of(b)
    assert phi_ncp(multiply(x, y)) == phi_ncp(x) * phi_ncp(y)


@given(partitions(1, 5), st.integers(1, 4), st.integers(1, 4))
def test_phi_intertwines_both_coproducts(pi, m, n):
    p = phi_ncp(pi)
    add = sum((c * phi_ncp(l)(m) * phi_ncp(r)(n) for (l, r), c in coproduct_Delta(pi).terms.items()), Fraction(0))
    mul = sum((c * phi_ncp(l)(m) * phi_ncp(r)(n) for (l, r), c in coproduct_delta(pi).terms.items()), Fraction(0))
    assert p(m + n) == add
    assert p(m * n) == mul


@given(partitions(1, 6))
def test_coefficient_formulas(pi):
    report = coefficient_checks(pi)
    assert report["ok"], report


def test_lambda_examples():
    assert LAMBDA_WEAK(P("1,3|2")) == X * (X + 1) * Fraction(1, 2)
    assert LAMBDA_STRICT(P("1,3|2")) == X * (X - 1) * Fraction(1, 2)
    assert LAMBDA_WEAK(J(3)) == X ** 3
    assert LAMBDA_WEAK(P("1,2")) == X
    assert lambda_invariant(Monomial([P("1,3|2"), P("1")])) == X * X * (X + 1) * Fraction(1, 2)


@given(partitions(1, 5), st.integers(0, 4))
def test_lambda_counts_order_maps(pi, n):
    for strict, inv in ((False, LAMBDA_WEAK), (True, LAMBDA_STRICT)):
        assert inv(pi)(n) == count_order_maps(pi, n, strict) == order_maps_by_definition(pi, n, strict)


@given(partitions(1, 6))
def test_duality(pi):
    assert LAMBDA_WEAK(pi) == LAMBDA_STRICT(pi).substitute_negated() * ((-1) ** len(pi))


@given(partitions(1, 6), st.integers(1, 5))
def test_strict_below_weak(pi, n):
    assert LAMBDA_STRICT(pi)(n) <= LAMBDA_WEAK(pi)(n)


def test_phi0_examples():
    assert phi0(P("1,4|2|3")) == X ** 3 * Fraction(1, 3)
    assert phi0(P("1")) == X
    assert phi0(P("1,3|2")) == X ** 2 * Fraction(1, 2)


@given(partitions(1, 5))
def test_actions(pi):
    phi = phi_invariant()
    assert act_character(phi, lambda_all_one())(pi) == LAMBDA_WEAK(pi)
    assert act_character(phi, lambda_strict())(pi) == LAMBDA_STRICT(pi)
    assert act_character(PHI0, lambda_ncp())(pi) == phi(pi)
    assert act_character(phi, eps_delta())(pi) == phi(pi)


@pytest.mark.parametrize("n, text", [
    (2, "-1*(1|2) + 2*(1).(1)"),
    (3, "-1*(1|2|3) + 5*(1).(1|2) + -5*(1).(1).(1)"),
    (4, "-1*(1|2|3|4) + 3*(1|2).(1|2) + -21*(1).(1).(1|2) + 6*(1).(1|2|3) + 14*(1).(1).(1).(1)"),
])
def test_antipode_examples(n, text):
    assert antipode(J(n)) == parse_element(text)


@given(partitions(1, 5))
def test_antipode_laws(pi):
    out = AlgebraElement()
    for (l, r), c in coproduct_Delta(pi).terms.items():
        out = out + antipode(AlgebraElement({l: 1})) * AlgebraElement({r: 1}) * c
    assert out == AlgebraElement()
    assert antipode(antipode(pi)) == AlgebraElement.of(pi)


def test_polynomial_text_roundtrip_of_invariants():
    for pi in (J(3), P("1,3|2|4"), P("1,6|2,3|4|5")):
        p = phi_ncp(pi)
        assert parse_polynomial(str(p)) == p
        assert parse_polynomial(str(p.to_hilbert())) == p
