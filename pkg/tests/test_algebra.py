from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ncpalgebra.algebra import (
    UNIT,
    AlgebraElement,
    Monomial,
    TensorElement,
    check_cointeraction,
    coproduct_Delta,
    coproduct_delta,
    counit_Delta,
    counit_delta,
    gradings,
    multiply,
    parse_element,
    parse_monomial,
    parse_tensor,
    reduced_coproduct_iterate,
    tensor_apply,
)
from ncpalgebra.errors import NotAugmentation, ParseError
from ncpalgebra.partition import J, contractible_equivalences, ideals, parse_partition, quotient, restrict_blocks, restrict_class

from conftest import monomials, partitions

P = parse_partition


def M(*texts):
    return Monomial(P(t) for t in texts)


def E(text):
    return parse_element(text)


def T(text):
    return parse_tensor(text)


def Delta_by_definition(pi):
    """Sum over upward-closed block sets: outside blocks on the left, the runs of the set on the right."""
    out = {}
    k = len(pi)
    for ideal in ideals(pi):
        rest = [i for i in range(k) if i not in ideal]
        left = Monomial([restrict_class(pi, rest)]) if rest else UNIT
        right = Monomial(restrict_blocks(pi, ideal))
        out[(left, right)] = out.get((left, right), 0) + 1
    return TensorElement(out)


def delta_by_definition(pi):
    out = {}
    for eq in contractible_equivalences(pi):
        left = Monomial([quotient(pi, eq)])
        right = Monomial(restrict_class(pi, c) for c in eq.classes)
        out[(left, right)] = out.get((left, right), 0) + 1
    return TensorElement(out)


def test_monomial_normal_form_and_text():
    m = M("1|2", "1", "1,2")
    assert str(m) == "(1).(1,2).(1|2)"
    assert parse_monomial(str(m)) == m
    assert str(UNIT) == "()" and parse_monomial("()") == UNIT
    assert M("1", "") == M("1")
    assert gradings(m) == (5, 4, 3, 1)


@pytest.mark.parametrize("text", ["(1", "(1)(2)", "1|2", "(1).", "(1,3|2,4)"])
def test_monomial_parse_errors(text):
    with pytest.raises(ParseError):
        parse_monomial(text)


def test_element_arithmetic_and_text():
    x = E("2*(1) + -1/2*(1|2)")
    assert str(x) == "2*(1) + -1/2*(1|2)"
    assert x - x == AlgebraElement() and str(AlgebraElement()) == "0"
    assert str(x * x) == "4*(1).(1) + -2*(1).(1|2) + 1/4*(1|2).(1|2)"
    assert 3 * AlgebraElement.of(1) == AlgebraElement({UNIT: 3})
    assert E("(1) + -(1)") == AlgebraElement()


def test_tensor_text_roundtrip():
    t = coproduct_Delta(J(3))
    assert parse_tensor(str(t)) == t
    assert parse_tensor(t.render(ascii=True)) == t
    assert " (x) " in t.render(ascii=True)


def test_Delta_examples():
    assert coproduct_Delta(J(2)) == T("1*(1|2) ⊗ () + 1*() ⊗ (1|2) + 2*(1) ⊗ (1)")
    assert coproduct_Delta(J(3)) == T(
        "1*(1|2|3) ⊗ () + 1*() ⊗ (1|2|3) + 1*(1) ⊗ (1).(1) + 2*(1) ⊗ (1|2) + 3*(1|2) ⊗ (1)"
    )
    assert coproduct_Delta(AlgebraElement.of(1)) == T("1*() ⊗ ()")
    # one nested block: the outer block is never on the right alone
    assert coproduct_Delta(P("1,3|2")) == T("1*(1,3|2) ⊗ () + 1*() ⊗ (1,3|2) + 1*(1,2) ⊗ (1)")


def test_delta_examples():
    assert coproduct_delta(J(2)) == T("1*(1|2) ⊗ (1).(1) + 1*(1,2) ⊗ (1|2)")
    assert coproduct_delta(P("1")) == T("1*(1) ⊗ (1)")
    middle = coproduct_delta(J(3))
    for q in ("1,2|3", "1|2,3", "1,3|2"):
        assert middle.coefficient((M(q), M("1", "1|2"))) == 1
    assert middle.coefficient((M("1,2,3"), M("1|2|3"))) == 1
    assert coproduct_delta(P("1,3|2")).coefficient((M("1,2,3"), M("1,3|2"))) == 1


@given(partitions(1, 6))
def test_Delta_matches_definition(pi):
    assert coproduct_Delta(pi) == Delta_by_definition(pi)


@given(partitions(1, 6))
def test_delta_matches_definition(pi):
    assert coproduct_delta(pi) == delta_by_definition(pi)


def test_counits():
    assert counit_Delta(E("1*() + 3*(1|2)")) == 1
    assert counit_delta(P("1,2")) == 1
    assert counit_delta(J(2)) == 0
    assert counit_delta(E("2*(1).(1,2) + 5*(1|2)")) == 2


@given(monomials(3, 4))
def test_coassociativity(m):
    for cop in (coproduct_Delta, coproduct_delta):
        t = cop(m)
        assert tensor_apply(t, 0, cop) == tensor_apply(t, 1, cop)


@given(monomials(3, 4))
def test_counit_laws(m):
    x = AlgebraElement.of(m)
    for cop, counit in ((coproduct_Delta, counit_Delta), (coproduct_delta, counit_delta)):
        left, right = {}, {}
        for (l, r), c in cop(x).terms.items():
            left[r] = left.get(r, 0) + c * counit(AlgebraElement.of(l))
            right[l] = right.get(l, 0) + c * counit(AlgebraElement.of(r))
        assert AlgebraElement(left) == x == AlgebraElement(right)


@given(monomials(2, 4), monomials(2, 4))
def test_multiplicativity(a, b):
    x, y = AlgebraElement.of(a), AlgebraElement.of(b)
    assert multiply(x, y) == AlgebraElement.of(a * b)
    for cop in (coproduct_Delta, coproduct_delta):
        assert cop(x * y) == cop(x) * cop(y)


@given(monomials(3, 5))
def test_grading(m):
    for (l, r), _ in coproduct_Delta(m).terms.items():
        assert l.blocks + r.blocks == m.blocks and l.legs + r.legs == m.legs
    for (l, r), _ in coproduct_delta(m).terms.items():
        assert l.degree + r.degree == m.degree


@given(partitions(1, 4))
def test_cointeraction(pi):
    assert check_cointeraction(pi)


def test_cointeraction_on_unit_and_product():
    assert check_cointeraction(AlgebraElement.of(1))
    assert check_cointeraction(M("1|2", "1,3|2"))


def test_reduced_coproduct():
    assert reduced_coproduct_iterate(J(2), 1) == T("2*(1) ⊗ (1)")
    assert reduced_coproduct_iterate(P("1"), 1) == TensorElement()
    with pytest.raises(NotAugmentation):
        reduced_coproduct_iterate(AlgebraElement.of(1), 1)


@given(partitions(1, 5))
def test_reduced_coproduct_vanishes_past_block_count(pi):
    assert reduced_coproduct_iterate(pi, len(pi)) == TensorElement()
    top = reduced_coproduct_iterate(pi, len(pi) - 1)
    for key in top.terms:
        assert all(m.blocks == 1 for m in key)


@given(st.lists(st.tuples(monomials(2, 3), st.fractions(max_denominator=7)), max_size=4))
def test_element_text_roundtrip(terms):
    x = AlgebraElement({m: c for m, c in terms})
    assert parse_element(str(x)) == x
