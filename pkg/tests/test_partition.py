from __future__ import annotations

import itertools
import math
import pickle

import pytest
from hypothesis import given

from ncpalgebra import guards
from ncpalgebra.errors import Crossing, DegreeOverflow, NotAPartition, NotContractible, ParseError
from ncpalgebra.partition import (
    EMPTY,
    BlockEquivalence,
    J,
    NoncrossingPartition,
    adjacency_classes,
    base,
    catalan,
    contractible_equivalences,
    enumerate_ncp,
    ideals,
    is_contractible,
    linear_extension_count,
    linear_extension_count_bruteforce,
    nesting_leq,
    one_block,
    parse_partition,
    partition_profile,
    quotient,
    restrict_blocks,
    restrict_class,
    set_partitions,
)

from conftest import partitions


def crosses(blocks) -> bool:
    """Definition: a < b < c < d with a, c in one block and b, d in another."""
    for x, y in itertools.permutations(blocks, 2):
        for a, c in itertools.combinations(x, 2):
            if any(a < b < c for b in y) and any(d > c for d in y):
                return True
    return False


def all_set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in all_set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def test_parse_and_render():
    pi = parse_partition("1,4|2|3")
    assert pi.blocks == ((1, 4), (2,), (3,))
    assert str(pi) == "1,4|2|3"
    assert parse_partition(" 2 | 1,3 ") == parse_partition("1,3|2")
    assert parse_partition("") == EMPTY and len(EMPTY) == 0


@pytest.mark.parametrize("text, error", [
    ("1,3|2,4", Crossing),
    ("1|1", NotAPartition),
    ("1|3", NotAPartition),
    ("1,,2", ParseError),
    ("a|b", ParseError),
    ("2,1", ParseError),
    ("1||2", ParseError),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_partition(text)


def test_parse_errors_share_exit_code():
    for error in (ParseError, NotAPartition, Crossing):
        assert error.exit_code == 2


def test_named_partitions():
    assert str(J(3)) == "1|2|3"
    assert str(one_block(3)) == "1,2,3"
    assert J(0) == EMPTY


def test_immutable_and_picklable():
    pi = parse_partition("1,3|2")
    with pytest.raises(AttributeError):
        pi.n = 4
    assert pickle.loads(pickle.dumps(pi)) == pi


@pytest.mark.parametrize("n", range(0, 9))
def test_enumeration_matches_definition(n):
    brute = set()
    for sp in all_set_partitions(range(1, n + 1)):
        if not crosses(sp):
            brute.add(NoncrossingPartition(sp))
    got = enumerate_ncp(n)
    assert len(got) == len(set(got)) == catalan(n)
    assert set(got) == brute


def test_enumeration_block_filter():
    # Narayana numbers
    for n in range(1, 8):
        for k in range(1, n + 1):
            narayana = math.comb(n, k) * math.comb(n, k - 1) // n
            assert len(enumerate_ncp(n, k)) == narayana


def test_enumeration_guard(monkeypatch):
    monkeypatch.setattr(guards.GUARDS, "enumerate_legs", 3)
    with pytest.raises(DegreeOverflow) as info:
        enumerate_ncp(4)
    assert info.value.exit_code == 3


@given(partitions(1, 7))
def test_base_blocks_are_minimal(pi):
    k = len(pi)
    minimal = tuple(j for j in range(k) if not any(i != j and nesting_leq(pi, i, j) for i in range(k)))
    assert base(pi) == minimal
    assert pi.is_base() == (len(minimal) == k)


@given(partitions(1, 7))
def test_ideals_match_bruteforce(pi):
    k = len(pi)
    brute = []
    for r in range(k + 1):
        for subset in itertools.combinations(range(k), r):
            s = set(subset)
            if all(j in s for i in s for j in range(k) if nesting_leq(pi, i, j)):
                brute.append(frozenset(s))
    assert sorted(ideals(pi), key=sorted) == sorted(brute, key=sorted)


@given(partitions(1, 7))
def test_ideals_split_into_runs(pi):
    for ideal in ideals(pi):
        factors = restrict_blocks(pi, ideal)
        assert sum(f.n for f in factors) == sum(len(pi.blocks[i]) for i in ideal)
        assert sum(len(f) for f in factors) == len(ideal)


def test_restrictions():
    pi = parse_partition("1,6|2,3|4|5")
    assert str(restrict_class(pi, [0, 2])) == "1,3|2"
    assert [str(f) for f in restrict_blocks(pi, [1, 2, 3])] == ["1,2|3|4"]
    assert [str(f) for f in restrict_blocks(parse_partition("1|2|3"), [0, 2])] == ["1", "1"]
    with pytest.raises(ValueError):
        restrict_blocks(pi, [0])


@given(partitions(1, 6))
def test_contractible_equivalences_match_bruteforce(pi):
    k = len(pi)
    brute = set()
    for sp in all_set_partitions(range(k)):
        merged = [sorted(x for i in cls for x in pi.blocks[i]) for cls in sp]
        if not crosses(merged):
            brute.add(tuple(sorted(tuple(sorted(c)) for c in sp)))
    got = {eq.classes for eq in contractible_equivalences(pi)}
    assert got == brute


def test_quotient_and_noncontractible():
    pi = parse_partition("1|2|3|4")
    q = quotient(pi, BlockEquivalence(((0, 2), (1,), (3,))))
    assert str(q) == "1,3|2|4"
    with pytest.raises(NotContractible):
        quotient(pi, BlockEquivalence(((0, 2), (1, 3))))
    assert not is_contractible(pi, BlockEquivalence(((0, 2), (1, 3))))


def test_set_partitions_are_bell_numbers():
    assert [sum(1 for _ in set_partitions(k)) for k in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_block_equivalence_validation():
    with pytest.raises(ValueError):
        BlockEquivalence(((0, 1), (1,)))
    assert len(BlockEquivalence.discrete(3)) == 3
    assert len(BlockEquivalence.coarsest(3)) == 1


def test_adjacency_and_profile():
    pi = parse_partition("1,2|3|4,6|5")
    assert adjacency_classes(pi) == [(0, 1, 2), (3,)]
    assert partition_profile(pi) == (2, 2, 0, 0, 0, 0)


@given(partitions(1, 7))
def test_linear_extensions_hook_formula(pi):
    assert linear_extension_count(pi) == linear_extension_count_bruteforce(pi)
