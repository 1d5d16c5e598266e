"""Polynomial invariants of noncrossing partitions.

The chromatic invariant ``phi`` is computed three independent ways: from the
iterated reduced coproduct, from the shift recurrence over base blocks, and
by interpolating counts of valid colorations.  The module also provides the
linear-extension invariants, the leading-term invariant ``phi0``, the action
of characters on invariants and the antipode.
"""

from __future__ import annotations

import itertools
import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import guards
from .algebra import (
    AlgebraElement,
    Monomial,
    UNIT,
    _delta_partition,
    counit_delta_monomial,
    reduced_Delta_monomial,
)
from .characters import Character, lambda0, lambda_ncp, mu_ncp
from .partition import (
    NoncrossingPartition,
    base,
    close_pairs,
    linear_extension_count,
    nested_pairs,
    parents,
    restrict_blocks,
    restrict_class,
)
from .polynomial import HILBERT, RationalPolynomial, from_forward_differences

ALGORITHMS = ("coproduct", "recurrence", "interpolation")

ONE = RationalPolynomial.constant(1)


class PolynomialInvariant:
    """A multiplicative map to ``Q[X]`` given by its values on partitions."""

    def __init__(self, rule: Callable[[NoncrossingPartition], RationalPolynomial], name: str = "invariant"):
        self._rule = rule
        self.name = name
        self._memo: dict[NoncrossingPartition, RationalPolynomial] = {}
        self._lock = threading.Lock()

    def on_partition(self, pi: NoncrossingPartition) -> RationalPolynomial:
        if pi.n == 0:
            return ONE
        try:
            return self._memo[pi]
        except KeyError:
            pass
        value = self._rule(pi).to_monomial()
        with self._lock:
            self._memo[pi] = value
        return value

    def on_monomial(self, m: Monomial) -> RationalPolynomial:
        out = ONE
        for f in m:
            out = out * self.on_partition(f)
        return out

    def __call__(self, x) -> RationalPolynomial:
        if isinstance(x, NoncrossingPartition):
            return self.on_partition(x)
        if isinstance(x, Monomial):
            return self.on_monomial(x)
        x = AlgebraElement.of(x)
        total = RationalPolynomial()
        for m, c in x.terms.items():
            total = total + self.on_monomial(m) * c
        return total

    def __repr__(self) -> str:
        return f"PolynomialInvariant({self.name!r})"


# -- valid colorations -----------------------------------------------------------

@lru_cache(maxsize=4096)
def _coloration_constraints(pi: NoncrossingPartition):
    k = len(pi)
    blocks = pi.blocks
    par = parents(pi)
    # for each ordered pair (b, b'') with max b < min b'', the blocks meeting the gap
    gaps = []
    for i, j in itertools.permutations(range(k), 2):
        lo, hi = blocks[i][-1], blocks[j][0]
        if lo < hi:
            between = tuple(
                m for m in range(k) if any(lo < x < hi for x in blocks[m])
            )
            gaps.append((i, j, between))
    return par, tuple(gaps)


def is_valid_coloration(pi: NoncrossingPartition, f) -> bool:
    par, gaps = _coloration_constraints(pi)
    for j, p in enumerate(par):
        if p is not None and not f[p] < f[j]:
            return False
    for i, j, between in gaps:
        if f[i] == f[j] and not any(f[m] < f[i] for m in between):
            return False
    return True


def count_valid_colorations(pi: NoncrossingPartition, N: int) -> int:
    """Number of valid colorations of the blocks of ``pi`` with colours ``1..N``.

    Colours increase strictly from a block to any block nested inside it, and
    two blocks side by side may share a colour only when some block meeting
    the gap between them has a smaller colour.  Exhaustive search.
    """
    k = len(pi)
    if k == 0:
        return 1
    if N <= 0:
        return 0
    guards.check(N ** k, guards.GUARDS.coloration_maps, "coloration maps")
    par, gaps = _coloration_constraints(pi)
    f = [0] * k
    count = 0

    # parents come before children, so nesting is checked while assigning
    def rec(i: int) -> None:
        nonlocal count
        if i == k:
            for a, b, between in gaps:
                if f[a] == f[b] and not any(f[m] < f[a] for m in between):
                    return
            count += 1
            return
        p = par[i]
        start = f[p] + 1 if p is not None else 1
        for c in range(start, N + 1):
            f[i] = c
            rec(i + 1)

    rec(0)
    return count


# -- phi by the reduced coproduct -----------------------------------------------

@lru_cache(maxsize=None)
def _counit_chain(m: Monomial, k: int) -> Fraction:
    """``eps_delta^{⊗k}`` applied to the ``(k-1)``-fold reduced coproduct of ``m``."""
    if k == 1:
        return Fraction(counit_delta_monomial(m))
    total = Fraction(0)
    for (left, right), c in reduced_Delta_monomial(m).items():
        if counit_delta_monomial(left):
            total += c * _counit_chain(right, k - 1)
    return total


def _phi_coproduct(pi: NoncrossingPartition) -> RationalPolynomial:
    m = Monomial((pi,))
    coeffs = [Fraction(0)] + [_counit_chain(m, k) for k in range(1, m.blocks + 1)]
    return RationalPolynomial(coeffs, HILBERT)


# -- phi by the shift recurrence -------------------------------------------------

def _antidifference(q: RationalPolynomial) -> RationalPolynomial:
    """The ``P`` with ``P(X+1) - P(X) = q`` and ``P(0) = 0``."""
    h = q.to_hilbert().coeffs
    return RationalPolynomial((Fraction(0),) + h, HILBERT)


def _phi_recurrence(pi: NoncrossingPartition) -> RationalPolynomial:
    k = len(pi)
    blocks = pi.blocks
    total = RationalPolynomial()
    for b in base(pi):
        lo, hi = blocks[b][0], blocks[b][-1]
        left = [i for i in range(k) if blocks[i][-1] < lo]
        right = [i for i in range(k) if blocks[i][0] > hi]
        inside = [i for i in range(k) if lo < blocks[i][0] < hi]
        term = PHI_RECURRENCE(restrict_class(pi, left)) if left else ONE
        for f in restrict_blocks(pi, inside):
            term = term * PHI_RECURRENCE(f)
        if right:
            term = term * PHI_RECURRENCE(restrict_class(pi, right))
        total = total + term
    return _antidifference(total)


# -- phi by interpolation --------------------------------------------------------

def _phi_interpolation(pi: NoncrossingPartition) -> RationalPolynomial:
    return from_forward_differences([count_valid_colorations(pi, N) for N in range(len(pi) + 1)])


PHI_COPRODUCT = PolynomialInvariant(_phi_coproduct, "phi[coproduct]")
PHI_RECURRENCE = PolynomialInvariant(_phi_recurrence, "phi[recurrence]")
PHI_INTERPOLATION = PolynomialInvariant(_phi_interpolation, "phi[interpolation]")

_PHI = {
    "coproduct": PHI_COPRODUCT,
    "recurrence": PHI_RECURRENCE,
    "interpolation": PHI_INTERPOLATION,
}


def phi_invariant(algorithm: str = "recurrence") -> PolynomialInvariant:
    try:
        return _PHI[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}") from None


def phi_ncp(x, algorithm: str = "recurrence") -> RationalPolynomial:
    """The chromatic invariant of a partition, monomial or element."""
    return phi_invariant(algorithm)(x)


# -- linear extensions -----------------------------------------------------------

def count_order_maps(pi: NoncrossingPartition, n: int, strict: bool) -> int:
    """Maps ``blocks -> [n]`` that are weakly (or strictly) increasing inward.

    Dynamic programme over the nesting forest: ``ways[v][c]`` counts the
    colourings of the subtree of ``v`` with ``v`` coloured ``c``.
    """
    k = len(pi)
    if k == 0:
        return 1
    if n <= 0:
        return 0
    par = parents(pi)
    children: list[list[int]] = [[] for _ in range(k)]
    for j, p in enumerate(par):
        if p is not None:
            children[p].append(j)
    ways: list[list[int]] = [[] for _ in range(k)]
    for v in range(k - 1, -1, -1):
        row = [1] * (n + 2)
        for w in children[v]:
            # suffix sums of the child's table
            suffix = [0] * (n + 2)
            for c in range(n, 0, -1):
                suffix[c] = suffix[c + 1] + ways[w][c]
            for c in range(1, n + 1):
                row[c] *= suffix[c + 1] if strict else suffix[c]
        row[0] = row[n + 1] = 0
        ways[v] = row
    total = 1
    for v in range(k):
        if par[v] is None:
            total *= sum(ways[v][1:n + 1])
    return total


def count_order_maps_bruteforce(pi: NoncrossingPartition, n: int, strict: bool) -> int:
    k = len(pi)
    guards.check(max(n, 1) ** k, guards.GUARDS.coloration_maps, "order maps")
    rel = [(p, j) for j, p in enumerate(parents(pi)) if p is not None]
    count = 0
    for f in itertools.product(range(1, n + 1), repeat=k):
        if all((f[p] < f[j]) if strict else (f[p] <= f[j]) for p, j in rel):
            count += 1
    return count


def _lambda_rule(strict: bool):
    def rule(pi):
        values = [count_order_maps(pi, n, strict) for n in range(len(pi) + 1)]
        return from_forward_differences(values)

    return rule


LAMBDA_WEAK = PolynomialInvariant(_lambda_rule(False), "Lambda")
LAMBDA_STRICT = PolynomialInvariant(_lambda_rule(True), "Lambda_s")


def lambda_invariant(P, strict: bool = False) -> RationalPolynomial:
    """Counting polynomial of weak (or strict) order maps of the nesting poset.

    In the Hilbert basis its coefficients are the numbers of surjective order
    maps onto ``[k]``.  On a monomial the poset is the disjoint union of the
    factors' posets, so the value is the product.
    """
    return (LAMBDA_STRICT if strict else LAMBDA_WEAK)(P)


# -- phi0, the action of characters, the antipode --------------------------------

def _phi0_rule(pi: NoncrossingPartition) -> RationalPolynomial:
    k = len(pi)
    coeffs = [Fraction(0)] * k + [Fraction(linear_extension_count(pi), math.factorial(k))]
    return RationalPolynomial(coeffs)


PHI0 = PolynomialInvariant(_phi0_rule, "phi0")


def phi0(x) -> RationalPolynomial:
    return PHI0(x)


def act_character(phi: PolynomialInvariant, lam: Character) -> PolynomialInvariant:
    """``(phi ⊗ lam) ∘ delta``."""

    def rule(pi):
        total = RationalPolynomial()
        for left, right, c in _delta_partition(pi):
            v = lam.on_monomial(right)
            if v:
                total = total + phi.on_monomial(left) * (c * v)
        return total

    return PolynomialInvariant(rule, f"({phi.name} <- {lam.name})")


_MU_NCP = mu_ncp()


@lru_cache(maxsize=None)
def _antipode_partition(pi: NoncrossingPartition) -> AlgebraElement:
    out: dict[Monomial, Fraction] = {}
    for left, right, c in _delta_partition(pi):
        v = _MU_NCP.on_monomial(left)
        if v:
            out[right] = out.get(right, 0) + c * v
    return AlgebraElement(out)


def antipode(x) -> AlgebraElement:
    """``(mu_ncp ⊗ Id) ∘ delta``, extended multiplicatively and linearly."""
    x = AlgebraElement.of(x)
    total = AlgebraElement()
    for m, c in x.terms.items():
        term = AlgebraElement({UNIT: c})
        for f in m:
            term = term * _antipode_partition(f)
        total = total + term
    return total


def coefficient_checks(pi: NoncrossingPartition) -> dict:
    """Compare the top, second and linear coefficients of ``phi`` with their formulas."""
    p = phi_ncp(pi)
    k = len(pi)
    lead = p.coefficient(k)
    sub = p.coefficient(k - 1) if k >= 1 else Fraction(0)
    lin = p.coefficient(1)
    expected_lead = lambda0()(pi)
    if k >= 1:
        close = sum(linear_extension_count(q) for _, _, q in close_pairs(pi))
        nested = sum(linear_extension_count(q) for _, _, q in nested_pairs(pi))
        expected_sub = -Fraction(1, math.factorial(k - 1)) * (close + Fraction(nested, 2))
    else:
        expected_sub = Fraction(0)
    expected_lin = _LAMBDA_NCP(pi)
    checks = {
        "degree": (p.degree, k),
        "leading": (lead, expected_lead),
        "linear": (lin, expected_lin),
    }
    if k >= 2:
        checks["subleading"] = (sub, expected_sub)
    return {
        "partition": str(pi),
        "checks": checks,
        "ok": all(a == b for a, b in checks.values()),
    }


_LAMBDA_NCP = lambda_ncp()
