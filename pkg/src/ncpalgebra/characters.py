"""Characters of the partition algebra and their two convolution products.

A :class:`Character` is a rule on nonempty partitions; its value on a
monomial is the product over the factors and on an element the linear
extension.  Values are memoized per partition.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Callable

from .algebra import AlgebraElement, Monomial, _Delta_partition, _delta_partition
from .errors import NonInvertible
from .partition import (
    NoncrossingPartition,
    adjacency_classes,
    catalan,
    contractible_equivalences,
    linear_extension_count,
    one_block,
    quotient,
    restrict_class,
)

Rule = Callable[[NoncrossingPartition], Fraction]


class Character:
    """Multiplicative functional given by its values on partitions."""

    def __init__(self, rule: Rule, name: str = "character"):
        self._rule = rule
        self.name = name
        self._memo: dict[NoncrossingPartition, Fraction] = {}
        self._lock = threading.Lock()

    def on_partition(self, pi: NoncrossingPartition) -> Fraction:
        if pi.n == 0:
            return Fraction(1)
        try:
            return self._memo[pi]
        except KeyError:
            pass
        value = Fraction(self._rule(pi))
        with self._lock:
            self._memo[pi] = value
        return value

    def on_monomial(self, m: Monomial) -> Fraction:
        out = Fraction(1)
        for f in m:
            out *= self.on_partition(f)
            if not out:
                break
        return out

    def __call__(self, x) -> Fraction:
        if isinstance(x, NoncrossingPartition):
            return self.on_partition(x)
        if isinstance(x, Monomial):
            return self.on_monomial(x)
        x = AlgebraElement.of(x)
        return sum((c * self.on_monomial(m) for m, c in x.terms.items()), Fraction(0))

    def __repr__(self) -> str:
        return f"Character({self.name!r})"


def _convolve(a: Character, b: Character, per_partition, name: str) -> Character:
    def rule(pi):
        total = Fraction(0)
        for left, right, c in per_partition(pi):
            va = a.on_monomial(left)
            if va:
                total += c * va * b.on_monomial(right)
        return total

    return Character(rule, name)


def convolve_Delta(a: Character, b: Character) -> Character:
    """``(a ⊗ b) ∘ Delta``; the unit is :func:`eps_Delta`."""
    return _convolve(a, b, _Delta_partition, f"({a.name} * {b.name})")


def convolve_delta(a: Character, b: Character) -> Character:
    """``(a ⊗ b) ∘ delta``; the unit is :func:`eps_delta`."""
    return _convolve(a, b, _delta_partition, f"({a.name} ⋆ {b.name})")


def invert_delta(lam: Character) -> Character:
    """Inverse for the fusion convolution, by induction on the number of blocks.

    The one-class equivalence contributes ``lam(one block) * inverse(pi)``;
    every other equivalence only involves partitions with fewer blocks.
    """

    def rule(pi):
        pivot = lam.on_partition(one_block(pi.n))
        if not pivot:
            raise NonInvertible(f"{lam.name} vanishes on the one-block partition of {pi.n} legs")
        rest = Fraction(0)
        for left, right, c in _delta_partition(pi):
            if len(right) == 1 and right[0] == pi:
                continue
            va = lam.on_monomial(left)
            if va:
                rest += c * va * inverse.on_monomial(right)
        target = 1 if len(pi) == 1 else 0
        return (target - rest) / pivot

    inverse = Character(rule, f"{lam.name}^-1")
    return inverse


def invert_Delta(lam: Character) -> Character:
    """Inverse for the separation convolution (``lam`` is 1 on the unit)."""

    def rule(pi):
        total = Fraction(0)
        for left, right, c in _Delta_partition(pi):
            if not left:
                continue
            va = lam.on_monomial(left)
            if va:
                total += c * va * inverse.on_monomial(right)
        return -total

    inverse = Character(rule, f"{lam.name}^-1*")
    return inverse


def mu_ncp_closed(pi: NoncrossingPartition) -> int:
    """Signed product of Catalan numbers over the adjacency classes."""
    out = (-1) ** len(pi)
    for cls in adjacency_classes(pi):
        out *= catalan(len(cls))
    return out


def _is_base(pi: NoncrossingPartition) -> bool:
    return pi.is_base()


def eps_Delta() -> Character:
    return Character(lambda pi: 0, "eps_Delta")


def eps_delta() -> Character:
    return Character(lambda pi: 1 if len(pi) == 1 else 0, "eps_delta")


def lambda0() -> Character:
    return Character(
        lambda pi: Fraction(linear_extension_count(pi), math.factorial(len(pi))), "lambda0"
    )


def lambda_all_one() -> Character:
    return Character(lambda pi: 1, "lambda")


def lambda_strict() -> Character:
    return Character(lambda pi: 1 if _is_base(pi) else 0, "lambda_s")


def mu_s_closed() -> Character:
    return Character(lambda pi: (-1) ** (len(pi) - 1) if _is_base(pi) else 0, "mu_s")


def mu_ncp() -> Character:
    return Character(mu_ncp_closed, "mu_ncp")


def gamma(q) -> Character:
    q = Fraction(q)
    return Character(lambda pi: q if len(pi) == 1 else 0, f"gamma_{q}")


def lambda_ncp() -> Character:
    c = invert_delta(lambda0())
    c.name = "lambda_ncp"
    return c


def mu() -> Character:
    c = invert_delta(lambda_all_one())
    c.name = "mu"
    return c


def mu_via_product() -> Character:
    """``gamma_{-1} ⋆ mu_s ⋆ mu_ncp``, an independent route to :func:`mu`."""
    return convolve_delta(convolve_delta(gamma(-1), mu_s_closed()), mu_ncp())


def mu_sum_formula(pi: NoncrossingPartition) -> Fraction:
    """Signed sum of ``mu_ncp`` over equivalences whose quotient has no nesting."""
    total = Fraction(0)
    closed = mu_ncp()
    for eq in contractible_equivalences(pi):
        if quotient(pi, eq).is_base():
            term = Fraction((-1) ** len(eq))
            for cls in eq.classes:
                term *= closed.on_partition(restrict_class(pi, cls))
            total += term
    return total


NAMED = {
    "eps-delta": eps_delta,
    "eps-Delta": eps_Delta,
    "lambda0": lambda0,
    "lambda-ncp": lambda_ncp,
    "lambda": lambda_all_one,
    "lambda-strict": lambda_strict,
    "mu": mu,
    "mu-strict": mu_s_closed,
    "mu-ncp": mu_ncp,
}


def named_character(name: str, q=None) -> Character:
    if name == "gamma":
        if q is None:
            raise ValueError("gamma needs a parameter q")
        return gamma(q)
    try:
        return _cached(name)
    except KeyError:
        raise KeyError(f"unknown character {name!r}; choose from {sorted(NAMED) + ['gamma']}") from None


_SHARED: dict[str, Character] = {}


def _cached(name: str) -> Character:
    if name not in _SHARED:
        _SHARED[name] = NAMED[name]()
    return _SHARED[name]
