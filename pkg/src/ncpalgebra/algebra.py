"""The free commutative algebra on noncrossing partitions and its two coproducts.

``Delta`` separates blocks along ideals of the nesting order, ``delta`` fuses
blocks along contractible equivalences.  Coefficients are exact
:class:`~fractions.Fraction` values; zero terms are never stored.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .errors import NotAugmentation, ParseError
from .partition import (
    NoncrossingPartition,
    contractible_equivalences,
    enumerate_ncp,
    ideals,
    parse_partition,
    quotient,
    restrict_blocks,
    restrict_class,
)

TENSOR = "⊗"
TENSOR_ASCII = "(x)"


def _factor_key(p: NoncrossingPartition):
    return p.key


class Monomial(tuple):
    """A commutative product of nonempty partitions, kept sorted.

    The empty monomial is the unit.  Empty partitions passed in are dropped,
    since they also stand for the unit.
    """

    __slots__ = ()

    def __new__(cls, factors: Iterable[NoncrossingPartition] = ()):
        return tuple.__new__(cls, sorted((f for f in factors if f.n), key=_factor_key))

    @classmethod
    def _sorted(cls, factors: tuple) -> Monomial:
        return tuple.__new__(cls, factors)

    def __mul__(self, other: Monomial) -> Monomial:
        if not other:
            return self
        if not self:
            return other
        return Monomial._sorted(tuple(sorted(self + other, key=_factor_key)))

    __rmul__ = __mul__

    def __add__(self, other):
        return tuple.__add__(self, other)

    @property
    def key(self):
        return (len(self), tuple(f.key for f in self))

    @property
    def legs(self) -> int:
        return sum(f.n for f in self)

    @property
    def blocks(self) -> int:
        return sum(len(f) for f in self)

    @property
    def degree(self) -> int:
        return self.blocks - len(self)

    def __str__(self) -> str:
        if not self:
            return "()"
        return ".".join(f"({f})" for f in self)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


UNIT = Monomial()

_PAREN = re.compile(r"\(([^()]*)\)")
_MONOMIAL = re.compile(r"\([^()]*\)(?:\.\([^()]*\))*")


def parse_monomial(text: str) -> Monomial:
    """Parse ``"(1,2).(1|2)"``; ``"()"`` is the unit."""
    s = "".join(text.split())
    if not _MONOMIAL.fullmatch(s):
        raise ParseError(f"bad monomial {text!r}")
    parts = _PAREN.findall(s)
    return Monomial(parse_partition(p) for p in parts)


def gradings(m: Monomial) -> tuple[int, int, int, int]:
    """``(legs, blocks, length, degree)`` of a monomial."""
    return (m.legs, m.blocks, len(m), m.degree)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _parse_coeff(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coefficient {text!r}") from None


Scalar = Union[int, Fraction]


class _Linear:
    """Shared plumbing for finitely supported maps ``key -> Fraction``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[k] = Fraction(c)
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict):
        out = cls.__new__(cls)
        out.terms = {k: Fraction(c) for k, c in terms.items() if c}
        return out

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not other:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return type(self)._raw(out)

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def scale(self, s: Scalar):
        return type(self)._raw({k: c * s for k, c in self.terms.items()})

    def items(self):
        return self.terms.items()

    def coefficient(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))


class AlgebraElement(_Linear):
    """A finite rational combination of monomials."""

    @classmethod
    def of(cls, x) -> AlgebraElement:
        """Coerce a partition, monomial, scalar or element."""
        if isinstance(x, AlgebraElement):
            return x
        if isinstance(x, NoncrossingPartition):
            return cls({Monomial((x,)): 1})
        if isinstance(x, Monomial):
            return cls({x: 1})
        if isinstance(x, (int, Fraction)):
            return cls({UNIT: x})
        raise TypeError(f"cannot coerce {type(x).__name__} to AlgebraElement")

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{_fmt_coeff(c)}*{m}" for m, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"AlgebraElement({str(self)!r})"


def _split_terms(text: str) -> list[str]:
    return [t.strip() for t in text.split(" + ")] if text.strip() else []


def _split_coeff(term: str) -> tuple[Fraction, str]:
    if "*" in term:
        c, rest = term.split("*", 1)
        return _parse_coeff(c.strip()), rest
    if term.startswith("-"):
        return Fraction(-1), term[1:]
    return Fraction(1), term


def parse_element(text: str) -> AlgebraElement:
    """Inverse of ``str(AlgebraElement)``; a bare monomial has coefficient 1."""
    if text.strip() == "0":
        return AlgebraElement()
    out: dict[Monomial, Fraction] = {}
    for term in _split_terms(text):
        c, rest = _split_coeff(term)
        m = parse_monomial(rest)
        out[m] = out.get(m, 0) + c
    return AlgebraElement(out)


class TensorElement(_Linear):
    """A rational combination of tuples of monomials (all of the same length)."""

    @property
    def order(self) -> int | None:
        for k in self.terms:
            return len(k)
        return None

    def __mul__(self, other):
        """Componentwise product of two tensors of the same order."""
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TensorElement):
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a * b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + c1 * c2
        return TensorElement._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: tuple(m.key for m in kv[0]))

    def render(self, ascii: bool = False) -> str:
        if not self.terms:
            return "0"
        sep = f" {TENSOR_ASCII} " if ascii else f" {TENSOR} "
        return " + ".join(
            f"{_fmt_coeff(c)}*" + sep.join(str(m) for m in k) for k, c in self.sorted_terms()
        )

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TensorElement({str(self)!r})"


def parse_tensor(text: str) -> TensorElement:
    if text.strip() == "0":
        return TensorElement()
    out: dict[tuple, Fraction] = {}
    for term in _split_terms(text):
        c, rest = _split_coeff(term)
        pieces = re.split(r"\s*(?:⊗|\(x\))\s*", rest)
        k = tuple(parse_monomial(p) for p in pieces)
        out[k] = out.get(k, 0) + c
    return TensorElement(out)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    out: dict[Monomial, Fraction] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            m = m1 * m2
            out[m] = out.get(m, 0) + c1 * c2
    return AlgebraElement._raw(out)


# -- coproducts ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _Delta_partition(pi: NoncrossingPartition) -> tuple[tuple[Monomial, Monomial, int], ...]:
    k = len(pi)
    acc: dict[tuple[Monomial, Monomial], int] = {}
    for J in ideals(pi):
        rest = [i for i in range(k) if i not in J]
        left = Monomial((restrict_class(pi, rest),)) if rest else UNIT
        right = Monomial(restrict_blocks(pi, J))
        acc[(left, right)] = acc.get((left, right), 0) + 1
    return tuple((l, r, c) for (l, r), c in acc.items())


@lru_cache(maxsize=None)
def _delta_partition(pi: NoncrossingPartition) -> tuple[tuple[Monomial, Monomial, int], ...]:
    acc: dict[tuple[Monomial, Monomial], int] = {}
    for eq in contractible_equivalences(pi):
        left = Monomial((quotient(pi, eq),))
        right = Monomial(restrict_class(pi, c) for c in eq.classes)
        acc[(left, right)] = acc.get((left, right), 0) + 1
    return tuple((l, r, c) for (l, r), c in acc.items())


def _monomial_coproduct(m: Monomial, per_factor) -> dict[tuple[Monomial, Monomial], Fraction]:
    acc: dict[tuple[Monomial, Monomial], Fraction] = {(UNIT, UNIT): Fraction(1)}
    for f in m:
        nxt: dict[tuple[Monomial, Monomial], Fraction] = {}
        for (l0, r0), c0 in acc.items():
            for l1, r1, c1 in per_factor(f):
                key = (l0 * l1, r0 * r1)
                nxt[key] = nxt.get(key, 0) + c0 * c1
        acc = nxt
    return acc


@lru_cache(maxsize=65536)
def _Delta_monomial(m: Monomial):
    return _monomial_coproduct(m, _Delta_partition)


@lru_cache(maxsize=65536)
def _delta_monomial(m: Monomial):
    return _monomial_coproduct(m, _delta_partition)


def _apply(x, per_monomial) -> TensorElement:
    x = AlgebraElement.of(x)
    out: dict[tuple[Monomial, Monomial], Fraction] = {}
    for m, c in x.terms.items():
        for key, c2 in per_monomial(m).items():
            out[key] = out.get(key, 0) + c * c2
    return TensorElement._raw(out)


def coproduct_Delta(x) -> TensorElement:
    """Block separation: ``sum over ideals J`` of outside part ``⊗`` pieces of ``J``."""
    return _apply(x, _Delta_monomial)


def coproduct_delta(x) -> TensorElement:
    """Block fusion: ``sum over contractible equivalences`` of quotient ``⊗`` classes."""
    return _apply(x, _delta_monomial)


def counit_Delta(x) -> Fraction:
    return AlgebraElement.of(x).coefficient(UNIT)


def counit_delta_monomial(m: Monomial) -> int:
    return int(all(len(f) == 1 for f in m))


def counit_delta(x) -> Fraction:
    x = AlgebraElement.of(x)
    return sum((c for m, c in x.terms.items() if counit_delta_monomial(m)), Fraction(0))


def reduced_Delta_monomial(m: Monomial) -> dict[tuple[Monomial, Monomial], Fraction]:
    return {k: c for k, c in _Delta_monomial(m).items() if k[0] and k[1]}


def reduced_coproduct_iterate(x, k: int) -> TensorElement:
    """The ``k``-fold reduced coproduct, an order ``k + 1`` tensor."""
    x = AlgebraElement.of(x)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if counit_Delta(x):
        raise NotAugmentation("reduced coproduct needs an element with zero unit coefficient")
    cur: dict[tuple, Fraction] = {(m,): c for m, c in x.terms.items()}
    for _ in range(k):
        nxt: dict[tuple, Fraction] = {}
        for key, c in cur.items():
            for (l, r), c2 in reduced_Delta_monomial(key[-1]).items():
                nk = key[:-1] + (l, r)
                nxt[nk] = nxt.get(nk, 0) + c * c2
        cur = nxt
    return TensorElement._raw(cur)


def tensor_apply(t: TensorElement, position: int, coproduct) -> TensorElement:
    """Apply a coproduct to one slot of a tensor, raising its order by one."""
    out: dict[tuple, Fraction] = {}
    for key, c in t.terms.items():
        for (l, r), c2 in coproduct(AlgebraElement({key[position]: 1})).terms.items():
            nk = key[:position] + (l, r) + key[position + 1:]
            out[nk] = out.get(nk, 0) + c * c2
    return TensorElement._raw(out)


def cointeraction_sides(x) -> tuple[TensorElement, TensorElement]:
    """``(Delta ⊗ Id) delta(x)`` and ``m_{1,3,24} (delta ⊗ delta) Delta(x)``."""
    lhs = tensor_apply(coproduct_delta(x), 0, coproduct_Delta)
    out: dict[tuple, Fraction] = {}
    for (c, d), k in coproduct_Delta(x).terms.items():
        dc = _delta_monomial(c)
        dd = _delta_monomial(d)
        for (a1, a2), k1 in dc.items():
            for (a3, a4), k2 in dd.items():
                key = (a1, a3, a2 * a4)
                out[key] = out.get(key, 0) + k * k1 * k2
    return lhs, TensorElement._raw(out)


def check_cointeraction(x) -> bool:
    lhs, rhs = cointeraction_sides(x)
    return lhs == rhs


def random_monomial(rng: random.Random, max_blocks: int = 6, max_legs: int = 5) -> Monomial:
    """A pseudo-random nonempty monomial with at most ``max_blocks`` blocks in total."""
    factors = []
    budget = max_blocks
    while budget > 0:
        choices = [p for n in range(1, max_legs + 1) for p in enumerate_ncp(n) if len(p) <= budget]
        f = rng.choice(choices)
        factors.append(f)
        budget -= len(f)
        if rng.random() < 0.5:
            break
    return Monomial(factors)
