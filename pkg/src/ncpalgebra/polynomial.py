"""Univariate polynomials with exact rational coefficients.

A polynomial is stored either in the monomial basis ``X^k`` or in the Hilbert
basis ``H_k(X) = X(X-1)...(X-k+1)/k!``; the tag only changes how the
coefficient list is read, so equality compares the underlying polynomials.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ParseError

MONOMIAL = "monomial"
HILBERT = "hilbert"


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@lru_cache(maxsize=None)
def hilbert_in_monomial(k: int) -> tuple[Fraction, ...]:
    """Monomial coefficients of ``H_k``."""
    poly = [Fraction(1)]
    for j in range(k):
        # multiply by (X - j)
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= j * c
        poly = nxt
    f = math.factorial(k)
    return tuple(c / f for c in poly)


@lru_cache(maxsize=None)
def power_in_hilbert(n: int) -> tuple[Fraction, ...]:
    """Hilbert coefficients of ``X^n``: ``k! S(n, k)`` with Stirling numbers of the second kind."""
    stirling = [1] + [0] * n
    for m in range(1, n + 1):
        row = [0] * (n + 1)
        for k in range(1, m + 1):
            row[k] = k * stirling[k] + stirling[k - 1]
        stirling = row
    return tuple(Fraction(math.factorial(k) * stirling[k]) for k in range(n + 1))


class RationalPolynomial:
    """Immutable polynomial over the rationals with a basis tag."""

    __slots__ = ("coeffs", "basis")

    def __init__(self, coeffs: Sequence = (), basis: str = MONOMIAL):
        if basis not in (MONOMIAL, HILBERT):
            raise ValueError(f"unknown basis {basis!r}")
        object.__setattr__(self, "coeffs", _trim(coeffs))
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    @classmethod
    def constant(cls, c) -> RationalPolynomial:
        return cls([c])

    @classmethod
    def X(cls) -> RationalPolynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def to_monomial(self) -> RationalPolynomial:
        if self.basis == MONOMIAL:
            return self
        out = [Fraction(0)] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if c:
                for i, h in enumerate(hilbert_in_monomial(k)):
                    out[i] += c * h
        return RationalPolynomial(out)

    def to_hilbert(self) -> RationalPolynomial:
        if self.basis == HILBERT:
            return self
        out = [Fraction(0)] * len(self.coeffs)
        for n, c in enumerate(self.coeffs):
            if c:
                for k, s in enumerate(power_in_hilbert(n)):
                    out[k] += c * s
        return RationalPolynomial(out, HILBERT)

    def in_basis(self, basis: str) -> RationalPolynomial:
        return self.to_hilbert() if basis == HILBERT else self.to_monomial()

    def __call__(self, x):
        """Evaluate by Horner's rule on the monomial form."""
        acc = Fraction(0)
        for c in reversed(self.to_monomial().coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial.constant(other)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if self.basis == other.basis:
            return self.coeffs == other.coeffs
        return self.to_monomial().coeffs == other.to_monomial().coeffs

    def __hash__(self):
        return hash(self.to_monomial().coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial([other], self.basis).in_basis(self.basis)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        basis = self.basis if self.basis == other.basis else MONOMIAL
        a, b = self.in_basis(basis).coeffs, other.in_basis(basis).coeffs
        n = max(len(a), len(b))
        return RationalPolynomial(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], basis
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial([-c for c in self.coeffs], self.basis)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([c * other for c in self.coeffs], self.basis)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        a, b = self.to_monomial().coeffs, other.to_monomial().coeffs
        if not a or not b:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = RationalPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def substitute_negated(self) -> RationalPolynomial:
        """``P(-X)``."""
        m = self.to_monomial()
        return RationalPolynomial([c if i % 2 == 0 else -c for i, c in enumerate(m.coeffs)])

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"RationalPolynomial({str(self)!r}, basis={self.basis!r})"


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: RationalPolynomial) -> str:
    """Ascending powers: ``3/2*X - 5/2*X^2 + X^3``; Hilbert terms print as ``H_k``."""
    hilbert = p.basis == HILBERT
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        if i == 0:
            var = ""
        elif hilbert:
            var = f"H_{i}"
        else:
            var = "X" if i == 1 else f"X^{i}"
        mag = abs(c)
        if not var:
            body = _fmt(mag)
        elif mag == 1:
            body = var
        else:
            body = f"{_fmt(mag)}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


_TERM = re.compile(r"([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(?:(X|H_)(?:\^?(\d+))?)?")


def parse_polynomial(text: str) -> RationalPolynomial:
    """Inverse of :func:`format_polynomial`."""
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial")
    if s == "0":
        return RationalPolynomial()
    hilbert = "H_" in s
    if hilbert and "X" in s:
        raise ParseError("mixed bases in polynomial")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ParseError(f"bad polynomial {text!r}")
        sign, num, var, power = m.groups()
        c = Fraction(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        if var is None:
            k = 0
        elif var == "X":
            k = int(power) if power else 1
        else:
            if not power:
                raise ParseError(f"bad Hilbert term in {text!r}")
            k = int(power)
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ParseError(f"bad polynomial {text!r}")
    top = max(coeffs) if coeffs else -1
    return RationalPolynomial([coeffs.get(i, 0) for i in range(top + 1)], HILBERT if hilbert else MONOMIAL)


def hilbert_to_monomial(p: RationalPolynomial) -> RationalPolynomial:
    return p.to_monomial()


def monomial_to_hilbert(p: RationalPolynomial) -> RationalPolynomial:
    return p.to_hilbert()


def from_forward_differences(values: Sequence) -> RationalPolynomial:
    """The polynomial of degree ``< len(values)`` taking ``values[j]`` at ``j``.

    In the Hilbert basis the coefficients are exactly the iterated forward
    differences at ``0``.
    """
    row = [Fraction(v) for v in values]
    coeffs = []
    while row:
        coeffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return RationalPolynomial(coeffs, HILBERT)
