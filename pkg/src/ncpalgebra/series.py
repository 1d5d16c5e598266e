"""Series tangent to the identity, their inversion, and the ``P_n`` tables.

``P_n`` denotes the chromatic invariant of the partition of ``[n]`` into
singletons.  It is computed here by three routes that share no code: the
integer recursion for its Hilbert coefficients, a Riordan-matrix
exponential, and (in :mod:`ncpalgebra.invariants`) the generic invariant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Sequence

from . import guards
from .errors import OrderOverflow
from .algebra import Monomial, TensorElement, UNIT
from .invariants import is_valid_coloration
from .partition import J, adjacency_classes, catalan, enumerate_ncp, partition_profile
from .polynomial import HILBERT, RationalPolynomial


@dataclass(frozen=True)
class FormalSeries:
    """``x + a_1 x^2 + a_2 x^3 + ...`` known up to ``x^order``.

    Coefficients may live in any commutative ring supporting ``+`` and
    ``*`` with integers (``Fraction``, ``int``, sympy expressions, ...).
    """

    coeffs: tuple
    order: int = -1

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.order < 0:
            object.__setattr__(self, "order", len(self.coeffs) + 1)
        if self.order < 1:
            raise ValueError("order must be at least 1")

    @classmethod
    def identity(cls, order: int) -> FormalSeries:
        return cls((0,) * (order - 1), order)

    def coefficient(self, power: int):
        """Coefficient of ``x^power``."""
        if power == 1:
            return 1
        if power < 1 or power > self.order:
            raise IndexError(power)
        i = power - 2
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def dense(self, order: int) -> list:
        """Coefficients of ``x^0 .. x^order``."""
        return [0] + [self.coefficient(p) for p in range(1, order + 1)]

    def truncate(self, order: int) -> FormalSeries:
        return FormalSeries(tuple(self.coefficient(p) for p in range(2, order + 1)), order)


def _mul_trunc(a: list, b: list, order: int) -> list:
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if i > order:
            break
        if x == 0:
            continue
        for j in range(0, order + 1 - i):
            y = b[j]
            if y != 0:
                out[i + j] = out[i + j] + x * y
    return out


def compose(f: FormalSeries, g: FormalSeries, order: int | None = None) -> FormalSeries:
    """``f ∘ g`` up to ``x^order``."""
    if order is None:
        order = min(f.order, g.order)
    if order > min(f.order, g.order):
        raise OrderOverflow(f"order {order} exceeds the known order of the inputs")
    gd = g.dense(order)
    result = list(gd)
    power = gd
    for k in range(2, order + 1):
        power = _mul_trunc(power, gd, order)
        a = f.coefficient(k)
        if a != 0:
            for i in range(order + 1):
                if power[i] != 0:
                    result[i] = result[i] + a * power[i]
    return FormalSeries(tuple(result[2:]), order)


def _check_order(order: int) -> None:
    guards.check_order(order - 1, guards.GUARDS.series_order, "series degree")


def invert_oracle(f: FormalSeries, order: int | None = None) -> FormalSeries:
    """Compositional inverse, solving ``f ∘ g = x`` one coefficient at a time."""
    if order is None:
        order = f.order
    _check_order(order)
    g = [0] * (order - 1)
    for p in range(2, order + 1):
        trial = compose(f, FormalSeries(tuple(g), order), p)
        g[p - 2] = g[p - 2] - trial.coefficient(p)
    return FormalSeries(tuple(g), order)


@lru_cache(maxsize=None)
def _profile_sums(n: int) -> dict[tuple[int, ...], int]:
    sums: dict[tuple[int, ...], int] = {}
    for pi in enumerate_ncp(n):
        weight = 1
        for cls in adjacency_classes(pi):
            weight *= catalan(len(cls))
        prof = partition_profile(pi)
        sums[prof] = sums.get(prof, 0) + weight
    return sums


def lambda_coefficient(profile: Sequence[int]) -> int:
    """Signed sum over partitions of the given block-size profile of Catalan products."""
    profile = tuple(profile)
    n = sum((i + 1) * k for i, k in enumerate(profile))
    if len(profile) < n:
        profile = profile + (0,) * (n - len(profile))
    elif any(profile[n:]):
        raise ValueError("profile longer than its weight")
    profile = profile[:n]
    if n == 0:
        return 1
    return (-1) ** sum(profile) * _profile_sums(n).get(profile, 0)


def inversion_terms(n: int) -> dict[tuple[int, ...], int]:
    """Nonzero coefficients of ``a_1^{k_1}...a_n^{k_n}`` in the ``x^{n+1}`` term of the inverse."""
    return {p: (-1) ** sum(p) * s for p, s in sorted(_profile_sums(n).items())}


def invert_ncp(f: FormalSeries, order: int | None = None) -> FormalSeries:
    """Compositional inverse assembled from the partition-profile coefficients."""
    if order is None:
        order = f.order
    _check_order(order)
    out = []
    for n in range(1, order):
        total = 0
        for prof, lam in inversion_terms(n).items():
            term = lam
            for i, k in enumerate(prof, 1):
                if k:
                    term = term * f.coefficient(i + 1) ** k
            total = total + term
        out.append(total)
    return FormalSeries(tuple(out), order)


def _compositions_weighted(n: int):
    """Tuples ``(k_0, ..., k_n)`` with ``sum (i+1) k_i = n + 1``."""
    target = n + 1

    def rec(i, remaining):
        if i == n:
            if remaining % (n + 1) == 0:
                yield (remaining // (n + 1),)
            return
        w = i + 1
        for k in range(remaining // w + 1):
            for rest in rec(i + 1, remaining - k * w):
                yield (k,) + rest

    yield from rec(0, target)


def faadibruno_delta_Jn(n: int) -> TensorElement:
    """Separation coproduct of ``J_n`` from the multinomial composition formula."""
    guards.check(n, guards.GUARDS.faadibruno_n, "n")
    out: dict[tuple[Monomial, Monomial], Fraction] = {}
    for ks in _compositions_weighted(n):
        total = sum(ks)
        coeff = math.factorial(total)
        for k in ks:
            coeff //= math.factorial(k)
        left = Monomial((J(total - 1),)) if total > 1 else UNIT
        right = Monomial(J(i) for i, k in enumerate(ks) if i for _ in range(k))
        key = (left, right)
        out[key] = out.get(key, 0) + coeff
    return TensorElement(out)


@dataclass(frozen=True)
class CoefficientTable:
    """Hilbert coefficients ``a[i, n]`` of ``P_n`` for ``1 <= i <= i_max``, ``1 <= n <= n_max``."""

    n_max: int
    i_max: int
    a: dict = field(repr=False)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.a.get(key, 0)

    def column(self, n: int) -> list[int]:
        return [self[(i, n)] for i in range(1, self.i_max + 1)]

    def P(self, n: int) -> RationalPolynomial:
        return RationalPolynomial([0] + self.column(n), HILBERT)


def a_table(n_max: int, i_max: int | None = None) -> CoefficientTable:
    """Integer recursion on ``i``: ``a[i, n] = sum_k C(n-k+1, k) a[i-1, n-k]``."""
    if i_max is None:
        i_max = n_max
    a: dict[tuple[int, int], int] = {}
    for n in range(1, n_max + 1):
        a[(1, n)] = 1 if n == 1 else 0
    for i in range(2, i_max + 1):
        for n in range(1, n_max + 1):
            total = 0
            for k in range(1, (n + 1) // 2 + 1):
                if n - k >= 1:
                    total += math.comb(n - k + 1, k) * a[(i - 1, n - k)]
            a[(i, n)] = total
    return CoefficientTable(n_max, i_max, a)


def a_table_bruteforce(n_max: int) -> CoefficientTable:
    """Count surjective colourings of ``1..n`` where equal colours need a smaller one between."""
    a: dict[tuple[int, int], int] = {}
    for n in range(1, n_max + 1):
        counts = [0] * (n + 1)
        word: list[int] = []

        def rec():
            r = len(word)
            if r == n:
                used = set(word)
                top = max(word)
                if len(used) == top:
                    counts[top] += 1
                return
            for c in range(1, n + 1):
                ok = True
                for p in range(r - 1, -1, -1):
                    if word[p] == c:
                        ok = any(word[q] < c for q in range(p + 1, r))
                        break
                if ok:
                    word.append(c)
                    rec()
                    word.pop()

        rec()
        for i in range(1, n_max + 1):
            a[(i, n)] = counts[i] if i <= n else 0
    return CoefficientTable(n_max, n_max, a)


def harmonic_sums(n: int) -> tuple[Fraction, Fraction]:
    """``(sum 1/i, sum_{i<j} 1/(ij))`` over ``1..n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    z1 = Fraction(0)
    z11 = Fraction(0)
    for j in range(1, n + 1):
        z11 += z1 / j
        z1 += Fraction(1, j)
    return z1, z11


def a_closed(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """Closed forms for ``a[n, n]``, ``a[n-1, n]`` and ``a[n-2, n]``."""
    if n < 3:
        raise ValueError("closed forms need n >= 3")
    z1, z11 = harmonic_sums(n)
    f = math.factorial(n)
    top = Fraction(f)
    second = f * (Fraction(n + 1, 2) - z1)
    third = f * (z11 - Fraction(n, 2) * z1 + Fraction((3 * n - 2) * (n * n + n + 6), 24 * n))
    return top, second, third


def riordan_matrix(size: int) -> list[list[int]]:
    """``M[k][l] = C(l, k - l)`` with 1-based indices stored 0-based."""
    return [[math.comb(l + 1, k - l) if k >= l else 0 for l in range(size)] for k in range(size)]


def _matmul(a, b):
    n = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(n) if a[i][t] and b[t][j]) for j in range(n)] for i in range(n)]


def matrix_log(m: list[list[int]]) -> list[list[Fraction]]:
    """Logarithm of a unipotent lower-triangular matrix by the finite series."""
    n = len(m)
    nil = [[Fraction(m[i][j] - (1 if i == j else 0)) for j in range(n)] for i in range(n)]
    out = [[Fraction(0)] * n for _ in range(n)]
    power = nil
    for j in range(1, n):
        sign = Fraction((-1) ** (j + 1), j)
        for r in range(n):
            for c in range(n):
                if power[r][c]:
                    out[r][c] += sign * power[r][c]
        power = _matmul(power, nil)
    return out


def riordan_P(n_max: int, size: int | None = None) -> list[RationalPolynomial]:
    """``P_0 .. P_{n_max}`` as the first column of ``exp(X log M)``."""
    if size is None:
        size = n_max + 1
    if size < n_max + 1:
        raise ValueError("truncation size must exceed n_max")
    log = matrix_log(riordan_matrix(size))
    vec = [Fraction(1)] + [Fraction(0)] * (size - 1)
    # column j holds log^i e_1 / i!, i.e. the X^i coefficients
    coeffs = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for r in range(size):
            coeffs[r][i] = vec[r]
        vec = [
            sum((log[r][t] * vec[t] for t in range(size) if log[r][t]), Fraction(0)) / (i + 1)
            for r in range(size)
        ]
    return [RationalPolynomial(coeffs[r]) for r in range(n_max + 1)]


@lru_cache(maxsize=None)
def lambda_ncp_Jn(n: int) -> Fraction:
    """Linear coefficient of ``P_n`` by its one-term recursion in ``n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return Fraction(1)
    total = Fraction(0)
    for i in range(1, n // 2 + 1):
        total += math.comb(n - i + 1, i + 1) * lambda_ncp_Jn(n - i)
    return -total / (n - 1)


def D_sequence(n: int) -> tuple[int, ...]:
    """Colouring of ``1 .. 2^n - 1`` interleaving ``n`` with the previous sequence."""
    if n < 1:
        raise ValueError("n must be at least 1")
    seq: tuple[int, ...] = (1,)
    for m in range(2, n + 1):
        out = [m]
        for d in seq:
            out += [d, m]
        seq = tuple(out)
    return seq


def chromatic_number_Jk(k: int) -> int:
    """Least ``n`` with ``2^n - 1 >= k``."""
    return max(k, 0).bit_length()


def zero_threshold_check(n: int, k_max: int, table: CoefficientTable | None = None) -> dict[str, Any]:
    """Check ``P_k(n) = 0`` exactly when ``k > 2^n - 1`` and validate the witness colouring."""
    if table is None or table.n_max < k_max:
        table = a_table(k_max)
    values = {}
    mismatches = []
    for k in range(1, k_max + 1):
        v = sum(table[(i, k)] * math.comb(n, i) for i in range(1, min(n, table.i_max) + 1))
        values[k] = v
        if (v == 0) != (k > 2 ** n - 1):
            mismatches.append(k)
    witness = D_sequence(n)
    witness_ok = len(witness) == 2 ** n - 1 and max(witness) == n and is_valid_coloration(J(len(witness)), witness)
    chromatic = {k: chromatic_number_Jk(k) for k in range(1, k_max + 1)}
    return {
        "n": n,
        "k_max": k_max,
        "values": values,
        "mismatches": mismatches,
        "witness": witness,
        "witness_valid": witness_ok,
        "chromatic_numbers": chromatic,
        "ok": not mismatches and witness_ok,
    }
