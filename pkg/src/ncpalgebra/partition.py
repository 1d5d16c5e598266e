"""Noncrossing partitions of ``[n]`` and their block combinatorics.

Blocks are always held in canonical form: each block is an ascending tuple,
and blocks are sorted by their minimum.  Functions that talk about "a block"
take its canonical index, so ideals and equivalences are sets of indices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import guards
from .errors import Crossing, NotAPartition, NotContractible, ParseError


class NoncrossingPartition:
    """An immutable noncrossing partition of ``{1, ..., n}``.

    >>> pi = NoncrossingPartition([[3], [1, 4], [2]])
    >>> pi.blocks
    ((1, 4), (2,), (3,))
    >>> str(pi), pi.n, len(pi)
    ('1,4|2|3', 4, 3)
    """

    __slots__ = ("blocks", "n", "_hash", "_text")

    def __init__(self, blocks: Iterable[Iterable[int]]):
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0))
        legs = [x for b in canon for x in b]
        if any(len(b) == 0 for b in canon):
            raise NotAPartition("empty block")
        n = len(legs)
        if sorted(legs) != list(range(1, n + 1)):
            seen = set(legs)
            if len(seen) != n:
                raise NotAPartition(f"repeated elements in {list(canon)}")
            missing = sorted(set(range(1, max(legs) + 1)) - seen)
            raise NotAPartition(f"elements {missing} missing from {list(canon)}")
        if not blocks_noncrossing(canon, n):
            raise Crossing(f"blocks {list(canon)} cross")
        self._set(canon, n)

    def _set(self, blocks: tuple[tuple[int, ...], ...], n: int) -> None:
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_hash", hash(blocks))
        object.__setattr__(self, "_text", None)

    @classmethod
    def trusted(cls, blocks: tuple[tuple[int, ...], ...], n: int | None = None) -> NoncrossingPartition:
        """Build from blocks already known to be canonical and noncrossing."""
        self = cls.__new__(cls)
        if n is None:
            n = sum(len(b) for b in blocks)
        self._set(blocks, n)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("NoncrossingPartition is immutable")

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NoncrossingPartition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if self._text is None:
            object.__setattr__(self, "_text", "|".join(",".join(map(str, b)) for b in self.blocks))
        return self._text

    def __repr__(self) -> str:
        return f"NoncrossingPartition({str(self)!r})"

    def __reduce__(self):
        return (parse_partition, (str(self),))

    @property
    def key(self) -> tuple[int, int, str]:
        """Sort key used to order factors inside a monomial."""
        return (self.n, len(self.blocks), str(self))

    def is_base(self) -> bool:
        """True when no block is nested inside another one."""
        return all(p is None for p in parents(self))


def blocks_noncrossing(blocks: Sequence[Sequence[int]], n: int) -> bool:
    labels = [0] * n
    for idx, b in enumerate(blocks):
        for x in b:
            labels[x - 1] = idx
    return labels_noncrossing(labels)


def labels_noncrossing(labels: Sequence[int]) -> bool:
    """Whether the set partition given by a label word avoids ``a b a b``."""
    last = {}
    for pos, c in enumerate(labels):
        last[c] = pos
    stack: list[int] = []
    seen = set()
    for pos, c in enumerate(labels):
        if c in seen:
            if stack[-1] != c:
                return False
        else:
            seen.add(c)
            stack.append(c)
        if last[c] == pos:
            stack.pop()
    return True


def parse_partition(text: str) -> NoncrossingPartition:
    """Parse ``"1,4|2|3"``; whitespace is ignored and ``""`` is the empty partition."""
    compact = "".join(text.split())
    if not compact:
        return EMPTY
    blocks = []
    for chunk in compact.split("|"):
        if not chunk:
            raise ParseError(f"empty block in {text!r}")
        try:
            block = [int(tok) for tok in chunk.split(",")]
        except ValueError:
            raise ParseError(f"bad block {chunk!r} in {text!r}") from None
        if any(x < 1 for x in block):
            raise ParseError(f"elements must be positive integers in {text!r}")
        if len(set(block)) != len(block):
            raise NotAPartition(f"repeated element in block {chunk!r}")
        if block != sorted(block):
            raise ParseError(f"block {chunk!r} is not ascending")
        blocks.append(block)
    return NoncrossingPartition(blocks)


EMPTY = NoncrossingPartition.trusted((), 0)


def J(n: int) -> NoncrossingPartition:
    """The partition of ``[n]`` into singletons."""
    return NoncrossingPartition.trusted(tuple((i,) for i in range(1, n + 1)), n)


def one_block(n: int) -> NoncrossingPartition:
    return NoncrossingPartition.trusted((tuple(range(1, n + 1)),), n)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[NoncrossingPartition, ...]:
    # Element i either opens a new block or joins an open block on the stack;
    # joining closes every block opened above it, which is exactly what
    # keeps the result noncrossing.
    out: list[NoncrossingPartition] = []
    blocks: list[list[int]] = []
    stack: list[int] = []
    trusted = NoncrossingPartition.trusted

    def rec(i: int) -> None:
        if i > n:
            out.append(trusted(tuple(map(tuple, blocks)), n))
            return
        blocks.append([i])
        stack.append(len(blocks) - 1)
        rec(i + 1)
        stack.pop()
        blocks.pop()
        for j in range(len(stack) - 1, -1, -1):
            above = stack[j + 1:]
            del stack[j + 1:]
            target = blocks[stack[j]]
            target.append(i)
            rec(i + 1)
            target.pop()
            stack.extend(above)

    rec(1)
    return tuple(out)


def enumerate_ncp(n: int, blocks: int | None = None) -> tuple[NoncrossingPartition, ...]:
    """All noncrossing partitions of ``[n]``, optionally only those with ``blocks`` blocks."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    guards.check(n, guards.GUARDS.enumerate_legs, "legs")
    everything = _enumerate(n)
    if blocks is None:
        return everything
    return tuple(p for p in everything if len(p) == blocks)


def nesting_leq(pi: NoncrossingPartition, b: int, b2: int) -> bool:
    """``b <= b2`` for the nesting order: block ``b2`` sits inside ``[min b, max b]``."""
    outer, inner = pi.blocks[b], pi.blocks[b2]
    return outer[0] <= inner[0] and inner[-1] <= outer[-1]


@lru_cache(maxsize=4096)
def parents(pi: NoncrossingPartition) -> tuple[int | None, ...]:
    """Index of the innermost block strictly enclosing each block (``None`` at the base)."""
    out: list[int | None] = []
    blocks = pi.blocks
    for j, b in enumerate(blocks):
        parent = None
        for i in range(j - 1, -1, -1):
            if blocks[i][-1] > b[-1]:
                parent = i
                break
        out.append(parent)
    return tuple(out)


def base(pi: NoncrossingPartition) -> tuple[int, ...]:
    """Indices of the blocks that are minimal for the nesting order."""
    return tuple(i for i, p in enumerate(parents(pi)) if p is None)


def ideals(pi: NoncrossingPartition) -> list[frozenset[int]]:
    """All block sets closed upward for the nesting order, ``∅`` first."""
    k = len(pi)
    guards.check(k, guards.GUARDS.ideal_blocks, "blocks")
    par = parents(pi)
    out: list[frozenset[int]] = []
    chosen = [False] * k

    # parents precede children in canonical order, so one pass decides each block
    def rec(i: int) -> None:
        if i == k:
            out.append(frozenset(j for j in range(k) if chosen[j]))
            return
        p = par[i]
        if p is not None and chosen[p]:
            chosen[i] = True
            rec(i + 1)
            chosen[i] = False
            return
        rec(i + 1)
        chosen[i] = True
        rec(i + 1)
        chosen[i] = False

    rec(0)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def restrict_class(pi: NoncrossingPartition, subset: Iterable[int]) -> NoncrossingPartition:
    """The blocks indexed by ``subset``, relabelled increasingly as one partition."""
    idx = sorted(subset)
    chosen = [pi.blocks[i] for i in idx]
    legs = sorted(x for b in chosen for x in b)
    rank = {x: r for r, x in enumerate(legs, 1)}
    return NoncrossingPartition.trusted(tuple(tuple(rank[x] for x in b) for b in chosen), len(legs))


def restrict_blocks(pi: NoncrossingPartition, subset: Iterable[int]) -> tuple[NoncrossingPartition, ...]:
    """Split the legs covered by ``subset`` into maximal runs and relabel each run.

    Each run must be a union of chosen blocks (true for ideals and for the
    blocks enclosed by a given block); otherwise ``ValueError`` is raised.
    """
    idx = sorted(subset)
    if not idx:
        return ()
    chosen = [pi.blocks[i] for i in idx]
    legs = sorted(x for b in chosen for x in b)
    runs: list[tuple[int, int]] = []
    start = prev = legs[0]
    for x in legs[1:]:
        if x != prev + 1:
            runs.append((start, prev))
            start = x
        prev = x
    runs.append((start, prev))
    factors = []
    k = 0
    for lo, hi in runs:
        group = []
        while k < len(chosen) and chosen[k][0] <= hi:
            if chosen[k][-1] > hi:
                raise ValueError(f"block {chosen[k]} straddles the run [{lo}, {hi}]")
            group.append(tuple(x - lo + 1 for x in chosen[k]))
            k += 1
        factors.append(NoncrossingPartition.trusted(tuple(group), hi - lo + 1))
    return tuple(factors)


@dataclass(frozen=True)
class BlockEquivalence:
    """A set partition of the block indices of some noncrossing partition."""

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if any(len(c) == 0 for c in self.classes):
            raise ValueError("empty class")
        flat = [i for c in self.classes for i in c]
        if len(flat) != len(set(flat)):
            raise ValueError("classes overlap")

    def __len__(self) -> int:
        return len(self.classes)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> BlockEquivalence:
        groups: dict[int, list[int]] = {}
        for i, c in enumerate(labels):
            groups.setdefault(c, []).append(i)
        return cls(tuple(sorted(tuple(g) for g in groups.values())))

    @classmethod
    def discrete(cls, k: int) -> BlockEquivalence:
        return cls(tuple((i,) for i in range(k)))

    @classmethod
    def coarsest(cls, k: int) -> BlockEquivalence:
        return cls((tuple(range(k)),) if k else ())


def _restricted_growth(k: int):
    if k == 0:
        yield ()
        return
    word = [0] * k

    def rec(i: int, top: int):
        if i == k:
            yield tuple(word)
            return
        for c in range(top + 2):
            word[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(1, 0)


def set_partitions(k: int):
    """All set partitions of ``range(k)``, as restricted growth words."""
    return _restricted_growth(k)


def _merge(pi: NoncrossingPartition, classes: Sequence[Sequence[int]]) -> NoncrossingPartition:
    merged = sorted(tuple(sorted(x for i in c for x in pi.blocks[i])) for c in classes)
    return NoncrossingPartition.trusted(tuple(merged), pi.n)


def is_contractible(pi: NoncrossingPartition, eq: BlockEquivalence) -> bool:
    labels = [0] * pi.n
    for c, members in enumerate(eq.classes):
        for i in members:
            for x in pi.blocks[i]:
                labels[x - 1] = c
    return labels_noncrossing(labels)


def quotient(pi: NoncrossingPartition, eq: BlockEquivalence) -> NoncrossingPartition:
    """Fuse the blocks of each class; raises :class:`NotContractible` on a crossing."""
    if sorted(i for c in eq.classes for i in c) != list(range(len(pi))):
        raise ValueError("equivalence does not cover the blocks")
    if not is_contractible(pi, eq):
        raise NotContractible(f"{eq.classes} does not contract {pi}")
    return _merge(pi, eq.classes)


@lru_cache(maxsize=8192)
def contractible_equivalences(pi: NoncrossingPartition) -> tuple[BlockEquivalence, ...]:
    """Every equivalence on the blocks whose fused partition is still noncrossing."""
    k = len(pi)
    guards.check(k, guards.GUARDS.equivalence_blocks, "blocks")
    owner = [0] * pi.n
    for i, b in enumerate(pi.blocks):
        for x in b:
            owner[x - 1] = i
    out = []
    for word in _restricted_growth(k):
        if labels_noncrossing([word[o] for o in owner]):
            out.append(BlockEquivalence.from_labels(word))
    return tuple(out)


def adjacency_classes(pi: NoncrossingPartition) -> list[tuple[int, ...]]:
    """Classes of the closure of ``max(b) + 1 == min(b')``, sorted by first index."""
    k = len(pi)
    root = list(range(k))

    def find(i):
        while root[i] != i:
            root[i] = root[root[i]]
            i = root[i]
        return i

    starts = {b[0]: i for i, b in enumerate(pi.blocks)}
    for i, b in enumerate(pi.blocks):
        j = starts.get(b[-1] + 1)
        if j is not None:
            root[find(j)] = find(i)
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    return sorted(tuple(g) for g in groups.values())


def partition_profile(pi: NoncrossingPartition) -> tuple[int, ...]:
    """``(p_1, ..., p_n)`` where ``p_i`` counts the blocks of size ``i``."""
    counts = [0] * pi.n
    for b in pi.blocks:
        counts[len(b) - 1] += 1
    return tuple(counts)


def _merged_pair(pi: NoncrossingPartition, i: int, j: int) -> NoncrossingPartition:
    classes = [(i, j)] + [(m,) for m in range(len(pi)) if m not in (i, j)]
    return _merge(pi, classes)


def close_pairs(pi: NoncrossingPartition) -> list[tuple[int, int, NoncrossingPartition]]:
    """Pairs ``(b, b')`` with ``max b < min b'`` in the same adjacency class."""
    cls_of = {}
    for c, members in enumerate(adjacency_classes(pi)):
        for m in members:
            cls_of[m] = c
    out = []
    for i, j in itertools.permutations(range(len(pi)), 2):
        if pi.blocks[i][-1] < pi.blocks[j][0] and cls_of[i] == cls_of[j]:
            out.append((i, j, _merged_pair(pi, i, j)))
    return out


def nested_pairs(pi: NoncrossingPartition) -> list[tuple[int, int, NoncrossingPartition]]:
    """Covering pairs ``b < b'`` of the nesting order."""
    return [(p, j, _merged_pair(pi, p, j)) for j, p in enumerate(parents(pi)) if p is not None]


def linear_extension_count(pi: NoncrossingPartition) -> int:
    """Linear extensions of the nesting forest, by the hook-length formula."""
    k = len(pi)
    hooks = 1
    for i in range(k):
        hooks *= sum(1 for j in range(k) if nesting_leq(pi, i, j))
    return math.factorial(k) // hooks


def linear_extension_count_bruteforce(pi: NoncrossingPartition) -> int:
    k = len(pi)
    guards.check(k, guards.GUARDS.linext_bruteforce_blocks, "blocks")
    rel = [(i, j) for i in range(k) for j in range(k) if i != j and nesting_leq(pi, i, j)]
    total = 0
    for perm in itertools.permutations(range(k)):
        if all(perm[i] <= perm[j] for i, j in rel):
            total += 1
    return total
