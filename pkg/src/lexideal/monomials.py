"""Squarefree monomials, lex order, shadows and lexsegments.

A squarefree monomial in ``k[x_1..x_n]`` is identified with its support.
Internally a support is an ``int`` bitmask with bit ``i - 1`` standing for
``x_i``; everything public is 1-based.

Lex order uses ``x_1 > x_2 > ... > x_n`` and is only defined between
monomials of the same degree.  Listing supports as ascending tuples, the
lex-decreasing order of a degree stratum is exactly the lexicographic
order of the tuples (``x1x2 > x1x3 > x1x4 > x2x3 ...``), which is what
``itertools.combinations`` produces.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .errors import (
    AmbientMismatch,
    DegreeMismatch,
    DegreeOutOfRange,
    EmptySegment,
    IndexOutOfRange,
    InputError,
    MixedDegrees,
    NoPredecessor,
    NoSuccessor,
)

MAX_VARIABLES = 63


# ---------------------------------------------------------------------------
# bitmask helpers (shared by the other modules)


def mask_of(support: Iterable[int]) -> int:
    m = 0
    for i in support:
        m |= 1 << (i - 1)
    return m


def support_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def lowest(mask: int) -> int:
    """Smallest variable index in a nonzero mask."""
    return (mask & -mask).bit_length()


def highest(mask: int) -> int:
    return mask.bit_length()


def lex_gt(a: int, b: int) -> bool:
    """``a >_lex b`` for equal-degree masks."""
    diff = a ^ b
    return bool(diff and a & (diff & -diff))


def lex_ge(a: int, b: int) -> bool:
    return a == b or lex_gt(a, b)


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: by degree, then lex-decreasing within a degree."""
    return mask.bit_count(), support_of(mask)


def stratum_masks(n: int, d: int) -> list[int]:
    return [mask_of(c) for c in combinations(range(1, n + 1), d)]


def succ_mask(mask: int, n: int) -> int | None:
    """Lex-greatest monomial of the same degree strictly below ``mask``."""
    s = list(support_of(mask))
    d = len(s)
    for i in range(d - 1, -1, -1):
        if s[i] < n - d + i + 1:
            s[i] += 1
            for k in range(i + 1, d):
                s[k] = s[k - 1] + 1
            return mask_of(s)
    return None


def pred_mask(mask: int, n: int) -> int | None:
    """Lex-least monomial of the same degree strictly above ``mask``."""
    s = list(support_of(mask))
    d = len(s)
    for i in range(d - 1, -1, -1):
        prev = s[i - 1] if i else 0
        if s[i] > prev + 1:
            s[i] -= 1
            for k in range(i + 1, d):
                s[k] = n - d + k + 1
            return mask_of(s)
    return None


def stratum_rank(mask: int, n: int) -> int:
    """Number of same-degree monomials lex-greater than ``mask``."""
    s = support_of(mask)
    d = len(s)
    r = 0
    prev = 0
    for i, si in enumerate(s):
        for c in range(prev + 1, si):
            r += comb(n - c, d - i - 1)
        prev = si
    return r


def segment_masks(u: int, v: int, n: int) -> list[int]:
    """Lex-decreasing list ``u >= w >= v``; empty if ``u < v``."""
    if u.bit_count() != v.bit_count():
        raise ValueError("segment endpoints must have equal degree")
    if u != v and not lex_gt(u, v):
        return []
    out = [u]
    w = u
    while w != v:
        w = succ_mask(w, n)
        out.append(w)
    return out


def shadow_masks(masks: Iterable[int], n: int) -> set[int]:
    out = set()
    for w in masks:
        free = full_mask(n) & ~w
        while free:
            bit = free & -free
            out.add(w | bit)
            free ^= bit
    return out


def is_segment_masks(masks: set[int] | frozenset[int], n: int) -> bool:
    """Contiguity of an equigenerated nonempty set within its stratum."""
    ranks = [stratum_rank(m, n) for m in masks]
    return max(ranks) - min(ranks) + 1 == len(masks)


# ---------------------------------------------------------------------------
# public types


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class Ring:
    """The polynomial ring ``k[x_1..x_n]``; only the number of variables matters."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not 2 <= self.n <= MAX_VARIABLES:
            raise InputError(f"number of variables must be in 2..{MAX_VARIABLES}, got {self.n!r}")

    def monomial(self, *support: int) -> SqfMonomial:
        return SqfMonomial.from_support(self, support)

    def var(self, i: int) -> SqfMonomial:
        return SqfMonomial.from_support(self, (i,))

    def one(self) -> SqfMonomial:
        return SqfMonomial(self, 0)

    def top(self) -> SqfMonomial:
        return SqfMonomial(self, full_mask(self.n))


@functools.total_ordering
@dataclass(frozen=True)
class SqfMonomial:
    """A squarefree monomial, stored as a support bitmask over ``ring``.

    The comparison operators implement lex order and refuse to compare
    monomials of different degrees.
    """

    ring: Ring
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.ring.n:
            raise IndexOutOfRange(f"support exceeds x_{self.ring.n}")

    @classmethod
    def from_support(cls, ring: Ring, support: Iterable[int]) -> SqfMonomial:
        support = list(support)
        for i in support:
            if not isinstance(i, int) or not 1 <= i <= ring.n:
                raise IndexOutOfRange(f"variable index {i!r} outside 1..{ring.n}")
        if len(set(support)) != len(support):
            raise InputError(f"repeated variable in {support}: not squarefree")
        return cls(ring, mask_of(support))

    @property
    def support(self) -> tuple[int, ...]:
        return support_of(self.mask)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def min(self) -> int:
        if not self.mask:
            raise InputError("the unit monomial has no variables")
        return lowest(self.mask)

    @property
    def max(self) -> int:
        if not self.mask:
            raise InputError("the unit monomial has no variables")
        return highest(self.mask)

    def complement(self) -> SqfMonomial:
        return SqfMonomial(self.ring, full_mask(self.ring.n) & ~self.mask)

    def divides(self, other: SqfMonomial) -> bool:
        _same_ring(self, other)
        return self.mask & ~other.mask == 0

    def __mul__(self, other: SqfMonomial) -> SqfMonomial:
        _same_ring(self, other)
        if self.mask & other.mask:
            raise InputError(f"{self} * {other} is not squarefree")
        return SqfMonomial(self.ring, self.mask | other.mask)

    def __truediv__(self, other: SqfMonomial) -> SqfMonomial:
        if not other.divides(self):
            raise InputError(f"{other} does not divide {self}")
        return SqfMonomial(self.ring, self.mask & ~other.mask)

    def lcm(self, other: SqfMonomial) -> SqfMonomial:
        _same_ring(self, other)
        return SqfMonomial(self.ring, self.mask | other.mask)

    def __lt__(self, other: SqfMonomial) -> bool:
        return lex_compare(self, other) is Ordering.LT

    def __str__(self) -> str:
        return "".join(f"x{i}" for i in self.support) or "1"

    def __repr__(self) -> str:
        return f"SqfMonomial(n={self.ring.n}, {list(self.support)})"

    def to_json(self) -> list[int]:
        return list(self.support)


def _same_ring(*items) -> Ring:
    ring = items[0].ring
    for it in items[1:]:
        if it.ring != ring:
            raise AmbientMismatch(f"ring with {it.ring.n} variables vs ring with {ring.n} variables")
    return ring


# ---------------------------------------------------------------------------
# operations


def lex_compare(a: SqfMonomial, b: SqfMonomial) -> Ordering:
    _same_ring(a, b)
    if a.degree != b.degree:
        raise DegreeMismatch(f"lex order compares equal degrees only ({a} vs {b})")
    if a.mask == b.mask:
        return Ordering.EQ
    return Ordering.GT if lex_gt(a.mask, b.mask) else Ordering.LT


def succ(m: SqfMonomial) -> SqfMonomial:
    w = succ_mask(m.mask, m.ring.n)
    if w is None:
        raise NoSuccessor(f"{m} is the lex-smallest monomial of degree {m.degree}")
    return SqfMonomial(m.ring, w)


def pred(m: SqfMonomial) -> SqfMonomial:
    w = pred_mask(m.mask, m.ring.n)
    if w is None:
        raise NoPredecessor(f"{m} is the lex-largest monomial of degree {m.degree}")
    return SqfMonomial(m.ring, w)


def stratum(ring: Ring, d: int) -> list[SqfMonomial]:
    """All squarefree monomials of degree ``d``, lex-decreasing."""
    if not 0 <= d <= ring.n:
        raise DegreeOutOfRange(f"degree {d} outside 0..{ring.n}")
    return [SqfMonomial(ring, m) for m in stratum_masks(ring.n, d)]


def stratum_max(ring: Ring, d: int) -> SqfMonomial:
    return SqfMonomial(ring, full_mask(d))


def stratum_min(ring: Ring, d: int) -> SqfMonomial:
    return SqfMonomial(ring, full_mask(ring.n) & ~full_mask(ring.n - d))


def lexsegment(u: SqfMonomial, v: SqfMonomial) -> list[SqfMonomial]:
    """``L(u, v)``: the lex-decreasing run from ``u`` down to ``v``."""
    ring = _same_ring(u, v)
    if u.degree != v.degree:
        raise DegreeMismatch(f"segment endpoints {u} and {v} differ in degree")
    if lex_gt(v.mask, u.mask):
        raise EmptySegment(f"{u} <lex {v}")
    return [SqfMonomial(ring, w) for w in segment_masks(u.mask, v.mask, ring.n)]


def initial_segment(v: SqfMonomial) -> list[SqfMonomial]:
    return lexsegment(stratum_max(v.ring, v.degree), v)


def final_segment(u: SqfMonomial) -> list[SqfMonomial]:
    return lexsegment(u, stratum_min(u.ring, u.degree))


def shadow(T: Iterable[SqfMonomial]) -> set[SqfMonomial]:
    T = list(T)
    if not T:
        return set()
    ring = _same_ring(*T)
    return {SqfMonomial(ring, w) for w in shadow_masks((m.mask for m in T), ring.n)}


def is_lexsegment_set(T: Iterable[SqfMonomial]) -> bool:
    T = set(T)
    if not T:
        raise InputError("is_lexsegment_set needs a nonempty set")
    ring = _same_ring(*T)
    if len({m.degree for m in T}) != 1:
        raise MixedDegrees("lexsegment sets are equigenerated")
    return is_segment_masks({m.mask for m in T}, ring.n)


def iter_submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    t = mask
    while True:
        yield t
        if t == 0:
            return
        t = (t - 1) & mask
