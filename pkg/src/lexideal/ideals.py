"""Squarefree monomial ideals and their decompositions into monomial primes."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import AmbientMismatch, InputError, NotAPermutation, ZeroOrUnitIdeal
from .monomials import (
    Ring,
    SqfMonomial,
    canonical_key,
    full_mask,
    mask_of,
    support_of,
)


def minimal_masks(masks: Iterable[int]) -> frozenset[int]:
    """Divisibility-minimal elements (inclusion-minimal supports)."""
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count):
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return frozenset(kept)


def minimal_transversals(masks: Iterable[int]) -> frozenset[int]:
    """Inclusion-minimal sets meeting every mask (Berge's incremental method).

    For squarefree generators these are exactly the supports of the minimal
    primes of the ideal.
    """
    covers = {0}
    for g in sorted(set(masks), key=int.bit_count):
        if g == 0:
            return frozenset()
        new = set()
        for T in covers:
            if T & g:
                new.add(T)
                continue
            rest = g
            while rest:
                bit = rest & -rest
                new.add(T | bit)
                rest ^= bit
        covers = minimal_masks(new)
    return frozenset(covers)


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal generated by squarefree monomials; ``masks`` is its minimal system G(I).

    The zero ideal has no generators; the unit ideal has the single
    generator ``1`` (empty support).
    """

    ring: Ring
    masks: frozenset[int]

    @classmethod
    def from_masks(cls, ring: Ring, masks: Iterable[int]) -> MonomialIdeal:
        masks = list(masks)
        top = full_mask(ring.n)
        for m in masks:
            if m & ~top:
                raise InputError(f"generator {support_of(m)} uses variables beyond x_{ring.n}")
        return cls(ring, minimal_masks(masks))

    @classmethod
    def from_supports(cls, ring: Ring, supports: Iterable[Iterable[int]]) -> MonomialIdeal:
        return minimalize([SqfMonomial.from_support(ring, s) for s in supports], ring)

    @property
    def gens(self) -> list[SqfMonomial]:
        return [SqfMonomial(self.ring, m) for m in self.sorted_masks()]

    def sorted_masks(self) -> list[int]:
        return sorted(self.masks, key=canonical_key)

    @property
    def is_zero(self) -> bool:
        return not self.masks

    @property
    def is_unit(self) -> bool:
        return 0 in self.masks

    @property
    def degrees(self) -> list[int]:
        return sorted({m.bit_count() for m in self.masks})

    def is_equigenerated(self, d: int | None = None) -> bool:
        degs = self.degrees
        return len(degs) == 1 and (d is None or degs[0] == d)

    @property
    def support_mask(self) -> int:
        out = 0
        for m in self.masks:
            out |= m
        return out

    def __contains__(self, m: SqfMonomial) -> bool:
        return contains(self, m)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def to_json(self) -> dict:
        return {"n": self.ring.n, "gens": [list(support_of(m)) for m in self.sorted_masks()]}

    @classmethod
    def from_json(cls, data: dict) -> MonomialIdeal:
        return cls.from_supports(Ring(data["n"]), data["gens"])


def _check_ring(ring: Ring, other: Ring) -> None:
    if ring != other:
        raise AmbientMismatch(f"ring with {other.n} variables vs ring with {ring.n} variables")


def minimalize(gens: Iterable[SqfMonomial], ring: Ring | None = None) -> MonomialIdeal:
    gens = list(gens)
    if ring is None:
        if not gens:
            raise InputError("cannot infer the ring of an empty generator set")
        ring = gens[0].ring
    for g in gens:
        _check_ring(ring, g.ring)
    return MonomialIdeal(ring, minimal_masks(g.mask for g in gens))


def zero_ideal(ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, frozenset())


def unit_ideal(ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, frozenset({0}))


def squarefree_power(ring: Ring, q: int) -> MonomialIdeal:
    """``I_{n,q}``: all squarefree monomials of degree ``q``."""
    return MonomialIdeal(ring, frozenset(mask_of(c) for c in combinations(range(1, ring.n + 1), q)))


def contains(I: MonomialIdeal, m: SqfMonomial) -> bool:
    _check_ring(I.ring, m.ring)
    return any(g & ~m.mask == 0 for g in I.masks)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_ring(I.ring, J.ring)
    return MonomialIdeal(I.ring, minimal_masks(a | b for a in I.masks for b in J.masks))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_ring(I.ring, J.ring)
    return MonomialIdeal(I.ring, minimal_masks(I.masks | J.masks))


def colon(I: MonomialIdeal, m: SqfMonomial) -> MonomialIdeal:
    """``I : m``, generated by ``g / gcd(g, m)``."""
    _check_ring(I.ring, m.ring)
    return MonomialIdeal(I.ring, minimal_masks(g & ~m.mask for g in I.masks))


def graded_masks(masks: Iterable[int], n: int, j: int) -> frozenset[int]:
    out = set()
    top = full_mask(n)
    for g in masks:
        k = j - g.bit_count()
        if k < 0:
            continue
        free = support_of(top & ~g)
        for extra in combinations(free, k):
            out.add(g | mask_of(extra))
    return frozenset(out)


def graded_component(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """Ideal generated by the squarefree monomials of degree ``j`` lying in ``I``.

    This is the squarefree part ``I_[j]`` of ``I_<j>``; for squarefree ideals
    componentwise linearity can be tested on these parts alone.
    """
    return MonomialIdeal(I.ring, graded_masks(I.masks, I.ring.n, j))


def minimal_primes_masks(I: MonomialIdeal) -> frozenset[int]:
    if I.is_zero or I.is_unit:
        raise ZeroOrUnitIdeal("minimal primes need a proper nonzero ideal")
    return minimal_transversals(I.masks)


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """``I^vee``: generated by ``x_A`` over the minimal primes ``P_A`` of ``I``."""
    return MonomialIdeal(I.ring, minimal_primes_masks(I))


def has_linear_quotients(I: MonomialIdeal, order: list[SqfMonomial]) -> bool:
    """Check the given generator order: every colon ``(m_1..m_{t-1}) : m_t`` is variable-generated."""
    masks = []
    for m in order:
        _check_ring(I.ring, m.ring)
        masks.append(m.mask)
    if len(masks) != len(set(masks)) or set(masks) != set(I.masks):
        raise NotAPermutation("order must list each minimal generator exactly once")
    for t in range(1, len(masks)):
        mt = masks[t]
        quotient = minimal_masks(masks[k] & ~mt for k in range(t))
        if any(q.bit_count() != 1 for q in quotient):
            return False
    return True


# ---------------------------------------------------------------------------
# decompositions


@dataclass(frozen=True)
class PrimeSupport:
    """The monomial prime ``P_A = (x_i : i in A)``."""

    ring: Ring
    mask: int

    @property
    def vars(self) -> tuple[int, ...]:
        return support_of(self.mask)

    @property
    def height(self) -> int:
        return self.mask.bit_count()

    def __str__(self) -> str:
        return "P{" + ",".join(map(str, self.vars)) + "}"


@dataclass(frozen=True)
class Decomposition:
    """An irredundant intersection of monomial primes, stored by their supports."""

    ring: Ring
    components: frozenset[int]

    def __post_init__(self):
        comps = self.components
        if 0 in comps:
            raise InputError("a prime component needs at least one variable")
        if minimal_masks(comps) != comps:
            raise InputError("components do not form an antichain")

    @classmethod
    def minimal(cls, ring: Ring, components: Iterable[int]) -> Decomposition:
        """Keep only the inclusion-minimal primes of a (possibly redundant) family."""
        return cls(ring, minimal_masks(components))

    @property
    def primes(self) -> list[PrimeSupport]:
        return [PrimeSupport(self.ring, m) for m in sorted(self.components, key=canonical_key)]

    @property
    def heights(self) -> list[int]:
        return sorted(m.bit_count() for m in self.components)

    def ideal(self) -> MonomialIdeal:
        """Re-intersect the components."""
        if not self.components:
            return zero_ideal(self.ring)
        return MonomialIdeal(self.ring, minimal_transversals(self.components))

    def to_json(self) -> dict:
        return {"components": [list(support_of(m)) for m in sorted(self.components, key=canonical_key)]}

    def __str__(self) -> str:
        return " & ".join(str(p) for p in self.primes) or "(0)"


def decompose(I: MonomialIdeal) -> Decomposition:
    """Minimal primary decomposition of a squarefree ideal (generic path)."""
    return Decomposition(I.ring, minimal_primes_masks(I))
