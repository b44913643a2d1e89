"""Simplicial complexes on ``[n]`` and the Stanley-Reisner correspondence.

Two degenerate complexes are kept apart on purpose: the *void* complex (no
faces at all, Stanley-Reisner ideal ``(1)``) and the *irrelevant* complex
``{emptyset}`` (ideal ``(x_1, ..., x_n)``).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InputError, NoFacesOfThatDimension, TooLarge, UnitIdeal
from .ideals import Decomposition, MonomialIdeal, minimal_transversals
from .monomials import Ring, canonical_key, full_mask, iter_submasks, mask_of, support_of

GENERIC_MAX_VARIABLES = 25
DEFAULT_FACE_GUARD = 1 << 20


def face_guard() -> int:
    return int(os.environ.get("LEXIDEAL_GUARD_FACES", DEFAULT_FACE_GUARD))


def maximal_masks(masks: Iterable[int]) -> frozenset[int]:
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count, reverse=True):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    ring: Ring
    facets: frozenset[int]

    def __post_init__(self):
        if maximal_masks(self.facets) != self.facets:
            raise InputError("facets must be pairwise incomparable")
        if any(f >> self.ring.n for f in self.facets):
            raise InputError(f"facet uses a vertex beyond {self.ring.n}")

    @classmethod
    def from_faces(cls, ring: Ring, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
        """Complex generated by the given faces (non-maximal ones are absorbed)."""
        return cls(ring, maximal_masks(mask_of(f) for f in faces))

    @classmethod
    def void(cls, ring: Ring) -> SimplicialComplex:
        return cls(ring, frozenset())

    @classmethod
    def irrelevant(cls, ring: Ring) -> SimplicialComplex:
        return cls(ring, frozenset({0}))

    @classmethod
    def simplex(cls, ring: Ring) -> SimplicialComplex:
        return cls(ring, frozenset({full_mask(ring.n)}))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """``max |F| - 1``; the void complex is assigned ``-2``."""
        if not self.facets:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return [support_of(f) for f in sorted(self.facets, key=canonical_key)]

    def faces(self) -> list[int]:
        """All faces (as masks), including the empty face for a nonvoid complex."""
        bound = sum(1 << f.bit_count() for f in self.facets)
        guard = face_guard()
        if bound > guard:
            out: set[int] = set()
            for f in self.facets:
                out.update(iter_submasks(f))
                if len(out) > guard:
                    raise TooLarge(f"complex has more than {guard} faces")
        else:
            out = set()
            for f in self.facets:
                out.update(iter_submasks(f))
        return sorted(out, key=canonical_key)

    def __contains__(self, face: Iterable[int]) -> bool:
        m = mask_of(face)
        return any(m & ~f == 0 for f in self.facets)

    def to_json(self) -> dict:
        return {"n": self.ring.n, "facets": [list(f) for f in self.sorted_facets()]}

    @classmethod
    def from_json(cls, data: dict) -> SimplicialComplex:
        return cls.from_faces(Ring(data["n"]), data["facets"])


def complex_of_ideal(I: MonomialIdeal) -> SimplicialComplex:
    """The complex whose Stanley-Reisner ideal is ``I``.

    Facets are the complements of the minimal primes, which are found as
    minimal transversals of the generators.
    """
    if I.is_unit:
        raise UnitIdeal("(1) corresponds to the void complex; build it explicitly if meant")
    n = I.ring.n
    if n > GENERIC_MAX_VARIABLES:
        raise TooLarge(f"generic facet enumeration is limited to n <= {GENERIC_MAX_VARIABLES}")
    top = full_mask(n)
    return SimplicialComplex(I.ring, frozenset(top & ~A for A in minimal_transversals(I.masks)))


def ideal_of_complex(delta: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal: the minimal non-faces."""
    top = full_mask(delta.ring.n)
    if delta.is_void:
        return MonomialIdeal(delta.ring, frozenset({0}))
    return MonomialIdeal(delta.ring, minimal_transversals(top & ~f for f in delta.facets))


def facet_decomposition(delta: SimplicialComplex) -> Decomposition:
    """``I_Delta = intersection of P_{[n] - F}`` over the facets ``F``."""
    if delta.is_void:
        raise UnitIdeal("the void complex has the unit ideal, which has no decomposition")
    top = full_mask(delta.ring.n)
    return Decomposition(delta.ring, frozenset(top & ~f for f in delta.facets if top & ~f))


def skeleton(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    """``Delta^(i)``: all faces of dimension at most ``i``."""
    out = set()
    for f in delta.facets:
        if f.bit_count() <= i + 1:
            out.add(f)
        elif i >= -1:
            out.update(mask_of(c) for c in combinations(support_of(f), i + 1))
    return SimplicialComplex(delta.ring, maximal_masks(out))


def pure_skeleton(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    """Complex generated by the faces of dimension exactly ``i``."""
    out = set()
    for f in delta.facets:
        if f.bit_count() >= i + 1 >= 0:
            out.update(mask_of(c) for c in combinations(support_of(f), i + 1))
    if not out:
        raise NoFacesOfThatDimension(f"no faces of dimension {i}")
    return SimplicialComplex(delta.ring, frozenset(out))


def link(delta: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    s = mask_of(sigma)
    return SimplicialComplex(delta.ring, maximal_masks(f & ~s for f in delta.facets if s & ~f == 0))


def induced(delta: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Restriction ``Delta|_sigma``."""
    s = mask_of(sigma)
    return SimplicialComplex(delta.ring, maximal_masks(f & s for f in delta.facets))


def f_vector(delta: SimplicialComplex) -> tuple[int, ...]:
    """``(f_{-1}, f_0, ..., f_dim)``; empty for the void complex."""
    if delta.is_void:
        return ()
    counts = [0] * (delta.dim + 2)
    for face in delta.faces():
        counts[face.bit_count()] += 1
    return tuple(counts)


def multiplicity(delta: SimplicialComplex) -> int:
    """Number of top-dimensional faces (the multiplicity of ``k[Delta]``)."""
    if delta.is_void:
        raise UnitIdeal("the void complex has no multiplicity")
    return f_vector(delta)[-1]


def minimal_vertex_covers(G: MonomialIdeal | Iterable[Iterable[int]], n: int | None = None) -> frozenset[frozenset[int]]:
    """All inclusion-minimal vertex covers of a graph, by direct enumeration.

    ``G`` is an edge ideal (degree-2 generators) or an edge list together
    with ``n``.
    """
    if isinstance(G, MonomialIdeal):
        if any(e.bit_count() != 2 for e in G.masks):
            raise InputError("an edge ideal is generated in degree 2")
        edges = list(G.masks)
        n = G.ring.n
    else:
        edges = [mask_of(e) for e in G]
        if n is None:
            n = max((e.bit_length() for e in edges), default=0)
        if any(e.bit_count() != 2 for e in edges):
            raise InputError("edges have two distinct endpoints")
    if n > 24:
        raise TooLarge("vertex-cover enumeration is limited to 24 vertices")

    def covers(c: int) -> bool:
        return all(c & e for e in edges)

    out = []
    for c in range(1 << n):
        if covers(c):
            rest = c
            minimal = True
            while rest:
                bit = rest & -rest
                if covers(c ^ bit):
                    minimal = False
                    break
                rest ^= bit
            if minimal:
                out.append(frozenset(support_of(c)))
    return frozenset(out)
