"""Reduced simplicial homology, graded Betti numbers and the predicates built on them.

Coefficients are the rationals unless a prime field is selected with
:func:`homology_field`.  Betti numbers come from two unrelated routes:

* Hochster's formula, ``beta_{i,sigma}(S/I) = dim H~_{|sigma|-i-1}(Delta|_sigma)``;
* the Taylor complex tensored with ``k``, split by lcm-multidegree.

Everything else (pd, depth, regularity, Cohen-Macaulayness, linear
resolutions) is read off the Hochster table.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal

from .complexes import (
    SimplicialComplex,
    complex_of_ideal,
    ideal_of_complex,
    pure_skeleton,
    skeleton,
)
from .errors import (
    InputError,
    TooManyGenerators,
    TooManyVariables,
    ZeroOrUnitIdeal,
)
from .ideals import MonomialIdeal, alexander_dual, graded_component, minimal_primes_masks
from .linalg import rank
from .monomials import iter_submasks, support_of

HOCHSTER_MAX_VARIABLES = 14
TAYLOR_MAX_GENERATORS = 12

Subject = Literal["ideal", "quotient"]

_FIELD: contextvars.ContextVar[int] = contextvars.ContextVar("homology_field", default=0)


@contextlib.contextmanager
def homology_field(p: int) -> Iterator[None]:
    """Compute over GF(p) inside the block (``p = 0`` means the rationals)."""
    if p and (p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1))):
        raise InputError(f"{p} is not prime")
    token = _FIELD.set(p)
    try:
        yield
    finally:
        _FIELD.reset(token)


def current_field() -> int:
    return _FIELD.get()


# ---------------------------------------------------------------------------
# reduced homology


@dataclass(frozen=True)
class HomologyProfile:
    """Ranks of ``H~_i`` for ``i = -1, 0, 1, ...``; ``ranks[0]`` is degree -1."""

    ranks: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        k = i + 1
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    def nonzero(self) -> dict[int, int]:
        return {k - 1: r for k, r in enumerate(self.ranks) if r}


def _boundary_rows(upper: list[int], lower_index: dict[int, int]) -> Iterator[dict[int, int]]:
    for f in upper:
        row = {}
        sign = 1
        rest = f
        while rest:
            bit = rest & -rest
            row[lower_index[f ^ bit]] = sign
            sign = -sign
            rest ^= bit
        yield row


def reduced_homology_of_faces(faces: Iterable[int], p: int | None = None) -> list[int]:
    """Reduced Betti numbers of the complex with the given face masks.

    Returns ``[dim H~_{-1}, dim H~_0, ...]``; an empty face list (the void
    complex) gives ``[]``.
    """
    if p is None:
        p = _FIELD.get()
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    if not by_size:
        return []
    top = max(by_size)
    dims = [len(by_size.get(k, ())) for k in range(top + 1)]
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        lower = by_size.get(k - 1, [])
        upper = by_size.get(k, [])
        if lower and upper:
            index = {f: i for i, f in enumerate(lower)}
            ranks[k] = rank(_boundary_rows(upper, index), p)
    return [dims[k] - ranks[k] - ranks[k + 1] for k in range(top + 1)]


def reduced_homology(delta: SimplicialComplex) -> HomologyProfile:
    """Reduced homology ranks; void complex -> all zero, ``{emptyset}`` -> ``H~_{-1} = 1``."""
    return HomologyProfile(tuple(reduced_homology_of_faces(delta.faces())))


# ---------------------------------------------------------------------------
# Betti tables


@dataclass(frozen=True, eq=True)
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}`` (only nonzero entries are stored)."""

    subject: Subject
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    @property
    def pd(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def reg(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def as_subject(self, subject: Subject) -> BettiTable:
        """Convert using ``beta_{i,j}(I) = beta_{i+1,j}(S/I)``."""
        if subject == self.subject:
            return self
        if subject == "ideal":
            moved = {(i - 1, j): r for (i, j), r in self.entries.items() if i > 0}
        else:
            moved = {(i + 1, j): r for (i, j), r in self.entries.items()}
            moved[(0, 0)] = 1
        return BettiTable(subject, moved)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "entries": [{"i": i, "j": j, "rank": r} for (i, j), r in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> BettiTable:
        return cls(data["subject"], {(e["i"], e["j"]): e["rank"] for e in data["entries"]})

    def pretty(self) -> str:
        """Macaulay2-style display: row ``j - i``, column ``i``."""
        if not self.entries:
            return "(empty)"
        cols = range(self.pd + 1)
        rows = sorted({j - i for i, j in self.entries})
        lines = ["      " + " ".join(f"{i:>4}" for i in cols)]
        for r in rows:
            cells = [self.entries.get((i, i + r), 0) for i in cols]
            lines.append(f"{r:>4}: " + " ".join(f"{c or '.':>4}" for c in cells))
        return "\n".join(lines)


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero or I.is_unit:
        raise ZeroOrUnitIdeal("homological invariants need a proper nonzero ideal")


def _compress(masks: Iterable[int]) -> tuple[list[int], int]:
    """Relabel the variables actually used to ``0..k-1``."""
    masks = list(masks)
    used = 0
    for m in masks:
        used |= m
    pos = {v: i for i, v in enumerate(support_of(used))}
    out = []
    for m in masks:
        c = 0
        for v in support_of(m):
            c |= 1 << pos[v]
        out.append(c)
    return out, len(pos)


def _hochster_quotient(masks: Iterable[int], p: int) -> dict[tuple[int, int], int]:
    gens, k = _compress(masks)
    if k > HOCHSTER_MAX_VARIABLES:
        raise TooManyVariables(f"Hochster's formula enumerates 2^{k} subsets; limit is 2^{HOCHSTER_MAX_VARIABLES}")
    genset = set(gens)
    size = 1 << k
    nonface = bytearray(size)
    for t in range(1, size):
        if t in genset:
            nonface[t] = 1
            continue
        rest = t
        while rest:
            bit = rest & -rest
            if nonface[t ^ bit]:
                nonface[t] = 1
                break
            rest ^= bit
    table: dict[tuple[int, int], int] = {(0, 0): 1}
    for sigma in range(1, size):
        covered = 0
        for g in gens:
            if g & ~sigma == 0:
                covered |= g
        if covered != sigma:
            # some vertex of sigma lies in no non-face: Delta|_sigma is a cone
            continue
        faces = [t for t in iter_submasks(sigma) if not nonface[t]]
        s = sigma.bit_count()
        for idx, r in enumerate(reduced_homology_of_faces(faces, p)):
            if r:
                key = (s - idx, s)  # H~_{idx-1} contributes to beta_{s-idx, s}
                table[key] = table.get(key, 0) + r
    return table


def betti_hochster(I: MonomialIdeal, subject: Subject = "quotient") -> BettiTable:
    """Graded Betti table of ``S/I`` (or of ``I``) by Hochster's formula."""
    _require_proper(I)
    table = BettiTable("quotient", _hochster_quotient(I.masks, _FIELD.get()))
    return table.as_subject(subject)


def betti_taylor(I: MonomialIdeal, subject: Subject = "quotient") -> BettiTable:
    """Graded Betti table from the homology of the Taylor complex in each multidegree."""
    _require_proper(I)
    p = _FIELD.get()
    gens = sorted(I.masks)
    r = len(gens)
    if r > TAYLOR_MAX_GENERATORS:
        raise TooManyGenerators(f"Taylor complex has 2^{r} cells; limit is 2^{TAYLOR_MAX_GENERATORS}")
    lcm = [0] * (1 << r)
    groups: dict[int, dict[int, list[int]]] = {}
    for A in range(1 << r):
        if A:
            low = A & -A
            lcm[A] = lcm[A ^ low] | gens[low.bit_length() - 1]
        groups.setdefault(lcm[A], {}).setdefault(A.bit_count(), []).append(A)
    entries: dict[tuple[int, int], int] = {}
    for sigma, by_size in groups.items():
        top = max(by_size)
        index = {size: {A: i for i, A in enumerate(cells)} for size, cells in by_size.items()}
        ranks = [0] * (top + 2)
        for size in range(1, top + 1):
            upper = by_size.get(size)
            lower = index.get(size - 1)
            if not upper or not lower:
                continue
            rows = []
            for A in upper:
                row = {}
                sign = 1
                rest = A
                while rest:
                    bit = rest & -rest
                    face = A ^ bit
                    if lcm[face] == sigma:
                        row[lower[face]] = sign
                    sign = -sign
                    rest ^= bit
                rows.append(row)
            ranks[size] = rank(rows, p)
        deg = sigma.bit_count()
        for size in range(top + 1):
            h = len(by_size.get(size, ())) - ranks[size] - ranks[size + 1]
            if h:
                entries[(size, deg)] = entries.get((size, deg), 0) + h
    return BettiTable("quotient", entries).as_subject(subject)


# ---------------------------------------------------------------------------
# invariants of S/I


def pd(I: MonomialIdeal) -> int:
    """Projective dimension of ``S/I``."""
    return betti_hochster(I).pd


def depth(I: MonomialIdeal) -> int:
    """``depth(S/I) = n - pd(S/I)`` (Auslander-Buchsbaum)."""
    return I.ring.n - pd(I)


def dim(I: MonomialIdeal) -> int:
    """Krull dimension of ``S/I``: ``n`` minus the least height of a minimal prime."""
    return I.ring.n - min(A.bit_count() for A in minimal_primes_masks(I))


def regularity(I: MonomialIdeal) -> int:
    """Castelnuovo-Mumford regularity of ``S/I`` (that of ``I`` is one more)."""
    return betti_hochster(I).reg


def is_cm(I: MonomialIdeal) -> bool:
    return depth(I) == dim(I)


def depth_via_skeletons(I: MonomialIdeal) -> int:
    """Depth of ``S/I`` as ``max{i + 1 : k[Delta^(i)] is Cohen-Macaulay}``."""
    _require_proper(I)
    delta = complex_of_ideal(I)
    for i in range(delta.dim, -1, -1):
        if is_cm(ideal_of_complex(skeleton(delta, i))):
            return i + 1
    return 0


# ---------------------------------------------------------------------------
# resolutions


def has_linear_resolution(I: MonomialIdeal) -> bool:
    """Equigenerated with every Betti number of ``I`` on one diagonal ``j = i + d``.

    The zero ideal counts as (vacuously) linear; the unit ideal is free.
    """
    if I.is_zero or I.is_unit:
        return True
    if not I.is_equigenerated():
        return False
    d = I.degrees[0]
    table = betti_hochster(I, "ideal")
    return all(j == i + d for i, j in table.entries)


def has_d_linear_resolution(I: MonomialIdeal, d: int) -> bool:
    if I.is_zero:
        return True
    return I.is_equigenerated(d) and has_linear_resolution(I)


def is_componentwise_linear(I: MonomialIdeal) -> bool:
    """Every squarefree graded component ``I_[j]`` has a linear resolution."""
    if I.is_zero or I.is_unit:
        return True
    for j in range(min(I.degrees), I.ring.n + 1):
        if not has_linear_resolution(graded_component(I, j)):
            return False
    return True


def linear_components(I: MonomialIdeal) -> dict[int, bool]:
    """Per-degree verdicts behind :func:`is_componentwise_linear`."""
    return {j: has_linear_resolution(graded_component(I, j)) for j in range(min(I.degrees), I.ring.n + 1)}


def is_scm_definition(I: MonomialIdeal) -> bool:
    """Every pure skeleton of ``Delta(I)`` is Cohen-Macaulay."""
    _require_proper(I)
    delta = complex_of_ideal(I)
    for i in range(delta.dim, -1, -1):
        gamma = pure_skeleton(delta, i)
        if not is_cm(ideal_of_complex(gamma)):
            return False
    return True


def is_scm_dual(I: MonomialIdeal) -> bool:
    """Sequential Cohen-Macaulayness via componentwise linearity of ``I^vee``."""
    return is_componentwise_linear(alexander_dual(I))

