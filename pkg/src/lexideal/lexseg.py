"""Squarefree lexsegment ideals: closed-form decompositions, invariants and SCM tests.

Notation used throughout: ``u = x_1 x_F`` is the top of the segment and
``v = x_{j_1} ... x_{j_q}`` the bottom; ``A_t = [j_t] - {j_1, ..., j_{t-1}}``.
The closed forms expect the normalized situation ``x_1 | u`` (final and
general segments) and ``x_1 does not divide v`` (initial and general
segments).  :func:`normalize` reduces any segment to that shape; the
``decompose_*`` functions refuse anything else so they stay literal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal, Union

from .errors import (
    DegreeMismatch,
    EmptySegment,
    HypothesisNotMet,
    InputError,
    NormalizationViolated,
    NotCompletelyLexsegment,
    RecipeConstraintViolated,
)
from .homology import has_d_linear_resolution, has_linear_resolution
from .ideals import (
    Decomposition,
    MonomialIdeal,
    graded_component,
    ideal_sum,
    intersect,
    minimal_masks,
)
from .monomials import (
    Ring,
    SqfMonomial,
    full_mask,
    highest,
    is_segment_masks,
    lex_ge,
    lex_gt,
    lowest,
    mask_of,
    pred_mask,
    segment_masks,
    shadow_masks,
    succ_mask,
    support_of,
)

Kind = Literal["initial", "final", "general"]


def _top(n: int, d: int) -> int:
    return full_mask(d)


def _bottom(n: int, d: int) -> int:
    return full_mask(n) & ~full_mask(n - d)


def _combos(pool: int, k: int) -> list[int]:
    return [mask_of(c) for c in combinations(support_of(pool), k)]


@dataclass(frozen=True)
class LexSpec:
    """A squarefree lexsegment ``L(u, v)`` of degree ``q``."""

    u: SqfMonomial
    v: SqfMonomial
    kind: Kind

    def __post_init__(self):
        if self.u.ring != self.v.ring:
            raise InputError("segment endpoints live in different rings")
        if self.u.degree != self.v.degree:
            raise DegreeMismatch(f"deg {self.u} != deg {self.v}")
        if self.u.degree == 0:
            raise InputError("segments of degree 0 are not supported")
        if lex_gt(self.v.mask, self.u.mask):
            raise EmptySegment(f"{self.u} <lex {self.v}")
        n, q = self.ring.n, self.q
        if self.kind == "initial" and self.u.mask != _top(n, q):
            raise InputError(f"an initial segment starts at x1...x{q}")
        if self.kind == "final" and self.v.mask != _bottom(n, q):
            raise InputError(f"a final segment ends at x{n - q + 1}...x{n}")

    @classmethod
    def segment(cls, u: SqfMonomial, v: SqfMonomial) -> LexSpec:
        """``L(u, v)`` with its kind read off the endpoints."""
        n, q = u.ring.n, u.degree
        if u.mask == _top(n, q):
            kind = "initial"
        elif v.mask == _bottom(n, q):
            kind = "final"
        else:
            kind = "general"
        return cls(u, v, kind)

    @classmethod
    def initial(cls, v: SqfMonomial) -> LexSpec:
        return cls(SqfMonomial(v.ring, _top(v.ring.n, v.degree)), v, "initial")

    @classmethod
    def final(cls, u: SqfMonomial) -> LexSpec:
        return cls(u, SqfMonomial(u.ring, _bottom(u.ring.n, u.degree)), "final")

    @classmethod
    def from_masks(cls, ring: Ring, u: int, v: int) -> LexSpec:
        return cls.segment(SqfMonomial(ring, u), SqfMonomial(ring, v))

    @property
    def ring(self) -> Ring:
        return self.u.ring

    @property
    def n(self) -> int:
        return self.u.ring.n

    @property
    def q(self) -> int:
        return self.u.degree

    @property
    def starts_at_top(self) -> bool:
        return self.u.mask == _top(self.n, self.q)

    @property
    def ends_at_bottom(self) -> bool:
        return self.v.mask == _bottom(self.n, self.q)

    @property
    def js(self) -> tuple[int, ...]:
        return self.v.support

    def __str__(self) -> str:
        if self.kind == "initial":
            return f"Li({self.v})"
        if self.kind == "final":
            return f"Lf({self.u})"
        return f"L({self.u}, {self.v})"


def build(spec: LexSpec) -> MonomialIdeal:
    return MonomialIdeal(spec.ring, frozenset(segment_masks(spec.u.mask, spec.v.mask, spec.n)))


def generators(spec: LexSpec) -> list[SqfMonomial]:
    return [SqfMonomial(spec.ring, m) for m in segment_masks(spec.u.mask, spec.v.mask, spec.n)]


def iterated_shadows(spec: LexSpec) -> list[tuple[int, bool]]:
    """``(degree, is a lexsegment)`` for ``shad^i(L)``, ``i = 1..n-q``."""
    cur = set(segment_masks(spec.u.mask, spec.v.mask, spec.n))
    out = []
    for d in range(spec.q + 1, spec.n + 1):
        cur = shadow_masks(cur, spec.n)
        out.append((d, is_segment_masks(cur, spec.n)))
    return out


def is_completely_lexsegment(spec: LexSpec) -> bool:
    """Every iterated shadow of the segment is again a lexsegment."""
    cur = set(segment_masks(spec.u.mask, spec.v.mask, spec.n))
    for _ in range(spec.q, spec.n):
        cur = shadow_masks(cur, spec.n)
        if not is_segment_masks(cur, spec.n):
            return False
    return True


def a_sets(v: SqfMonomial) -> list[int]:
    """Masks of ``A_t = [j_t] - {j_1..j_{t-1}}``, ``t = 1..q``."""
    out = []
    used = 0
    for j in v.support:
        out.append(full_mask(j) & ~used)
        used |= 1 << (j - 1)
    return out


def run_index(v: SqfMonomial) -> int:
    """Least ``s`` with ``j_s >= j_1 + s``, i.e. where ``j_1, j_1 + 1, ...`` first breaks.

    When ``v`` is one unbroken run there is no such index in ``1..q`` and
    ``q + 1`` is returned.
    """
    js = v.support
    for i, j in enumerate(js, start=1):
        if j != js[0] + i - 1:
            return i
    return len(js) + 1


def dual_split_index(spec: LexSpec) -> int | None:
    """Largest ``t`` with ``|A_t| <= n - q``, or ``None`` if there is none."""
    s = None
    for t, A in enumerate(a_sets(spec.v), start=1):
        if A.bit_count() <= spec.n - spec.q:
            s = t
    return s


# ---------------------------------------------------------------------------
# normalization


@dataclass(frozen=True)
class Normalized:
    """A segment in a smaller ring plus the data to move results back.

    ``labels[k - 1]`` is the original index of variable ``k`` of the small
    ring; ``factor`` holds the original indices of variables dividing every
    generator (each contributes the component ``(x_i)``).  ``spec`` is
    ``None`` when what remains is a single monomial.
    """

    original: LexSpec
    spec: LexSpec | None
    labels: tuple[int, ...]
    factor: tuple[int, ...]
    rest: tuple[int, ...] = ()

    def lift_mask(self, mask: int) -> int:
        return mask_of(self.labels[k - 1] for k in support_of(mask))

    def reinflate(self, dec: Decomposition | None) -> Decomposition:
        comps = {1 << (i - 1) for i in self.factor}
        comps |= {1 << (i - 1) for i in self.rest}
        if dec is not None:
            comps |= {self.lift_mask(c) for c in dec.components}
        return Decomposition.minimal(self.original.ring, comps)


def normalize(spec: LexSpec) -> Normalized:
    """Strip common factors and leading unused variables.

    * If ``x_1`` does not divide ``u``, no generator involves ``x_1..x_{min(u)-1}``:
      pass to ``k[x_{min(u)}, ..., x_n]``.
    * If ``x_1`` divides ``v``, it divides every generator: ``I = (x_1) cap I'``
      with ``I'`` a segment of degree ``q - 1`` in the remaining variables.
    """
    u, v = spec.u.mask, spec.v.mask
    labels = list(range(1, spec.n + 1))
    factor: list[int] = []
    while u != v:
        if not u & 1:
            shift = lowest(u) - 1
            u >>= shift
            v >>= shift
            labels = labels[shift:]
        elif v & 1:
            factor.append(labels[0])
            u >>= 1
            v >>= 1
            labels = labels[1:]
        else:
            break
    if u == v:
        rest = tuple(labels[k - 1] for k in support_of(u))
        return Normalized(spec, None, tuple(labels), tuple(factor), rest)
    ring = Ring(len(labels))
    small = LexSpec.segment(SqfMonomial(ring, u), SqfMonomial(ring, v))
    return Normalized(spec, small, tuple(labels), tuple(factor))


# ---------------------------------------------------------------------------
# closed-form decompositions


def initial_families(spec: LexSpec) -> dict[str, list[int]]:
    if not spec.starts_at_top:
        raise NormalizationViolated(f"{spec} is not an initial segment")
    if spec.v.mask & 1:
        raise NormalizationViolated("x1 divides v; strip it with normalize() first")
    n, q = spec.n, spec.q
    A = a_sets(spec.v)
    top = full_mask(n)
    return {
        "A_t": list(A),
        "F^c": [top & ~F for F in _combos(top, q - 1) if all(F & At for At in A)],
    }


def final_families(spec: LexSpec) -> dict[str, list[int]]:
    if not spec.ends_at_bottom:
        raise NormalizationViolated(f"{spec} is not a final segment")
    if not spec.u.mask & 1:
        raise NormalizationViolated("x1 does not divide u; restrict variables with normalize() first")
    n, q = spec.n, spec.q
    if spec.u.mask == _top(n, q):
        raise HypothesisNotMet("the final segment of x1...xq is all of I_{n,q}")
    top = full_mask(n)
    Fc = top & ~(spec.u.mask & ~1)
    Fc1 = Fc & ~1
    no_one = top & ~1
    return {
        "G>=F^c": [G for G in _combos(top, n - q + 1) if lex_ge(G, Fc)],
        "G-min(G)>=F^c-1": [G for G in _combos(no_one, n - q + 1) if lex_ge(G & (G - 1), Fc1)],
        "F^c-1>G": [G for G in _combos(top, n - q) if lex_gt(Fc1, G)],
    }


def completely_families(spec: LexSpec) -> dict[str, list[int]]:
    n, q = spec.n, spec.q
    u, v = spec.u.mask, spec.v.mask
    if not u & 1 or v & 1:
        raise NormalizationViolated("need x1 | u and x1 not dividing v")
    if not is_completely_lexsegment(spec):
        raise NotCompletelyLexsegment(f"{spec} is not completely lexsegment")
    top = full_mask(n)
    A = a_sets(spec.v)
    u1 = u & ~1
    Fc1 = top & ~u
    fams: dict[str, list[int]] = {
        "A_t low": [At for At in A if At.bit_count() <= n - q],
        "A_t n-q+1": [
            At
            for At, j in zip(A, spec.js)
            if At.bit_count() == n - q + 1 and lex_ge(u1, v & ~(1 << (j - 1)))
        ],
    }
    pool = top if not u & 2 else top & ~1
    fams["G^c"] = [
        top & ~G for G in _combos(pool, q - 1) if all(G & At for At in A) and lex_ge(u1, G)
    ]
    if u & 2:
        fams["G-min(G)>=F^c-1"] = [
            G for G in _combos(top & ~1, n - q + 1) if lex_ge(G & (G - 1), Fc1)
        ]
    if u == _top(n, q):
        fams["Min(Lf(u)) height n-q"] = []
    else:
        final = final_families(LexSpec.final(spec.u))
        fams["Min(Lf(u)) height n-q"] = [
            P for P in minimal_masks(c for f in final.values() for c in f) if P.bit_count() == n - q
        ]
    return fams


def _antichain(spec: LexSpec, fams: dict[str, list[int]]) -> Decomposition:
    return Decomposition.minimal(spec.ring, (c for f in fams.values() for c in f))


def decompose_initial(spec: LexSpec) -> Decomposition:
    """Minimal primes of ``(L^i(v))`` for ``x_1`` not dividing ``v``."""
    return _antichain(spec, initial_families(spec))


def decompose_final(spec: LexSpec) -> Decomposition:
    """Minimal primes of ``(L^f(u))`` for ``x_1 | u``, ``u != x_1...x_q``."""
    return _antichain(spec, final_families(spec))


def decompose_completely(spec: LexSpec) -> Decomposition:
    """Minimal primes of a completely lexsegment ``(L(u, v))``, ``x_1 | u``, ``x_1`` not dividing ``v``."""
    return _antichain(spec, completely_families(spec))


def literal_families(spec: LexSpec) -> tuple[str, dict[str, list[int]]]:
    """Which closed form applies to an already normalized spec, and its families."""
    if spec.starts_at_top:
        return "initial", initial_families(spec)
    if spec.ends_at_bottom:
        return "final", final_families(spec)
    return "completely", completely_families(spec)


@dataclass
class FamilyReport:
    """How the literal union of theorem families relates to the antichain."""

    theorem: str
    literal: list[int]
    antichain: frozenset[int]
    duplicates: list[int] = field(default_factory=list)
    redundant: list[int] = field(default_factory=list)

    @property
    def differs(self) -> bool:
        return bool(self.duplicates or self.redundant)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "duplicates": [list(support_of(m)) for m in sorted(set(self.duplicates))],
            "redundant": [list(support_of(m)) for m in sorted(set(self.redundant))],
        }


def family_report(spec: LexSpec) -> FamilyReport:
    theorem, fams = literal_families(spec)
    literal = [c for f in fams.values() for c in f]
    anti = minimal_masks(literal)
    seen: set[int] = set()
    dups = []
    for c in literal:
        if c in seen:
            dups.append(c)
        seen.add(c)
    return FamilyReport(theorem, literal, anti, dups, [c for c in seen if c not in anti])


def decompose(spec: LexSpec) -> Decomposition:
    """Closed-form minimal primary decomposition of any supported segment.

    Normalizes first; general segments must be completely lexsegment after
    normalization.
    """
    norm = normalize(spec)
    if norm.spec is None:
        return norm.reinflate(None)
    s = norm.spec
    if s.starts_at_top:
        dec = decompose_initial(s)
    elif s.ends_at_bottom:
        dec = decompose_final(s)
    else:
        dec = decompose_completely(s)
    return norm.reinflate(dec)


# ---------------------------------------------------------------------------
# edge ideals (q = 2)


def edge_families(spec: LexSpec) -> dict[str, list[int]]:
    """Literal component families of the degree-2 corollaries.

    Index ranges follow the printed statements; the ``s < i_2`` family
    includes ``s = 1`` (giving ``[n] - {1}``), which the antichain drops.
    """
    if spec.q != 2:
        raise HypothesisNotMet("edge-ideal formulas are for q = 2")
    n = spec.n
    top = full_mask(n)
    (j1, j2) = spec.v.support
    if spec.starts_at_top:
        if j1 < 2:
            raise NormalizationViolated("need x1 not dividing v")
        return {
            "A_1": [full_mask(j1)],
            "A_2": [full_mask(j2) & ~(1 << (j1 - 1))],
            "[n]-i": [top & ~(1 << (i - 1)) for i in range(1, j1)],
        }
    i2 = spec.u.support[1]
    if spec.u.support[0] != 1:
        raise NormalizationViolated("need x1 | u")
    if spec.ends_at_bottom:
        if i2 <= 2:
            raise HypothesisNotMet("the final edge formula needs i_2 > 2")
        return {
            "[n]-s": [top & ~(1 << (s - 1)) for s in range(i2, n + 1)],
            "[n]-{1,s}": [top & ~1 & ~(1 << (s - 1)) for s in range(1, i2)],
        }
    if j1 == 1:
        raise NormalizationViolated("need x1 not dividing v")
    if i2 == 2 or (j1, j2) == (n - 1, n):
        raise HypothesisNotMet("needs u != x1x2 and v != x_{n-1}x_n")
    fams = {"A_1": [full_mask(j1)]}
    if j2 <= n - 1:
        fams["A_2"] = [full_mask(j2) & ~(1 << (j1 - 1))]
        fams["[n]-s"] = [top & ~(1 << (s - 1)) for s in range(i2, j1)]
    else:
        fams["[n]-s"] = [top & ~(1 << (s - 1)) for s in range(i2, j1 + 1)]
    fams["[n]-{1,s}"] = [top & ~1 & ~(1 << (s - 1)) for s in range(1, i2)]
    return fams


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class ClosedFormInvariants:
    """Invariants of ``S/I`` predicted by the closed forms; ``None`` where no formula applies."""

    kind: str
    dim: int
    depth: int | None
    multiplicity: int | None

    def to_json(self) -> dict:
        return {"kind": self.kind, "dim": self.dim, "depth": self.depth, "multiplicity": self.multiplicity}


def _count_below(mask: int, n: int) -> int:
    """Number of same-degree monomials strictly lex-smaller than ``mask``."""
    c = 0
    w = succ_mask(mask, n)
    while w is not None:
        c += 1
        w = succ_mask(w, n)
    return c


def final_multiplicity_count(spec: LexSpec) -> int:
    """``|{x_G : x_{F^c - 1} >lex x_G, |G| = n - q}|`` for ``u = x_1 x_F``."""
    return _count_below(full_mask(spec.n) & ~spec.u.mask, spec.n)


def invariants_closed_form(spec: LexSpec) -> ClosedFormInvariants:
    n, q = spec.n, spec.q
    u, v = spec.u.mask, spec.v.mask
    if spec.starts_at_top:
        if v & 1:
            raise HypothesisNotMet("initial formulas need x1 not dividing v")
        j1 = spec.js[0]
        e = None if spec.ends_at_bottom else run_index(spec.v) - 1
        return ClosedFormInvariants("initial", n - j1, q - 1, e)
    if not u & 1:
        raise HypothesisNotMet("final and general formulas need x1 | u")
    if spec.ends_at_bottom:
        return ClosedFormInvariants("final", q, q - 1, final_multiplicity_count(spec))
    if v & 1:
        raise HypothesisNotMet("general formulas need x1 not dividing v")
    if not is_completely_lexsegment(spec):
        raise NotCompletelyLexsegment(f"{spec} is not completely lexsegment")
    j1 = spec.js[0]
    s = run_index(spec.v)
    if j1 < n - q:
        e = s - 1
    elif j1 == n - q:
        e = s + final_multiplicity_count(spec) - 1
    else:
        e = None
    return ClosedFormInvariants("completely", n - j1, None, e)


# ---------------------------------------------------------------------------
# Alexander dual in degrees n - q and below


def dual_component_parts(spec: LexSpec) -> tuple[SqfMonomial | None, SqfMonomial | None]:
    """``(w, m)`` with ``I^vee_[n-q] = (L^i(w)) + (L^f(m))``.

    ``w = x_{A_s} x_{q+j_s-s+2} ... x_n`` and ``m = succ(x_{F^c - 1})``;
    either is ``None`` when its part is empty.
    """
    n, q = spec.n, spec.q
    if not spec.u.mask & 1 or spec.v.mask & 1:
        raise NormalizationViolated("need x1 | u and x1 not dividing v")
    s = dual_split_index(spec)
    w = None
    if s is not None:
        A = a_sets(spec.v)[s - 1]
        js = spec.js[s - 1]
        tail = mask_of(range(q + js - s + 2, n + 1))
        w = SqfMonomial(spec.ring, A | tail)
    m_mask = succ_mask(full_mask(n) & ~spec.u.mask, n)
    m = None if m_mask is None else SqfMonomial(spec.ring, m_mask)
    return w, m


def _initial_ideal(w: SqfMonomial) -> MonomialIdeal:
    return MonomialIdeal(w.ring, frozenset(segment_masks(full_mask(w.degree), w.mask, w.ring.n)))


def _final_ideal(m: SqfMonomial) -> MonomialIdeal:
    n = m.ring.n
    return MonomialIdeal(m.ring, frozenset(segment_masks(m.mask, _bottom(n, m.degree), n)))


def dual_component_n_minus_q(spec: LexSpec) -> MonomialIdeal:
    w, m = dual_component_parts(spec)
    out = MonomialIdeal(spec.ring, frozenset())
    if w is not None:
        out = ideal_sum(out, _initial_ideal(w))
    if m is not None:
        out = ideal_sum(out, _final_ideal(m))
    return out


def dual_lower_components_linear(spec: LexSpec) -> bool:
    """For ``j < n - q``: ``I^vee_[j] = (x_{A_t} : |A_t| <= n-q)_[j]`` and it is linear."""
    from .ideals import alexander_dual

    n, q = spec.n, spec.q
    dual = alexander_dual(build(spec))
    low = MonomialIdeal(spec.ring, frozenset(A for A in a_sets(spec.v) if A.bit_count() <= n - q))
    for j in range(0, n - q):
        comp = graded_component(dual, j)
        if comp != graded_component(low, j):
            return False
        if not has_linear_resolution(comp):
            return False
    return True


def scm_intersection(spec: LexSpec) -> MonomialIdeal:
    """``(L^i(w)) cap (L^f(m))`` whose ``(n-q+1)``-linearity decides sequential CM-ness."""
    if spec.starts_at_top or spec.ends_at_bottom:
        raise HypothesisNotMet("the criterion is for segments that are neither initial nor final")
    if not is_completely_lexsegment(spec):
        raise NotCompletelyLexsegment(f"{spec} is not completely lexsegment")
    w, m = dual_component_parts(spec)
    if w is None or m is None:
        raise HypothesisNotMet("degenerate dual component")
    return intersect(_initial_ideal(w), _final_ideal(m))


def scm_characterization(spec: LexSpec) -> bool:
    """Sequential Cohen-Macaulayness of a completely lexsegment ideal by the intersection test."""
    return has_d_linear_resolution(scm_intersection(spec), spec.n - spec.q + 1)


# ---------------------------------------------------------------------------
# sums of an initial and a final segment


@dataclass(frozen=True)
class SumIntersection:
    sum_linear: bool
    intersection_d1_linear: bool
    intersection_generated_in_d1: bool
    intersection_is_segment: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def sum_linear_iff_intersection(w: SqfMonomial, m: SqfMonomial) -> SumIntersection:
    """Compare linearity of ``J + K`` and ``J cap K`` for ``J = (L^i(w))``, ``K = (L^f(m))``.

    Both sides are computed independently from Betti tables.  Also reports
    whether ``J cap K`` is generated in degree ``d + 1`` and whether it
    equals ``(L(x_1 m, w x_{max([n] - supp w)}))``.
    """
    if w.ring != m.ring:
        raise InputError("w and m live in different rings")
    if w.degree != m.degree:
        raise DegreeMismatch("J and K must be generated in the same degree")
    if not w.mask & 1 or m.mask & 1:
        raise HypothesisNotMet("need x1 | w and x1 not dividing m")
    n, d = w.ring.n, w.degree
    J, K = _initial_ideal(w), _final_ideal(m)
    meet = intersect(J, K)
    top_end = m.mask | 1
    bottom_end = w.mask | (1 << (highest(full_mask(n) & ~w.mask) - 1))
    seg = segment_masks(top_end, bottom_end, n)
    is_seg = bool(seg) and meet.masks == frozenset(seg)
    return SumIntersection(
        sum_linear=has_d_linear_resolution(ideal_sum(J, K), d),
        intersection_d1_linear=has_d_linear_resolution(meet, d + 1),
        intersection_generated_in_d1=meet.is_equigenerated(d + 1),
        intersection_is_segment=is_seg,
    )


# ---------------------------------------------------------------------------
# depth bounds for arbitrary segments


def depth_gt_qminus1(spec: LexSpec) -> bool:
    """Predicted ``depth(S/I) > q - 1`` for ``x_1 | u``, ``x_1`` not dividing ``v``.

    True iff ``a = succ(v)/x_{max succ(v)} >=lex b = pred(u)/x_1`` and
    ``(L(a, b))`` has a linear resolution.
    """
    n = spec.n
    if not spec.u.mask & 1 or spec.v.mask & 1:
        raise HypothesisNotMet("need x1 | u and x1 not dividing v")
    sv = succ_mask(spec.v.mask, n)
    pu = pred_mask(spec.u.mask, n)
    if sv is None:
        raise HypothesisNotMet("v is the last monomial of its degree: succ(v) does not exist")
    if pu is None:
        raise HypothesisNotMet("u is the first monomial of its degree: pred(u) does not exist")
    a = sv & ~(1 << (highest(sv) - 1))
    b = pu & ~1
    if not lex_ge(a, b):
        return False
    return has_linear_resolution(MonomialIdeal(spec.ring, frozenset(segment_masks(a, b, n))))


def skeleton_dual_parts(spec: LexSpec) -> tuple[MonomialIdeal, MonomialIdeal]:
    """``(J, K)`` with ``J = (L^i(pred(x_{[n]-supp v})))`` and ``K = (L^f(succ(x_{[n]-supp u})))``.

    ``J + K`` is the Alexander dual of the complex generated by the degree-``q``
    non-generators.  Either part may be zero.
    """
    n, q = spec.n, spec.q
    if not spec.u.mask & 1 or spec.v.mask & 1:
        raise HypothesisNotMet("need x1 | u and x1 not dividing v")
    top = full_mask(n)
    e = n - q
    zero = MonomialIdeal(spec.ring, frozenset())
    w = pred_mask(top & ~spec.v.mask, n)
    m = succ_mask(top & ~spec.u.mask, n)
    J = zero if w is None else MonomialIdeal(spec.ring, frozenset(segment_masks(full_mask(e), w, n)))
    K = zero if m is None else MonomialIdeal(spec.ring, frozenset(segment_masks(m, _bottom(n, e), n)))
    return J, K


def depth_gt_qminus1_repaired(spec: LexSpec) -> bool:
    """``depth(S/I) > q - 1`` decided through the skeleton ``Delta^(q-1)``.

    ``Delta^(q-1)`` is CM iff (a) every ``(q-1)``-set lies in a ``q``-set outside
    the segment, so the skeleton is generated by those ``q``-sets, and (b) its
    Alexander dual ``J + K`` has a linear resolution.  :func:`depth_gt_qminus1`
    skips (a) and replaces (b) by a segment test that is only valid when
    ``J cap K`` is generated in one degree.
    """
    n, q = spec.n, spec.q
    J, K = skeleton_dual_parts(spec)
    outside = [g for g in _combos(full_mask(n), q) if not lex_ge(spec.u.mask, g) or lex_gt(spec.v.mask, g)]
    for f in _combos(full_mask(n), q - 1):
        if not any(f & ~g == 0 for g in outside):
            return False
    return has_d_linear_resolution(ideal_sum(J, K), n - q)


def complement_segment(spec: LexSpec) -> LexSpec:
    """``L(x_G, x_H)`` -> ``L(x_{[n]-H}, x_{[n]-G})``."""
    return LexSpec.segment(spec.v.complement(), spec.u.complement())


# ---------------------------------------------------------------------------
# critical ideals


@dataclass(frozen=True)
class CriticalBase:
    """``(x_var, m)`` with ``x_var`` not dividing ``m``."""

    var: int
    mono: tuple[int, ...]


@dataclass(frozen=True)
class CriticalStep:
    """``(x_var) + cofactor * inner``."""

    var: int
    cofactor: tuple[int, ...]
    inner: Critical


Critical = Union[CriticalBase, CriticalStep]


@dataclass(frozen=True)
class CanonicalCritical:
    """``scale * inner`` for a critical ``inner``."""

    scale: tuple[int, ...]
    inner: Critical


def _check_indices(ring: Ring, idx) -> int:
    for i in idx:
        if not 1 <= i <= ring.n:
            raise RecipeConstraintViolated(f"variable x{i} outside 1..{ring.n}")
    if len(set(idx)) != len(idx):
        raise RecipeConstraintViolated(f"repeated variable in {idx}")
    return mask_of(idx)


def _critical_masks(ring: Ring, recipe) -> list[int]:
    if isinstance(recipe, CanonicalCritical):
        w = _check_indices(ring, recipe.scale)
        inner = _critical_masks(ring, recipe.inner)
        if any(w & g for g in inner):
            raise RecipeConstraintViolated("the scale must be coprime to every generator")
        return [w | g for g in inner]
    if isinstance(recipe, CriticalBase):
        x = _check_indices(ring, (recipe.var,))
        m = _check_indices(ring, recipe.mono)
        if not m:
            raise RecipeConstraintViolated("the base monomial must be nonconstant")
        if x & m:
            raise RecipeConstraintViolated(f"x{recipe.var} divides the base monomial")
        return [x, m]
    if isinstance(recipe, CriticalStep):
        x = _check_indices(ring, (recipe.var,))
        mp = _check_indices(ring, recipe.cofactor)
        inner = _critical_masks(ring, recipe.inner)
        for g in inner:
            if x & (g | mp):
                raise RecipeConstraintViolated(f"x{recipe.var} divides m*m' for a generator m")
            if g & mp:
                raise RecipeConstraintViolated("the cofactor must be coprime to every generator of J")
        return [x] + [mp | g for g in inner]
    raise RecipeConstraintViolated(f"unknown recipe node {recipe!r}")


def critical_order(ring: Ring, recipe) -> list[SqfMonomial]:
    """Generators in the order ``[x_j, m' * (order of J)]`` that has linear quotients."""
    return [SqfMonomial(ring, g) for g in _critical_masks(ring, recipe)]


def critical_build(ring: Ring, recipe) -> MonomialIdeal:
    return MonomialIdeal(ring, frozenset(_critical_masks(ring, recipe)))


def nested_initial_critical(spec: LexSpec) -> CanonicalCritical | Critical:
    """``J = x_1...x_{j_1-1}(x_{j_1} + x_{j_1+1}...x_{j_2-1}(x_{j_2} + ...))`` generated by the ``x_{A_t}``.

    Built as a recipe; the innermost pair is ``(x_{j_{q-1}}, x_{j_{q-1}+1}...x_{j_q})``.
    """
    js = spec.js
    q = len(js)
    if q < 2:
        raise HypothesisNotMet("needs q >= 2")
    recipe: Critical = CriticalBase(js[q - 2], tuple(range(js[q - 2] + 1, js[q - 1] + 1)))
    for t in range(q - 3, -1, -1):
        recipe = CriticalStep(js[t], tuple(range(js[t] + 1, js[t + 1])), recipe)
    scale = tuple(range(1, js[0]))
    return CanonicalCritical(scale, recipe) if scale else recipe


def random_critical(rng, n: int, max_gens: int):
    """A random canonical critical recipe on at most ``n`` variables."""
    avail = list(range(1, n + 1))
    rng.shuffle(avail)

    def take(k):
        out = tuple(sorted(avail[:k]))
        del avail[:k]
        return out

    x = take(1)[0]
    m = take(rng.randint(1, max(1, min(3, len(avail) - 1))))
    recipe: Critical = CriticalBase(x, m)
    gens = 2
    while gens < max_gens and len(avail) >= 1 and rng.random() < 0.75:
        var = take(1)[0]
        cof = take(rng.randint(0, min(2, len(avail))))
        recipe = CriticalStep(var, cof, recipe)
        gens += 1
    scale = take(rng.randint(0, min(2, len(avail))))
    return CanonicalCritical(scale, recipe) if scale else recipe
