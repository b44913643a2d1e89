import random

import pytest

from lexideal import lexseg as L
from lexideal.complexes import complex_of_ideal, facet_decomposition, minimal_vertex_covers, multiplicity
from lexideal.errors import (
    DegreeMismatch,
    EmptySegment,
    HypothesisNotMet,
    InputError,
    NormalizationViolated,
    NotCompletelyLexsegment,
    RecipeConstraintViolated,
)
from lexideal.homology import depth, dim, has_linear_resolution, is_componentwise_linear, is_scm_dual
from lexideal.ideals import alexander_dual, decompose as oracle, graded_component, has_linear_quotients, intersect
from lexideal.monomials import Ring, SqfMonomial, stratum_masks, support_of


def mono(n, *s):
    return Ring(n).monomial(*s)


def seg(n, u, v):
    return L.LexSpec.segment(mono(n, *u), mono(n, *v))


def supports(dec):
    return sorted((support_of(c) for c in dec.components), key=lambda s: (len(s), s))


def test_build_examples():
    assert [g.support for g in L.build(L.LexSpec.initial(mono(4, 2, 3))).gens] == [(1, 2), (1, 3), (1, 4), (2, 3)]
    assert len(L.build(L.LexSpec.final(mono(4, 1, 3))).masks) == 5
    p = L.build(seg(4, (1, 3), (1, 3)))
    assert [g.support for g in p.gens] == [(1, 3)]


def test_spec_validation():
    with pytest.raises(DegreeMismatch):
        seg(4, (1,), (2, 3))
    with pytest.raises(EmptySegment):
        seg(4, (2, 3), (1, 3))
    with pytest.raises(InputError):
        L.LexSpec(mono(4, 1, 3), mono(4, 2, 3), "initial")
    assert seg(4, (1, 2), (2, 3)).kind == "initial"
    assert seg(4, (1, 3), (3, 4)).kind == "final"
    assert seg(5, (1, 4), (2, 3)).kind == "general"


def test_completeness_examples():
    assert L.is_completely_lexsegment(seg(5, (1, 4), (2, 3)))
    for n in range(3, 7):
        for q in range(1, n):
            for m in stratum_masks(n, q):
                R = Ring(n)
                assert L.is_completely_lexsegment(L.LexSpec.initial(SqfMonomial(R, m)))
                if m & 1:
                    assert L.is_completely_lexsegment(L.LexSpec.final(SqfMonomial(R, m)))


def test_decompose_examples():
    assert supports(L.decompose_initial(L.LexSpec.initial(mono(4, 2, 3)))) == [(1, 2), (1, 3), (2, 3, 4)]
    assert supports(L.decompose_final(L.LexSpec.final(mono(4, 1, 3)))) == [(3, 4), (1, 2, 3), (1, 2, 4)]
    s = seg(4, (1, 3), (2, 3))
    assert L.decompose_completely(s) == facet_decomposition(complex_of_ideal(L.build(s)))


def test_pure_iff_bottom():
    for n in range(4, 8):
        R = Ring(n)
        for q in range(2, n):
            for v in stratum_masks(n, q):
                if v & 1:
                    continue
                spec = L.LexSpec.initial(SqfMonomial(R, v))
                pure = len(set(L.decompose_initial(spec).heights)) == 1
                assert pure == spec.ends_at_bottom


def test_decompose_refuses_unnormalized():
    with pytest.raises(NormalizationViolated):
        L.decompose_initial(L.LexSpec.initial(mono(4, 1, 3)))
    with pytest.raises(NormalizationViolated):
        L.decompose_final(L.LexSpec.final(mono(4, 2, 3)))
    with pytest.raises(HypothesisNotMet):
        L.decompose_final(L.LexSpec.final(mono(4, 1, 2)))
    with pytest.raises(NotCompletelyLexsegment):
        L.decompose_completely(_non_complete())


def _non_complete():
    for n in range(4, 7):
        R = Ring(n)
        for q in range(2, n):
            S = stratum_masks(n, q)
            for i, u in enumerate(S):
                for v in S[i + 1:]:
                    if u & 1 and not v & 1:
                        s = L.LexSpec.from_masks(R, u, v)
                        if s.kind == "general" and not L.is_completely_lexsegment(s):
                            return s
    raise AssertionError("no non-complete segment found")


def test_normalize_round_trip():
    # x1 dividing everything, and unused leading variables
    s = seg(6, (1, 3, 4), (1, 4, 5))
    norm = L.normalize(s)
    assert norm.factor == (1,) and norm.spec.n == 4
    assert L.decompose(s) == oracle(L.build(s))
    s = seg(6, (3, 4), (4, 6))
    norm = L.normalize(s)
    assert norm.labels[0] == 3
    assert L.decompose(s) == oracle(L.build(s))


@pytest.mark.parametrize("n", range(3, 7))
def test_decompose_any_complete_segment(n):
    R = Ring(n)
    for q in range(1, n):
        S = stratum_masks(n, q)
        for i, u in enumerate(S):
            for v in S[i:]:
                s = L.LexSpec.from_masks(R, u, v)
                norm = L.normalize(s)
                if norm.spec is not None and norm.spec.kind == "general" and not L.is_completely_lexsegment(norm.spec):
                    continue
                assert L.decompose(s) == oracle(L.build(s))


def test_edge_families_match_vertex_covers():
    for n in range(4, 9):
        R = Ring(n)
        S = stratum_masks(n, 2)
        for i, u in enumerate(S):
            for v in S[i + 1:]:
                s = L.LexSpec.from_masks(R, u, v)
                try:
                    fams = L.edge_families(s)
                except (HypothesisNotMet, NormalizationViolated):
                    continue
                if s.kind == "general" and not L.is_completely_lexsegment(s):
                    continue
                got = {frozenset(support_of(c)) for c in L.Decomposition.minimal(R, [c for f in fams.values() for c in f]).components}
                assert got == minimal_vertex_covers(L.build(s))


def test_edge_literal_range_is_redundant_at_one():
    s = L.LexSpec.final(mono(5, 1, 4))
    fams = L.edge_families(s)
    assert (1 << 5) - 1 & ~1 in fams["[n]-{1,s}"]
    assert (1 << 5) - 1 & ~1 not in L.decompose_final(s).components


def test_invariants_examples():
    cf = L.invariants_closed_form(L.LexSpec.initial(mono(4, 2, 3)))
    assert (cf.dim, cf.depth, cf.multiplicity) == (2, 1, 2)
    cf = L.invariants_closed_form(L.LexSpec.final(mono(4, 1, 3)))
    assert (cf.dim, cf.depth, cf.multiplicity) == (2, 1, 1)
    assert L.run_index(mono(4, 2, 3)) == 3
    assert L.run_index(mono(6, 2, 3, 5)) == 3
    with pytest.raises(HypothesisNotMet):
        L.invariants_closed_form(L.LexSpec.final(mono(4, 2, 3)))


def test_invariants_against_oracles():
    for n in range(3, 7):
        R = Ring(n)
        for q in range(2, n):
            S = stratum_masks(n, q)
            for i, u in enumerate(S):
                for v in S[i + 1:]:
                    s = L.LexSpec.from_masks(R, u, v)
                    try:
                        cf = L.invariants_closed_form(s)
                    except (HypothesisNotMet, NotCompletelyLexsegment):
                        continue
                    I = L.build(s)
                    assert cf.dim == dim(I)
                    if cf.depth is not None:
                        assert cf.depth == depth(I)
                    if cf.multiplicity is not None:
                        assert cf.multiplicity == multiplicity(complex_of_ideal(I))


def test_dual_component_examples():
    s = seg(6, (1, 3, 4), (2, 3, 4))
    dual = alexander_dual(L.build(s))
    assert L.dual_component_n_minus_q(s) == graded_component(dual, 3)
    assert L.dual_lower_components_linear(s)


def test_dual_component_when_A_s_is_exact():
    # |A_s| = n - q gives w = x_{A_s}
    for n in range(4, 8):
        R = Ring(n)
        for q in range(2, n - 1):
            for v in stratum_masks(n, q):
                if v & 1:
                    continue
                s = L.LexSpec.initial(SqfMonomial(R, v))
                t = L.dual_split_index(s)
                if t is not None and L.a_sets(s.v)[t - 1].bit_count() == n - q:
                    w, _ = L.dual_component_parts(s)
                    assert w.mask == L.a_sets(s.v)[t - 1]


def test_scm_example():
    s = seg(6, (1, 3, 4), (2, 3, 4))
    assert L.scm_characterization(s) == is_scm_dual(L.build(s))
    with pytest.raises(HypothesisNotMet):
        L.scm_characterization(L.LexSpec.initial(mono(5, 2, 4)))


def test_bridge_identity():
    for n in range(3, 7):
        R = Ring(n)
        for q in range(1, n):
            S = stratum_masks(n, q)
            for i, u in enumerate(S):
                for v in S[i:]:
                    if not u & 1 or v & 1:
                        continue
                    s = L.LexSpec.from_masks(R, u, v)
                    if not L.is_completely_lexsegment(s):
                        continue
                    Li = L.build(L.LexSpec.initial(s.v))
                    Lf = L.build(L.LexSpec.final(s.u))
                    assert L.build(s) == intersect(Li, Lf)


def test_sum_intersection_examples():
    r = L.sum_linear_iff_intersection(mono(4, 1, 2), mono(4, 3, 4))
    assert r.sum_linear == r.intersection_d1_linear
    with pytest.raises(HypothesisNotMet):
        L.sum_linear_iff_intersection(mono(4, 2, 3), mono(4, 3, 4))
    with pytest.raises(DegreeMismatch):
        L.sum_linear_iff_intersection(mono(4, 1), mono(4, 3, 4))


def test_critical_examples():
    R = Ring(4)
    base = L.CriticalBase(1, (2, 3))
    I = L.critical_build(R, base)
    assert has_linear_quotients(I, L.critical_order(R, base))
    step = L.CriticalStep(4, (), base)
    assert [g.support for g in L.critical_order(R, step)] == [(4,), (1,), (2, 3)]
    with pytest.raises(RecipeConstraintViolated):
        L.critical_build(R, L.CriticalBase(1, (1, 2)))
    with pytest.raises(RecipeConstraintViolated):
        L.critical_build(R, L.CriticalStep(2, (), base))
    with pytest.raises(RecipeConstraintViolated):
        L.critical_build(R, L.CriticalStep(4, (2,), base))
    with pytest.raises(RecipeConstraintViolated):
        L.critical_build(R, L.CanonicalCritical((3,), base))
    with pytest.raises(RecipeConstraintViolated):
        L.critical_build(R, L.CriticalBase(5, (1,)))


def test_nested_initial_critical_generates_a_sets():
    for n in range(4, 8):
        R = Ring(n)
        for q in range(2, n):
            for v in stratum_masks(n, q):
                if v & 1:
                    continue
                s = L.LexSpec.initial(SqfMonomial(R, v))
                recipe = L.nested_initial_critical(s)
                I = L.critical_build(R, recipe)
                assert I.masks == frozenset(L.a_sets(s.v))
                assert has_linear_quotients(I, L.critical_order(R, recipe))


def test_random_critical_small():
    rng = random.Random(4)
    for _ in range(30):
        n = rng.randint(3, 7)
        R = Ring(n)
        r = L.random_critical(rng, n, 6)
        I = L.critical_build(R, r)
        assert has_linear_quotients(I, L.critical_order(R, r))
        assert is_componentwise_linear(I)


def test_depth_predicate_boundaries():
    with pytest.raises(HypothesisNotMet):
        L.depth_gt_qminus1(seg(4, (1, 2), (2, 3)))
    with pytest.raises(HypothesisNotMet):
        L.depth_gt_qminus1(seg(4, (1, 3), (3, 4)))
    with pytest.raises(HypothesisNotMet):
        L.depth_gt_qminus1(seg(4, (2, 3), (3, 4)))


def test_depth_literal_predicate_counterexample():
    # literal test says depth > q - 1, but the 2-skeleton has the isolated edge {1,4}
    s = seg(5, (1, 2, 4), (2, 3, 4))
    assert L.depth_gt_qminus1(s)
    assert depth(L.build(s)) == 2
    assert not L.depth_gt_qminus1_repaired(s)


def test_repaired_depth_predicate():
    for n in range(3, 7):
        R = Ring(n)
        for q in range(2, n):
            S = stratum_masks(n, q)
            for i, u in enumerate(S):
                for v in S[i:]:
                    if not u & 1 or v & 1:
                        continue
                    s = L.LexSpec.from_masks(R, u, v)
                    assert L.depth_gt_qminus1_repaired(s) == (depth(L.build(s)) > q - 1)


def test_complement_lemma_counterexample():
    s = seg(5, (1, 4), (2, 4))
    c = L.complement_segment(s)
    assert str(c) == "L(x1x3x5, x2x3x5)"
    assert not has_linear_resolution(L.build(s))
    assert has_linear_resolution(L.build(c))
    assert L.complement_segment(c) == s


def test_family_report_shape():
    rep = L.family_report(L.LexSpec.initial(mono(4, 2, 3)))
    assert rep.theorem == "initial" and not rep.differs
    assert rep.to_json() == {"theorem": "initial", "duplicates": [], "redundant": []}
