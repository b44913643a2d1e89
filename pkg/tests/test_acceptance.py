"""The ten acceptance criteria, each checked exactly and reported as one PASS/FAIL line."""

import json
import random

import pytest

from conftest import ACCEPTANCE_LINES
from lexideal import lexseg as L
from lexideal.cli.parser import parse, to_text
from lexideal.cli.sweep import SweepConfig, run_sweep
from lexideal.complexes import (
    SimplicialComplex,
    complex_of_ideal,
    facet_decomposition,
    ideal_of_complex,
    multiplicity,
)
from lexideal.errors import HypothesisNotMet, NotCompletelyLexsegment
from lexideal.homology import (
    betti_hochster,
    betti_taylor,
    depth,
    depth_via_skeletons,
    dim,
    has_linear_resolution,
    is_cm,
    is_componentwise_linear,
    is_scm_definition,
    is_scm_dual,
)
from lexideal.ideals import (
    MonomialIdeal,
    alexander_dual,
    decompose,
    has_linear_quotients,
    intersect,
    minimal_masks,
)
from lexideal.monomials import Ring, SqfMonomial, stratum_masks

pytestmark = pytest.mark.slow


def report(k: int, title: str, failures: list, checked: int) -> None:
    status = "PASS" if not failures and checked else "FAIL"
    line = f"ACCEPTANCE {k}: {status} {title} ({checked} cases, {len(failures)} failures)"
    if failures:
        line += f"; first: {failures[0]}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert checked and not failures, line


def segments(n, qs, include_equal=False):
    R = Ring(n)
    for q in qs:
        S = stratum_masks(n, q)
        for i, u in enumerate(S):
            for v in S[i if include_equal else i + 1:]:
                yield L.LexSpec.from_masks(R, u, v)


def normalized_general(n):
    """Completely lexsegment L(u, v), x1 | u, x1 not dividing v, neither initial nor final."""
    for s in segments(n, range(2, n)):
        if s.u.mask & 1 and not s.v.mask & 1 and s.kind == "general" and L.is_completely_lexsegment(s):
            yield s


def test_1_initial_decomposition():
    fails, count = [], 0
    for n in range(4, 9):
        R = Ring(n)
        for q in range(2, n):
            for v in stratum_masks(n, q):
                if v & 1:
                    continue
                s = L.LexSpec.initial(SqfMonomial(R, v))
                count += 1
                if L.decompose_initial(s) != facet_decomposition(complex_of_ideal(L.build(s))):
                    fails.append(str(s))
    report(1, "initial decomposition = facet oracle, n 4..8", fails, count)


def test_2_final_decomposition():
    fails, count = [], 0
    for n in range(4, 9):
        R = Ring(n)
        for q in range(2, n):
            for u in stratum_masks(n, q):
                if not u & 1 or u == (1 << q) - 1:
                    continue
                s = L.LexSpec.final(SqfMonomial(R, u))
                count += 1
                if L.decompose_final(s) != facet_decomposition(complex_of_ideal(L.build(s))):
                    fails.append(str(s))
    report(2, "final decomposition = facet oracle, n 4..8", fails, count)


def test_3_completely_decomposition_and_bridge():
    fails, count = [], 0
    for n in range(3, 8):
        for s in normalized_general(n):
            I = L.build(s)
            count += 1
            if L.decompose_completely(s) != facet_decomposition(complex_of_ideal(I)):
                fails.append(f"decompose {s}")
            meet = intersect(L.build(L.LexSpec.initial(s.v)), L.build(L.LexSpec.final(s.u)))
            if meet != I:
                fails.append(f"bridge {s}")
    report(3, "completely decomposition = facet oracle and L = Li(v) & Lf(u), n <= 7", fails, count)


def test_4_invariant_formulas():
    fails, count = [], 0
    for n in range(3, 8):
        for s in segments(n, range(2, n)):
            try:
                cf = L.invariants_closed_form(s)
            except (HypothesisNotMet, NotCompletelyLexsegment):
                continue
            count += 1
            I = L.build(s)
            delta = complex_of_ideal(I)
            if cf.dim != dim(I) or cf.dim != delta.dim + 1:
                fails.append(f"dim {s}")
            if cf.depth is not None:
                pd_taylor = n - betti_taylor(I).pd if len(I.masks) <= 12 else depth(I)
                if not cf.depth == depth(I) == depth_via_skeletons(I) == pd_taylor:
                    fails.append(f"depth {s}")
            if cf.multiplicity is not None:
                if cf.multiplicity != multiplicity(delta):
                    fails.append(f"e {s}")
    report(4, "dim/depth/multiplicity formulas vs homology and f-vector, n <= 7", fails, count)


def test_5_betti_engines_agree():
    fails, count = [], 0
    rng = random.Random(2024)
    while count < 2000:
        n = rng.randint(2, 5)
        gens = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 8))]
        I = MonomialIdeal(Ring(n), minimal_masks(gens))
        if I.is_unit:
            continue
        count += 1
        if betti_hochster(I) != betti_taylor(I):
            fails.append(I.to_json())
    big = 0
    while big < 500:
        n = rng.randint(2, 8)
        gens = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 10))]
        I = MonomialIdeal(Ring(n), minimal_masks(gens))
        if I.is_unit:
            continue
        big += 1
        if betti_hochster(I) != betti_taylor(I):
            fails.append(I.to_json())
    report(5, "Hochster = Taylor Betti tables (2000 with n <= 5, 500 with n <= 8)", fails, count + big)


def test_6_scm_triple_agreement():
    fails, count = [], 0
    for n in range(3, 8):
        for s in normalized_general(n):
            I = L.build(s)
            count += 1
            c, a, b = L.scm_characterization(s), is_scm_definition(I), is_scm_dual(I)
            if not c == a == b:
                fails.append(f"{s}: criterion {c}, definition {a}, dual {b}")
        R = Ring(n)
        for q in range(1, n):
            for m in stratum_masks(n, q):
                for s in (L.LexSpec.initial(SqfMonomial(R, m)), L.LexSpec.final(SqfMonomial(R, m))):
                    I = L.build(s)
                    count += 1
                    if not (is_scm_definition(I) and is_scm_dual(I)):
                        fails.append(f"{s} not SCM")
    report(6, "SCM criterion = definition = dual; initial and final always SCM, n <= 7", fails, count)


def test_7_sum_intersection_proposition():
    fails, count = [], 0
    for n in range(2, 8):
        R = Ring(n)
        for d in range(1, n):
            for w in stratum_masks(n, d):
                if not w & 1:
                    continue
                for m in stratum_masks(n, d):
                    if m & 1:
                        continue
                    r = L.sum_linear_iff_intersection(SqfMonomial(R, w), SqfMonomial(R, m))
                    count += 1
                    if r.sum_linear != r.intersection_d1_linear:
                        fails.append(f"prop n={n} w={SqfMonomial(R, w)} m={SqfMonomial(R, m)}")
                    if r.intersection_generated_in_d1 != r.intersection_is_segment:
                        fails.append(f"lemma n={n} w={SqfMonomial(R, w)} m={SqfMonomial(R, m)}")
    report(7, "J+K d-linear iff J&K (d+1)-linear; degree-(d+1) generation iff segment, n <= 7", fails, count)


def test_8_depth_bounds_suite():
    fails, count = [], 0
    pred_fail = compl_fail = bound_fail = boundary = 0
    for n in range(3, 8):
        for s in segments(n, range(1, n), include_equal=True):
            I = L.build(s)
            c = L.complement_segment(s)
            count += 1
            if has_linear_resolution(I) != has_linear_resolution(L.build(c)):
                compl_fail += 1
                fails.append(f"complement {s} vs {c}")
            if s.u == s.v:
                continue
            dp = depth(I)
            cm_top = is_cm(I) and dim(I) == n - 2
            if not (dp <= n - 2 and (dp == n - 2) == cm_top):
                bound_fail += 1
                fails.append(f"bound {s}: depth {dp}, CM of dim n-2 {cm_top}")
            if s.u.mask & 1 and not s.v.mask & 1 and s.q >= 2:
                try:
                    p = L.depth_gt_qminus1(s)
                except HypothesisNotMet:
                    boundary += 1
                    continue
                if p != (dp > s.q - 1):
                    pred_fail += 1
                    fails.append(f"depth predicate {s}: says {p}, depth {dp}")
    print(f"depth predicate mismatches {pred_fail}, complement mismatches {compl_fail}, "
          f"bound mismatches {bound_fail}, predicate boundary cases skipped {boundary}")
    report(8, "depth > q-1 predicate, complement lemma, depth <= n-2 with equality condition, n <= 7", fails, count)


def test_9_critical_ideals():
    fails, count = [], 0
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(3, 10)
        R = Ring(n)
        recipe = L.random_critical(rng, n, 8)
        I = L.critical_build(R, recipe)
        count += 1
        if len(I.masks) > 8:
            fails.append(f"{recipe} has too many generators")
        if not has_linear_quotients(I, L.critical_order(R, recipe)):
            fails.append(f"linear quotients {recipe}")
        elif not is_componentwise_linear(I):
            fails.append(f"componentwise linear {recipe}")
    report(9, "200 random critical ideals: linear quotients and componentwise linear", fails, count)


def _random_text(rng, n):
    def mono():
        idx = sorted(rng.sample(range(1, n + 1), rng.randint(1, n)))
        return "".join(f"x{i}" for i in idx) if rng.random() < 0.5 else "{" + ",".join(map(str, idx)) + "}"

    def atom():
        k = rng.randrange(5)
        if k == 0:
            return f"Li({mono()})"
        if k == 1:
            return f"Lf({mono()})"
        if k == 2:
            d = rng.randint(1, n)
            a, b = (sorted(rng.sample(range(1, n + 1), d)) for _ in range(2))
            return "L(" + "".join(f"x{i}" for i in a) + ", " + "".join(f"x{i}" for i in b) + ")"
        if k == 3:
            return f"Inq({rng.randint(1, n)})"
        return "{" + ", ".join(mono() for _ in range(rng.randint(1, 3))) + "}"

    parts = [atom()]
    for _ in range(rng.randint(0, 4)):
        parts += [rng.choice(["+", "&"]), atom()]
    return " ".join(parts)


def test_10_structural_laws():
    fails = []
    rng = random.Random(10)
    counts = dict.fromkeys(["involution", "round trip", "antichain", "parser", "sweep"], 0)
    while counts["involution"] < 500:
        n = rng.randint(2, 9)
        I = MonomialIdeal(Ring(n), minimal_masks(rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 7))))
        if I.is_unit:
            continue
        counts["involution"] += 1
        if alexander_dual(alexander_dual(I)) != I:
            fails.append(f"involution {I}")
        counts["round trip"] += 1
        if ideal_of_complex(complex_of_ideal(I)) != I:
            fails.append(f"ideal->complex->ideal {I}")
        delta = SimplicialComplex.from_faces(Ring(n), [[i for i in range(1, n + 1) if rng.random() < 0.6] for _ in range(3)])
        if delta.facets != {(1 << n) - 1} and complex_of_ideal(ideal_of_complex(delta)) != delta:
            fails.append(f"complex->ideal->complex {delta.to_json()}")
    for n in range(3, 8):
        for s in segments(n, range(1, n), include_equal=True):
            norm = L.normalize(s)
            if norm.spec is not None and norm.spec.kind == "general" and not L.is_completely_lexsegment(norm.spec):
                continue
            comps = L.decompose(s).components
            counts["antichain"] += 1
            if minimal_masks(comps) != comps or comps != decompose(L.build(s)).components:
                fails.append(f"antichain {s}")
    for _ in range(500):
        n = rng.randint(2, 9)
        t = _random_text(rng, n)
        e = parse(t, n)
        counts["parser"] += 1
        if parse(to_text(e), n) != e:
            fails.append(f"parser {t!r}")
    cfg = SweepConfig(max_n=6, degrees=(2, 3), checks=("initial", "final", "completely", "scm", "duality"), seed=5)
    a, b = run_sweep(cfg, jobs=1), run_sweep(cfg, jobs=2)
    counts["sweep"] = len(a["records"])
    if json.dumps(a) != json.dumps(b) or json.dumps(a) != json.dumps(run_sweep(cfg, jobs=1)):
        fails.append("sweep report differs between runs or worker counts")
    short = [k for k, v in counts.items() if v < 500]
    if short:
        fails.append(f"fewer than 500 cases for {short}: {counts}")
    report(10, f"structural laws {counts}", fails, sum(counts.values()))
