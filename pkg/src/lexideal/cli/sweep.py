"""Cross-verification sweep: closed forms against brute-force oracles.

Work is split into ``(check, n)`` tasks; each task is a pure function of the
configuration, so results are identical for any number of workers once
merged by key.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .. import lexseg as L
from ..complexes import complex_of_ideal, facet_decomposition, ideal_of_complex, multiplicity
from ..errors import GuardExceeded, HypothesisNotMet, NotCompletelyLexsegment
from ..homology import (
    betti_hochster,
    betti_taylor,
    depth,
    depth_via_skeletons,
    dim,
    has_linear_resolution,
    homology_field,
    is_cm,
    is_componentwise_linear,
    is_scm_definition,
    is_scm_dual,
)
from ..ideals import MonomialIdeal, alexander_dual, graded_component, has_linear_quotients, intersect
from ..monomials import Ring, SqfMonomial, stratum_masks

CHECKS = (
    "initial",
    "final",
    "completely",
    "invariants",
    "betti",
    "scm",
    "intersection",
    "depth-gt",
    "complement",
    "bounds",
    "duality",
    "critical",
)


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 6
    degrees: tuple[int, int] = (2, 4)
    checks: tuple[str, ...] = CHECKS
    seed: int = 0
    field: int = 0
    random_cases: int = 50

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "degrees": list(self.degrees),
            "checks": list(self.checks),
            "seed": self.seed,
            "field": "rational" if self.field == 0 else f"fp:{self.field}",
            "random_cases": self.random_cases,
        }


def _comps(dec) -> list[list[int]]:
    return dec.to_json()["components"]


def _record(check, instance, source, computed, oracle, ok) -> dict:
    return {
        "check": check,
        "instance": instance,
        "expected_source": source,
        "computed": computed,
        "oracle": oracle,
        "status": "pass" if ok else "fail",
    }


def _segments(n: int, degrees: tuple[int, int], include_equal: bool = False):
    lo, hi = degrees
    R = Ring(n)
    for q in range(max(1, lo), min(n - 1, hi) + 1):
        S = stratum_masks(n, q)
        for i, u in enumerate(S):
            for v in S[i if include_equal else i + 1:]:
                yield L.LexSpec.from_masks(R, u, v)


def _check_initial(n, cfg, rng):
    out, disc = [], []
    lo, hi = cfg.degrees
    R = Ring(n)
    for q in range(max(2, lo), min(n - 1, hi) + 1):
        for v in stratum_masks(n, q):
            if v & 1:
                continue
            s = L.LexSpec.initial(SqfMonomial(R, v))
            got = L.decompose_initial(s)
            want = facet_decomposition(complex_of_ideal(L.build(s)))
            out.append(_record("initial", str(s), "closed form", _comps(got), _comps(want), got == want))
            rep = L.family_report(s)
            if rep.differs:
                disc.append({"instance": str(s), **rep.to_json()})
    return out, disc


def _check_final(n, cfg, rng):
    out, disc = [], []
    lo, hi = cfg.degrees
    R = Ring(n)
    for q in range(max(2, lo), min(n - 1, hi) + 1):
        for u in stratum_masks(n, q):
            if not u & 1 or u == (1 << q) - 1:
                continue
            s = L.LexSpec.final(SqfMonomial(R, u))
            got = L.decompose_final(s)
            want = facet_decomposition(complex_of_ideal(L.build(s)))
            out.append(_record("final", str(s), "closed form", _comps(got), _comps(want), got == want))
            rep = L.family_report(s)
            if rep.differs:
                disc.append({"instance": str(s), **rep.to_json()})
    return out, disc


def _check_completely(n, cfg, rng):
    out, disc = [], []
    for s in _segments(n, cfg.degrees):
        if not s.u.mask & 1 or s.v.mask & 1 or s.kind != "general":
            continue
        if not L.is_completely_lexsegment(s):
            continue
        I = L.build(s)
        got = L.decompose_completely(s)
        want = facet_decomposition(complex_of_ideal(I))
        out.append(_record("completely", str(s), "closed form", _comps(got), _comps(want), got == want))
        meet = intersect(L.build(L.LexSpec.initial(s.v)), L.build(L.LexSpec.final(s.u)))
        out.append(_record("completely", str(s) + " = Li(v) & Lf(u)", "identity",
                           True, meet == I, meet == I))
        rep = L.family_report(s)
        if rep.differs:
            disc.append({"instance": str(s), **rep.to_json()})
    return out, disc


def _check_invariants(n, cfg, rng):
    out = []
    for s in _segments(n, cfg.degrees):
        try:
            cf = L.invariants_closed_form(s)
        except (HypothesisNotMet, NotCompletelyLexsegment):
            continue
        I = L.build(s)
        d, e = dim(I), multiplicity(complex_of_ideal(I))
        out.append(_record("invariants", f"dim {s}", "formula", cf.dim, d, cf.dim == d))
        if cf.depth is not None:
            dp, sk = depth(I), depth_via_skeletons(I)
            out.append(_record("invariants", f"depth {s}", "formula", cf.depth, [dp, sk],
                               cf.depth == dp == sk))
        if cf.multiplicity is not None:
            out.append(_record("invariants", f"e {s}", "formula", cf.multiplicity, e, cf.multiplicity == e))
    return out, []


def _check_betti(n, cfg, rng):
    out = []
    R = Ring(n)
    for k in range(cfg.random_cases):
        I = MonomialIdeal.from_masks(R, [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 8))])
        if I.is_unit:
            continue
        a, b = betti_hochster(I), betti_taylor(I)
        inst = "{" + ", ".join("x" + "x".join(map(str, g.support)) for g in I.gens) + "}"
        out.append(_record("betti", inst, "hochster", a.to_json(), b.to_json(), a == b))
    return out, []


def _check_scm(n, cfg, rng):
    out = []
    for s in _segments(n, cfg.degrees):
        I = L.build(s)
        if s.kind in ("initial", "final"):
            ok = is_scm_dual(I) and is_scm_definition(I)
            out.append(_record("scm", str(s), "always SCM", True, ok, ok))
            continue
        if not s.u.mask & 1 or s.v.mask & 1 or not L.is_completely_lexsegment(s):
            continue
        c, a, b = L.scm_characterization(s), is_scm_definition(I), is_scm_dual(I)
        out.append(_record("scm", str(s), "intersection criterion", c, [a, b], c == a == b))
    return out, []


def _check_intersection(n, cfg, rng):
    out = []
    R = Ring(n)
    lo, hi = cfg.degrees
    for d in range(max(1, lo), min(n - 1, hi) + 1):
        for w in stratum_masks(n, d):
            if not w & 1:
                continue
            for m in stratum_masks(n, d):
                if m & 1:
                    continue
                r = L.sum_linear_iff_intersection(SqfMonomial(R, w), SqfMonomial(R, m))
                inst = f"w={SqfMonomial(R, w)} m={SqfMonomial(R, m)}"
                out.append(_record("intersection", inst, "sum linear", r.sum_linear,
                                   r.intersection_d1_linear, r.sum_linear == r.intersection_d1_linear))
                out.append(_record("intersection", inst + " lemma", "generated in d+1",
                                   r.intersection_generated_in_d1, r.intersection_is_segment,
                                   r.intersection_generated_in_d1 == r.intersection_is_segment))
    return out, []


def _check_depth_gt(n, cfg, rng):
    out = []
    for s in _segments(n, cfg.degrees):
        if not s.u.mask & 1 or s.v.mask & 1:
            continue
        actual = depth(L.build(s)) > s.q - 1
        try:
            p = L.depth_gt_qminus1(s)
        except HypothesisNotMet as exc:
            rec = _record("depth-gt", str(s), "predicate", None, actual, True)
            rec["status"] = "skipped"
            rec["reason"] = str(exc)
            out.append(rec)
            continue
        out.append(_record("depth-gt", str(s), "predicate", p, actual, p == actual))
    return out, []


def _check_complement(n, cfg, rng):
    out = []
    for s in _segments(n, cfg.degrees, include_equal=True):
        c = L.complement_segment(s)
        a, b = has_linear_resolution(L.build(s)), has_linear_resolution(L.build(c))
        out.append(_record("complement", f"{s} ~ {c}", "linear", a, b, a == b))
    return out, []


def _check_bounds(n, cfg, rng):
    out = []
    for s in _segments(n, cfg.degrees):
        I = L.build(s)
        dp = depth(I)
        cm_top = is_cm(I) and dim(I) == n - 2
        ok = s.q - 1 <= dp <= n - 2 and (dp == n - 2) == cm_top
        out.append(_record("bounds", str(s), "q-1 <= depth <= n-2, equality iff CM of dim n-2",
                           [s.q - 1, n - 2, cm_top], dp, ok))
    return out, []


def _check_duality(n, cfg, rng):
    out = []
    R = Ring(n)
    for k in range(cfg.random_cases):
        I = MonomialIdeal.from_masks(R, [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 8))])
        if I.is_unit:
            continue
        inst = "{" + ", ".join("x" + "x".join(map(str, g.support)) for g in I.gens) + "}"
        back = alexander_dual(alexander_dual(I))
        delta = complex_of_ideal(I)
        ok = back == I and ideal_of_complex(delta) == I
        out.append(_record("duality", inst, "involution", back.to_json()["gens"], I.to_json()["gens"], ok))
    for s in _segments(n, cfg.degrees):
        if not s.u.mask & 1 or s.v.mask & 1 or not L.is_completely_lexsegment(s):
            continue
        dual = alexander_dual(L.build(s))
        got = L.dual_component_n_minus_q(s)
        want = graded_component(dual, n - s.q)
        out.append(_record("duality", f"dual[n-q] {s}", "closed form", got.to_json()["gens"],
                           want.to_json()["gens"], got == want))
        ok = L.dual_lower_components_linear(s)
        out.append(_record("duality", f"dual[<n-q] {s}", "linear", True, ok, ok))
    return out, []


def _check_critical(n, cfg, rng):
    out = []
    R = Ring(n)
    for k in range(cfg.random_cases):
        recipe = L.random_critical(rng, n, 8)
        I = L.critical_build(R, recipe)
        lq = has_linear_quotients(I, L.critical_order(R, recipe))
        cwl = is_componentwise_linear(I)
        inst = "{" + ", ".join("x" + "x".join(map(str, g.support)) for g in L.critical_order(R, recipe)) + "}"
        out.append(_record("critical", inst, "linear quotients, componentwise linear", [lq, cwl], None, lq and cwl))
    return out, []


_RUNNERS = {
    "initial": (_check_initial, 4),
    "final": (_check_final, 4),
    "completely": (_check_completely, 3),
    "invariants": (_check_invariants, 3),
    "betti": (_check_betti, 2),
    "scm": (_check_scm, 3),
    "intersection": (_check_intersection, 2),
    "depth-gt": (_check_depth_gt, 3),
    "complement": (_check_complement, 3),
    "bounds": (_check_bounds, 3),
    "duality": (_check_duality, 2),
    "critical": (_check_critical, 3),
}


def _run_task(args) -> tuple[str, int, list[dict], list[dict]]:
    check, n, cfg = args
    rng = random.Random(f"{cfg.seed}:{check}:{n}")
    fn = _RUNNERS[check][0]
    try:
        if cfg.field:
            with homology_field(cfg.field):
                recs, disc = fn(n, cfg, rng)
        else:
            recs, disc = fn(n, cfg, rng)
    except GuardExceeded as exc:
        recs = [{"check": check, "instance": f"n={n}", "expected_source": None, "computed": None,
                 "oracle": None, "status": "skipped", "reason": str(exc)}]
        disc = []
    return check, n, recs, disc


def run_sweep(cfg: SweepConfig, jobs: int = 1) -> dict:
    for c in cfg.checks:
        if c not in _RUNNERS:
            raise ValueError(f"unknown check {c!r}; choose from {', '.join(CHECKS)}")
    tasks = [(c, n, cfg) for c in cfg.checks for n in range(_RUNNERS[c][1], cfg.max_n + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    results.sort(key=lambda r: (CHECKS.index(r[0]), r[1]))
    records, discrepancies = [], []
    summary = {c: {"pass": 0, "fail": 0, "skipped": 0} for c in cfg.checks}
    for check, n, recs, disc in results:
        for r in recs:
            summary[check][r["status"]] += 1
            records.append(r)
        discrepancies.extend(disc)
    return {
        "config": cfg.to_json(),
        "summary": summary,
        "all_pass": all(s["fail"] == 0 for s in summary.values()),
        "discrepancies": discrepancies,
        "records": records,
    }
