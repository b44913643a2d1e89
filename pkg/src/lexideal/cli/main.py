"""``lexideal`` command line.

Every command prints one JSON document (or a plain table with ``--pretty``).
Exit codes: 0 computed, 1 property false or sweep failure, 2 input error,
3 guard exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import re
import sys

from .. import lexseg as L
from ..complexes import complex_of_ideal, multiplicity
from ..errors import GuardExceeded, HypothesisNotMet, InputError, LexIdealError, NotCompletelyLexsegment
from ..homology import (
    betti_hochster,
    depth,
    dim,
    has_linear_resolution,
    homology_field,
    is_cm,
    is_componentwise_linear,
    is_scm_definition,
    is_scm_dual,
    linear_components,
    pd,
    regularity,
)
from ..ideals import alexander_dual, decompose as oracle_decompose
from ..monomials import Ring, is_segment_masks, shadow_masks, support_of
from .parser import as_spec, evaluate, parse
from .sweep import CHECKS, SweepConfig, run_sweep

PROPERTIES = ("complete", "linres", "cwl", "cm", "scm", "depth-gt", "bounds")


def _field(text: str) -> int:
    if text == "rational":
        return 0
    if text.startswith("fp:"):
        p = int(text[3:])
        if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
            raise argparse.ArgumentTypeError(f"{p} is not prime")
        return p
    raise argparse.ArgumentTypeError("expected 'rational' or 'fp:PRIME'")


def _degrees(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("expected LO..HI")
    return int(lo), int(hi)


def _gens(I) -> list[list[int]]:
    return I.to_json()["gens"]


def _closed_form(spec: L.LexSpec) -> dict:
    norm = L.normalize(spec)
    if norm.spec is None:
        return {"theorem": "principal", "components": L.decompose(spec).to_json()["components"]}
    theorem, _ = L.literal_families(norm.spec)
    rep = L.family_report(norm.spec)
    return {
        "theorem": theorem,
        "normalized": str(norm.spec),
        "components": L.decompose(spec).to_json()["components"],
        "literal_vs_antichain": rep.to_json(),
    }


def cmd_decompose(args, ring, expr) -> tuple[dict, int]:
    I = evaluate(expr, ring)
    out: dict = {"n": ring.n, "ideal": _gens(I)}
    want = oracle_decompose(I)
    out["oracle"] = want.to_json()["components"]
    spec = as_spec(expr, ring)
    out["closed_form"] = None
    out["agrees"] = None
    if spec is not None:
        try:
            cf = _closed_form(spec)
        except (NotCompletelyLexsegment, HypothesisNotMet) as exc:
            out["closed_form_error"] = str(exc)
        else:
            out["closed_form"] = cf
            out["agrees"] = cf["components"] == out["oracle"]
    return out, 0


def cmd_invariants(args, ring, expr) -> tuple[dict, int]:
    I = evaluate(expr, ring)
    computed = {
        "dim": dim(I),
        "depth": depth(I),
        "pd": pd(I),
        "reg": regularity(I),
        "multiplicity": multiplicity(complex_of_ideal(I)),
    }
    formula: dict = {}
    spec = as_spec(expr, ring)
    if spec is not None:
        try:
            cf = L.invariants_closed_form(spec)
            formula = {"dim": cf.dim, "depth": cf.depth, "multiplicity": cf.multiplicity}
        except (HypothesisNotMet, NotCompletelyLexsegment):
            pass
    inv = {}
    for key, value in computed.items():
        f = formula.get(key)
        if f is None:
            inv[key] = {"value": value, "source": "computed"}
        else:
            inv[key] = {"value": f, "source": "formula", "computed": value, "agrees": f == value}
    betti = betti_hochster(I)
    out = {
        "n": ring.n,
        "ideal": _gens(I),
        "invariants": inv,
        "betti": betti.to_json(),
        "cm": is_cm(I),
        "scm": is_scm_dual(I),
    }
    return out, 0


def _require_spec(expr, ring) -> L.LexSpec:
    spec = as_spec(expr, ring)
    if spec is None:
        raise InputError("this property needs a single segment atom")
    return spec


def cmd_check(args, ring, expr) -> tuple[dict, int]:
    prop = args.property
    I = evaluate(expr, ring)
    evidence: dict = {}
    if prop == "complete":
        spec = _require_spec(expr, ring)
        shadows = L.iterated_shadows(spec)
        evidence["shadows"] = [{"degree": d, "lexsegment": ok} for d, ok in shadows]
        verdict = all(ok for _, ok in shadows)
    elif prop == "linres":
        verdict = has_linear_resolution(I)
        evidence["betti"] = betti_hochster(I, "ideal").to_json()
    elif prop == "cwl":
        comps = linear_components(I)
        evidence["components"] = {str(j): ok for j, ok in sorted(comps.items())}
        verdict = is_componentwise_linear(I)
    elif prop == "cm":
        evidence = {"depth": depth(I), "dim": dim(I)}
        verdict = is_cm(I)
    elif prop == "scm":
        a, b = is_scm_definition(I), is_scm_dual(I)
        evidence = {"definition": a, "dual_componentwise_linear": b}
        spec = as_spec(expr, ring)
        if spec is not None:
            try:
                evidence["intersection_criterion"] = L.scm_characterization(spec)
            except (HypothesisNotMet, NotCompletelyLexsegment) as exc:
                evidence["intersection_criterion"] = None
                evidence["criterion_skipped"] = str(exc)
        evidence["agree"] = len({v for k, v in evidence.items() if isinstance(v, bool)}) == 1
        verdict = a
    elif prop == "depth-gt":
        spec = _require_spec(expr, ring)
        dp = depth(I)
        verdict = dp > spec.q - 1
        evidence = {"depth": dp, "q": spec.q}
        try:
            evidence["literal_predicate"] = L.depth_gt_qminus1(spec)
            evidence["repaired_predicate"] = L.depth_gt_qminus1_repaired(spec)
        except HypothesisNotMet as exc:
            evidence["predicate_skipped"] = str(exc)
    else:  # bounds
        spec = _require_spec(expr, ring)
        dp = depth(I)
        n, q = ring.n, spec.q
        cm_top = is_cm(I) and dim(I) == n - 2
        evidence = {
            "depth": dp,
            "lower": q - 1,
            "upper": n - 2,
            "cm_of_dim_n_minus_2": cm_top,
            "equality_condition_holds": (dp == n - 2) == cm_top,
        }
        verdict = q - 1 <= dp <= n - 2
    return {"n": ring.n, "property": prop, "verdict": verdict, "evidence": evidence}, 0 if verdict else 1


def cmd_dual(args, ring, expr) -> tuple[dict, int]:
    I = evaluate(expr, ring)
    return {"n": ring.n, "ideal": _gens(I), "dual": _gens(alexander_dual(I))}, 0


def cmd_shadow(args, ring, expr) -> tuple[dict, int]:
    I = evaluate(expr, ring)
    if len(I.degrees) > 1:
        raise InputError("shadow needs generators of a single degree")
    sh = shadow_masks(I.masks, ring.n)
    key = sorted(sh, key=lambda m: support_of(m))
    return {
        "n": ring.n,
        "ideal": _gens(I),
        "shadow": [list(support_of(m)) for m in key],
        "lexsegment": is_segment_masks(sh, ring.n) if sh else True,
    }, 0


def cmd_sweep(args) -> tuple[dict, int]:
    checks = tuple(c.strip() for c in args.checks.split(",")) if args.checks else CHECKS
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise InputError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)}")
    cfg = SweepConfig(max_n=args.max_n, degrees=args.degrees, checks=checks, seed=args.seed, field=args.field)
    report = run_sweep(cfg, jobs=args.jobs)
    return report, 0 if report["all_pass"] else 1


_FLAT = re.compile(r"\[[^\[\]{}\"]*\]")


def dump_json(data) -> str:
    """Indented JSON with innermost scalar arrays kept on one line."""
    text = json.dumps(data, indent=2)
    return _FLAT.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(0)[1:-1].split(",") if x.strip()) + "]", text)


def _pretty(data, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(data, dict):
        lines = []
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (int, bool)) for x in v):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(data, list):
        return "\n".join(f"{pad}- {json.dumps(x)}" for x in data)
    return pad + json.dumps(data)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    common.add_argument("--field", type=_field, default=0, help="rational (default) or fp:PRIME")
    common.add_argument("--out", help="write the output to this file")

    p = argparse.ArgumentParser(prog="lexideal", description="Squarefree lexsegment ideal toolkit")
    sub = p.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("decompose", "closed-form and oracle minimal primary decomposition"),
        ("invariants", "dim, depth, pd, reg, multiplicity, Betti table, CM/SCM"),
        ("check", "test a property"),
        ("dual", "Alexander dual"),
        ("shadow", "shadow of an equigenerated generator set"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("--n", type=int, required=True, help="number of variables")
        sp.add_argument("expr", help='ideal expression, e.g. "Li(x2x3) & Lf(x1x3)"')
        if name == "check":
            sp.add_argument("--property", choices=PROPERTIES, required=True)
    sw = sub.add_parser("sweep", parents=[common], help="cross-verify closed forms against oracles")
    sw.add_argument("--max-n", type=int, default=6)
    sw.add_argument("--degrees", type=_degrees, default=(2, 4), help="LO..HI")
    sw.add_argument("--checks", help=f"comma-separated subset of {','.join(CHECKS)}")
    sw.add_argument("--seed", type=int, default=0)
    sw.add_argument("--jobs", type=int, default=1)
    return p


COMMANDS = {
    "decompose": cmd_decompose,
    "invariants": cmd_invariants,
    "check": cmd_check,
    "dual": cmd_dual,
    "shadow": cmd_shadow,
}


def run(argv: list[str] | None = None) -> tuple[dict, int, argparse.Namespace]:
    args = build_parser().parse_args(argv)
    field_ctx = homology_field(args.field) if args.field else contextlib.nullcontext()
    try:
        with field_ctx:
            if args.command == "sweep":
                data, code = cmd_sweep(args)
            else:
                ring = Ring(args.n)
                expr = parse(args.expr, args.n)
                data, code = COMMANDS[args.command](args, ring, expr)
    except GuardExceeded as exc:
        return {"error": type(exc).__name__, "message": str(exc)}, 3, args
    except (LexIdealError, ValueError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        if hasattr(exc, "offset"):
            err["offset"] = exc.offset
        return err, 2, args
    return data, code, args


def main(argv: list[str] | None = None) -> int:
    data, code, args = run(argv)
    text = _pretty(data) if getattr(args, "pretty", False) else dump_json(data)
    text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
