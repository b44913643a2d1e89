"""Minimal primes of lexsegment ideals: closed forms next to the facet oracle.

Run with ``python demos/decomposition_walkthrough.py``.
"""

from lexideal import lexseg as L
from lexideal.errors import HypothesisNotMet
from lexideal.complexes import complex_of_ideal, facet_decomposition
from lexideal.homology import depth, dim
from lexideal.monomials import Ring, support_of


def show(spec: L.LexSpec) -> None:
    I = L.build(spec)
    closed = L.decompose(spec)
    oracle = facet_decomposition(complex_of_ideal(I))
    primes = sorted((support_of(c) for c in closed.components), key=lambda s: (len(s), s))
    print(f"{spec}  n={spec.n}")
    print(f"  generators: {[g.support for g in I.gens]}")
    print(f"  primes:     {primes}")
    print(f"  matches oracle: {closed == oracle}")
    norm = L.normalize(spec)
    if norm.spec is not None and norm.spec != spec:
        print(f"  computed through {norm.spec} on variables {norm.labels}")
    try:
        cf = L.invariants_closed_form(spec)
        print(f"  dim {cf.dim} (homology {dim(I)}), depth {cf.depth} (homology {depth(I)}), e {cf.multiplicity}")
    except HypothesisNotMet as exc:
        print(f"  no invariant formula here: {exc}")
    print()


R = Ring(5)
show(L.LexSpec.initial(R.monomial(2, 3, 5)))
show(L.LexSpec.final(R.monomial(1, 3, 4)))
show(L.LexSpec.segment(R.monomial(1, 3, 4), R.monomial(2, 3, 4)))

# x1 divides both endpoints: strip it and solve the smaller problem
R6 = Ring(6)
show(L.LexSpec.segment(R6.monomial(1, 3, 4), R6.monomial(1, 4, 5)))

# a segment that is not completely lexsegment has no closed form
s = L.LexSpec.segment(R.monomial(1, 4), R.monomial(2, 3))
print(s, "completely lexsegment:", L.is_completely_lexsegment(s))
