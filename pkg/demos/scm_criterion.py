"""Sequential Cohen-Macaulayness three ways, over every completely lexsegment ideal in 6 variables."""

from collections import Counter

from lexideal import lexseg as L
from lexideal.homology import is_scm_definition, is_scm_dual
from lexideal.monomials import Ring, stratum_masks

n = 6
R = Ring(n)
tally = Counter()
examples = {}
for q in range(2, n):
    S = stratum_masks(n, q)
    for i, u in enumerate(S):
        for v in S[i + 1:]:
            if not u & 1 or v & 1:
                continue
            s = L.LexSpec.from_masks(R, u, v)
            if s.kind != "general" or not L.is_completely_lexsegment(s):
                continue
            I = L.build(s)
            verdicts = (L.scm_characterization(s), is_scm_definition(I), is_scm_dual(I))
            tally[verdicts] += 1
            examples.setdefault(verdicts, s)

print("(intersection test, definition, dual) -> count, example")
for verdicts, count in sorted(tally.items()):
    print(f"  {verdicts}: {count:4d}  {examples[verdicts]}")

s = examples.get((True, True, True)) or next(iter(examples.values()))
print(f"\nfor {s}: the intersection test looks at")
print(" ", [g.support for g in L.scm_intersection(s).gens])
