"""Three depth statements about lexsegment ideals that fail, and a predicate that replaces one of them.

Each claim is compared with the depth computed from Betti numbers.
"""

from lexideal import lexseg as L
from lexideal.errors import HypothesisNotMet
from lexideal.homology import betti_taylor, depth, dim, has_linear_resolution, is_cm
from lexideal.monomials import Ring, stratum_masks


def depth_report(s: L.LexSpec) -> str:
    I = L.build(s)
    return f"depth {depth(I)} (Taylor {s.n - betti_taylor(I).pd}), q-1 = {s.q - 1}"


R5 = Ring(5)

s = L.LexSpec.segment(R5.monomial(1, 2, 4), R5.monomial(2, 3, 4))
print("1. depth > q-1 predicate")
print(f"   {s}: predicate {L.depth_gt_qminus1(s)}, repaired {L.depth_gt_qminus1_repaired(s)}, {depth_report(s)}")

s = L.LexSpec.segment(R5.monomial(1, 4), R5.monomial(2, 4))
c = L.complement_segment(s)
print("2. linear resolution is not preserved by complementing the segment")
print(f"   {s}: linear {has_linear_resolution(L.build(s))}")
print(f"   {c}: linear {has_linear_resolution(L.build(c))}")


def depth_vs_cm(s: L.LexSpec) -> bool:
    I = L.build(s)
    return (depth(I) == s.n - 2) == (is_cm(I) and dim(I) == s.n - 2)


print("3. depth = n-2 vs Cohen-Macaulay of dimension n-2")
S = stratum_masks(5, 2)
segs = [L.LexSpec.from_masks(R5, u, v) for i, u in enumerate(S) for v in S[i + 1:]]
bad = [s for s in segs if not depth_vs_cm(s)]
for s in bad[:3]:
    I = L.build(s)
    print(f"   {s}: depth {depth(I)}, dim {dim(I)}, CM {is_cm(I)}")
print(f"   {len(bad)} such segments of degree 2 in 5 variables")

print("\nrepaired predicate against homology, n <= 6")
agree = total = 0
for n in range(3, 7):
    R = Ring(n)
    for q in range(2, n):
        S = stratum_masks(n, q)
        for i, u in enumerate(S):
            for v in S[i + 1:]:
                if not u & 1 or v & 1:
                    continue
                s = L.LexSpec.from_masks(R, u, v)
                try:
                    p = L.depth_gt_qminus1_repaired(s)
                except HypothesisNotMet:
                    continue
                total += 1
                agree += p == (depth(L.build(s)) > q - 1)
print(f"   {agree}/{total} agree")
