"""Large minimal t-fold blocking sets built from the Hermitian curve.

Take the curve H in PG(2, q), q square, a point P on it, t-1 secants
through P and their poles under the unitary polarity.  The union is a
minimal t-fold blocking set.  Replacing P by the rest of its tangent gives
a 2-fold set one point larger when q = 9.
"""

from blockingsets import hermitian_tfold, main_bound, pavese_2fold, verify_point_set
from blockingsets.io import dump_point_set

for q in (4, 9, 16):
    r = int(q**0.5)
    sizes = [hermitian_tfold(q, t).size for t in range(2, r + 2)]
    bounds = [round(main_bound(q, t).bound, 1) for t in range(2, r + 2)]
    print(f"q={q}: sizes for t=2..{r + 1}: {sizes}  bounds: {bounds}")

S = hermitian_tfold(9, 3, line_choice=[1, 5])
print("custom line choice:", S.provenance, S.size)

P = pavese_2fold(9)
print("pavese q=9:", P.size, "vs", hermitian_tfold(9, 2).size)
print(verify_point_set(P, 2).to_json())
print(dump_point_set(hermitian_tfold(4, 2))[:120], "...")
