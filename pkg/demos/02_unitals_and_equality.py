"""The three sets that meet the upper bound exactly.

A minimal t-fold blocking set in a plane of order n has at most
    n sqrt(4tn - (3t+1)(t-1)) / 2 + (t-1)n/2 + t
points.  For prime power n equality happens only for a unital (t = 1),
a Baer subplane complement (t = n - sqrt(n)) and the plane minus a point
(t = n).
"""

from blockingsets import (
    baer_complement,
    classify_equality,
    hermitian_curve,
    main_bound,
    plane_minus_point,
    variance_slack,
    verify_point_set,
)

for q in (4, 9):
    for S, t in [(hermitian_curve(q), 1), (baer_complement(q), q - int(q**0.5))]:
        rep = verify_point_set(S, t)
        print(f"q={q} {S.provenance['construction']:16s} t={t}: size {S.size}, bound {rep.bound:g},"
              f" slack {rep.slack}, spectrum {rep.spectrum.to_json()}, case {rep.equality_case.value}")
        print("   variance slack:", variance_slack(S, t))

S = plane_minus_point(5)
print("plane minus point, q=5:", S.size, "=", main_bound(5, 5).bound)

print("\nwhich (q, t) admit equality, q = 16:")
print([(t, classify_equality(16, t).value) for t in range(1, 17) if classify_equality(16, t)])
print("bound table for q = 4:", [round(main_bound(4, t).bound, 3) for t in range(1, 5)])
