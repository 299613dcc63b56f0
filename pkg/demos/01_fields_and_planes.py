"""Finite fields and the projective plane PG(2, q).

Elements of GF(p^k) are integers 0..q-1 (base-p digits of a polynomial).
Points are normalized coordinate vectors, first nonzero entry 1.
"""

from blockingsets import field_of_order, pg_create, span_line, theta

F = field_of_order(9)
print(F, "modulus (low degree first):", F.modulus, "generator:", F.generator)
print("3 * 7 =", F.mul(3, 7), "  7^-1 =", F.inv(7), "  7^4 =", F.pow(7, 4))

# the norm x -> x^(sqrt(q)+1) lands in the subfield GF(3)
print("norms:", [F.norm(a) for a in range(9)])

P = pg_create(2, F)
print(P, "has", P.num_points, "points =", theta(3, 9))
print("first points:", [p.coords for p in P.points[:5]])

# any two points span a unique line with q+1 = 10 points
a, b = P.points[3], P.points[40]
L = span_line(P, a, b)
print("line through", a.coords, "and", b.coords, "has coefficients", L.coeffs,
      "and", P.blocks[L.index].bit_count(), "points")

# unscaled coordinates are normalized on lookup
print("index of (2, 4, 6):", P.point_index([2, 4, 6]), "=", P.point(P.normalize([2, 4, 6])).index)
