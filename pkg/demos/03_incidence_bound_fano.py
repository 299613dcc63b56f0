"""The spectral incidence bound on the Fano plane.

For a 2-(v,k,lambda) design with b blocks and replication r,
    |i(S,L) - r|S||L|/b| <= sqrt(r - lambda) sqrt(|S||L|(1-|S|/v)(1-|L|/b)).
Everything is compared with exact fractions.
"""

from blockingsets import design_from_geometry, field_of_order, mixing_bound_check, pg_create
from blockingsets import mixing_scan_exhaustive, mixing_scan_random

fano = design_from_geometry(pg_create(2, field_of_order(2)), 1)
print(fano, "params (v, b, r, k, lambda) =", fano.params)

# one point and the three lines through it: the bound is tight
rep = mixing_bound_check(fano, [0], fano.blocks_through[0])
print("i(S,L) =", rep.incidences, " expected", rep.expected, " deviation", rep.deviation, " rhs", rep.rhs)

scan = mixing_scan_exhaustive(fano)
summary = scan.to_json(max_listed=3)
print("all pairs:", summary["pairs"], " violations:", summary["violations"],
      " tight non-degenerate pairs:", summary["nondegenerate_equalities"],
      " irregular ones:", summary["regularity_failures"])

pg33 = design_from_geometry(pg_create(3, field_of_order(3)), 2)
print(pg33, "random scan:", mixing_scan_random(pg33, 2000, seed=1).to_json(max_listed=0)["violations"], "violations")
