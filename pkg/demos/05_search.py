"""How large can a minimal t-fold blocking set be in a small plane?

Exhaustive branch and bound settles PG(2,2) and PG(2,3); hill climbing
with restarts explores bigger planes.
"""

import time

from blockingsets import exhaustive_max_minimal, field_of_order, heuristic_max_minimal, pavese_2fold, pg_create
from blockingsets.search import plane_bound_cap

for q in (2, 3):
    P = pg_create(2, field_of_order(q))
    for t in range(1, q + 1):
        start = time.perf_counter()
        res = exhaustive_max_minimal(P, t)
        print(f"PG(2,{q}) t={t}: max {res.best_size} (bound allows {plane_bound_cap(P, t)}),"
              f" {res.explored} nodes, {time.perf_counter() - start:.2f} s")

for q, t in [(4, 1), (4, 2), (5, 1), (5, 2)]:
    P = pg_create(2, field_of_order(q))
    res = heuristic_max_minimal(P, t, budget=4000, seed=0)
    print(f"PG(2,{q}) t={t}: heuristic best {res.best_size}, bound allows {plane_bound_cap(P, t)}")

# starting the climb from a known construction
S = pavese_2fold(9)
res = heuristic_max_minimal(S.geometry, 2, budget=10000, seed=42, initial=S)
print("PG(2,9) t=2 from the 36-point set:", res.best_size)
