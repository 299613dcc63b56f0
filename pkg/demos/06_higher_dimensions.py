"""Bounds and examples beyond planes: symmetric designs, PG(3, q)."""

from blockingsets import (
    elliptic_quadric_ovoid,
    general_design_bound,
    hermitian_surface,
    hyperplane_tangency_bound,
    hyperplane_tfold_bound,
    ovoid_tfold,
    s_secant_bound,
    secant_spectrum,
    semiarc_bound,
    symmetric_design_bound,
)

print("symmetric design bound, PG(2,4):", symmetric_design_bound(21, 5, 1))
print("points vs lines of PG(3,2):", general_design_bound(15, 3, 1))

for q in (2, 3, 4):
    O = elliptic_quadric_ovoid(q)
    print(f"ovoid q={q}: {O.size} points, tangency bound {hyperplane_tangency_bound(3, q)},"
          f" plane sizes {secant_spectrum(O).sizes}")

for t in (2, 3):
    S = ovoid_tfold(3, t)
    print(f"ovoid t-fold q=3 t={t}: {S.size} points, hyperplane bound {hyperplane_tfold_bound(3, 3, t).bound:.2f}")

H = hermitian_surface(4)
print("Hermitian surface q=4:", H.size, "points, plane sizes", secant_spectrum(H).to_json())

print("semiarc bounds n=9:", [round(semiarc_bound(9, s), 2) for s in range(1, 5)])
print("s-secant bound n=9 t=2 s=2:", round(s_secant_bound(9, 2, 2).bound, 2))
