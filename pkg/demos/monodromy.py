"""
Monodromy zeta functions and the two conjectures
================================================

Points of the exceptional divisor of the blow-up of Z_r are labelled by the
rank i - 1 of their image and by an orbit label q (or none).
"""

from detzeta.orbits import PointClass
from detzeta.zeta import (
    check_holomorphy,
    check_monodromy_conjecture,
    eigenvalue_set,
    monodromy_zeta_at_point,
    point_classes,
)

for p in point_classes(3, 3, 2):
    print(f"i={p.i} q={p.q}:  Z_mon = {monodromy_zeta_at_point(p)}")

print("eigenvalues (as k/a):", [str(x) for x in eigenvalue_set(3, 3, 2)])
print("eigenvalues for r=3 :", [str(x) for x in eigenvalue_set(4, 4, 3)])

rep = check_monodromy_conjecture(3, 3, 2)
for w in rep.witnesses:
    print(f"pole {w['s0']} -> {w['eigenvalue']}  witnessed at {w['point']}")
print("monodromy:", rep.verdict_text)

# whole grid up to 5x5
grid = [(m, n, r) for m in range(1, 6) for n in range(m, 6) for r in range(1, m + 1)]
fails = [s for s in grid if not (check_monodromy_conjecture(*s).verdict and check_holomorphy(*s, 6).verdict)]
print(f"{len(grid)} shapes checked, failures: {fails}")

# the same check insists the exponent sign does not matter
p = PointClass(3, 3, 2, 1, 3)
print(monodromy_zeta_at_point(p), "|", monodromy_zeta_at_point(p, sign=-1))
