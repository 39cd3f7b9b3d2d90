"""
Jet orbits of 2x2 matrices and their classes
=============================================

Level-l jets of 2x2 matrices split by Smith form into finitely many orbits.
Each orbit has a class in L; plugging in L = q must count F_q-points.
"""

from detzeta.lring import LClass, format_factored, lclass_eval
from detzeta.orbits import class_orbit, enumerate_orbits
from detzeta.oracle import count_orbits

m, n, l = 2, 2, 1

# every orbit at level 1, with its class
for lam in enumerate_orbits(m, n, l):
    print(f"{str(lam):>9}  {format_factored(class_orbit(m, n, lam))}")

# the classes add up to the whole jet space
total = sum((class_orbit(m, n, lam) for lam in enumerate_orbits(m, n, l)), LClass(0))
print("sum of classes:", total)

# brute-force count over F_3 and compare orbit by orbit
census = count_orbits(m, n, l, 3)
for lam in enumerate_orbits(m, n, l):
    print(f"{str(lam):>9}  formula {lclass_eval(class_orbit(m, n, lam), 3):>5}  counted {census[lam]:>5}")
