"""
Zeta functions of the rank < 2 locus in 3x3 matrices
====================================================

The locus Z_2 of 3x3 matrices of rank at most one is resolved by two
blow-ups.  Everything below is computed from jet orbit classes.
"""

from detzeta.lring import format_factored
from detzeta.strata import all_strata, determinantal_resolution
from detzeta.zeta import (
    motivic_zeta_rational,
    topological_zeta,
    topological_zeta_from_strata,
    twisted_topological_zeta,
)

m, n, r = 3, 3, 2
print("(N, nu) per divisor:", determinantal_resolution(m, n, r).pairs)

# open strata of the exceptional divisors and their Euler characteristics
for s in all_strata(m, n, r):
    print(f"J={sorted(s.J)}  {format_factored(s.value)}  chi={s.euler}")

# the closed product and the sum over strata agree
print("closed form :", topological_zeta(m, n, r))
print("from strata :", topological_zeta_from_strata(m, n, r))
print("Euler of motivic:", motivic_zeta_rational(m, n, r).euler_specialization())

# twisting by any d >= 2 kills every term
for d in range(1, 5):
    print(f"d={d}:", twisted_topological_zeta(m, n, r, d))
