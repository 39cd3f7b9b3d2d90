"""The ten acceptance criteria, each as one test.

Each test records a PASS/FAIL line that is printed in the terminal summary;
running this file as a script prints the same lines.
"""

import os
import sys
import time
from fractions import Fraction
from itertools import combinations
from math import factorial, prod

import pytest

from detzeta.lring import LClass, lclass_euler, lclass_eval
from detzeta.orbits import PointClass, class_orbit, enumerate_orbits
from detzeta.oracle import count_orbits
from detzeta.strata import (
    ContactProfile,
    InstabilityError,
    all_strata,
    determinantal_resolution,
    fiber_class,
    fiber_euler_closed,
    stratum_class,
    working_level,
)
from detzeta.zeta import (
    ZetaRat,
    bernstein_sato_maximal,
    check_holomorphy,
    check_monodromy_conjecture,
    eigenvalue_set,
    monodromy_zeta_at_point,
    motivic_zeta_rational,
    motivic_zeta_series,
    topological_zeta,
    topological_zeta_from_strata,
    twisted_topological_zeta,
    twisted_topological_zeta_from_strata,
)

try:
    from conftest import ACCEPTANCE
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE = {}

L = LClass.L()
ORBIT_GRID = [(2, 2, 1), (2, 2, 2), (2, 3, 1), (3, 3, 1)]


def shapes(top):
    return [(m, n, r) for m in range(1, top + 1) for n in range(m, top + 1) for r in range(1, m + 1)]


def record(k, ok, detail):
    ACCEPTANCE[k] = (ok, detail)
    assert ok, detail


def census_method(m, n, l, q):
    # 3^18 jets is half an hour of single-core work; the fibered census is
    # exact and matches the exhaustive one wherever both are run
    if q ** (m * n * (l + 1)) > 3**12 * 2 and not os.environ.get("DETZETA_FULL"):
        return "fibered"
    return "exhaustive"


def test_criterion_01_orbit_classes_match_point_counts():
    t0 = time.perf_counter()
    bad, checked = [], 0
    for m, n, l in ORBIT_GRID:
        for q in (2, 3):
            census = count_orbits(m, n, l, q, method=census_method(m, n, l, q))
            assert census.total() == q ** (m * n * (l + 1))
            for lam in enumerate_orbits(m, n, l):
                checked += 1
                if lclass_eval(class_orbit(m, n, lam), q) != census[lam]:
                    bad.append((m, n, l, q, str(lam)))
    record(1, not bad, f"{checked} orbit counts, mismatches={bad[:3]} ({time.perf_counter() - t0:.1f}s)")


def test_criterion_02_orbits_partition_jet_space():
    bad = []
    for m, n, l in ORBIT_GRID:
        total = LClass(0)
        for lam in enumerate_orbits(m, n, l):
            total = total + class_orbit(m, n, lam)
        if total != L ** (m * n * (l + 1)):
            bad.append((m, n, l))
    record(2, not bad, f"sum of orbit classes = L^(mn(l+1)); failures={bad}")


def test_criterion_03_topological_zeta_closed_form():
    bad = []
    for m, n, r in shapes(3):
        closed = ZetaRat(1, [((r + 1 - j, (m + 1 - j) * (n + 1 - j)), -1) for j in range(1, r + 1)])
        closed = closed * ZetaRat(prod((m + 1 - j) * (n + 1 - j) for j in range(1, r + 1)))
        if topological_zeta_from_strata(m, n, r) != closed or topological_zeta(m, n, r) != closed:
            bad.append((m, n, r))
    text = str(topological_zeta_from_strata(3, 3, 2))
    record(3, not bad and text == "1/((1+2s/9)(1+s/4))", f"(3,3,2) -> {text}; failures={bad}")


def test_criterion_04_stratum_euler_characteristics():
    bad = []
    for m, n, r in shapes(4):
        full = frozenset(range(1, r + 1))
        expected_full = factorial(m) * factorial(n) // (factorial(m - r) * factorial(n - r))
        for s in all_strata(m, n, r):
            want = expected_full if s.J == full else 0
            if s.J and s.euler != want:
                bad.append((m, n, r, sorted(s.J), s.euler))
    record(4, not bad, f"{len(shapes(4))} shapes; failures={bad[:3]}")


def test_criterion_05_monodromy_table():
    table = {(1, 3): "1 - t^2", (1, 2): "1", (2, 2): "1 - t", (2, 3): "1 - t"}
    got = {k: monodromy_zeta_at_point(PointClass(3, 3, 2, *k)).to_text() for k in table}
    bad = []
    for m in range(1, 4):
        for n in range(m, 4):
            for r in range(1, m + 1):
                for i in range(1, r + 1):
                    for q in range(r, m + 1):
                        chi = lclass_euler(fiber_class(m, n, r, i, q, r + 2))
                        if chi != fiber_euler_closed(m, n, r, i, q):
                            bad.append((m, n, r, i, q, chi))
    record(5, got == table and not bad, f"3x3 rank-2 points {got}; fibre mismatches={bad}")


def test_criterion_06_twisted_zeta():
    bad = []
    for m, n, r in shapes(3):
        for d in range(1, 7):
            want = topological_zeta(m, n, r) if d == 1 else ZetaRat.zero()
            if twisted_topological_zeta(m, n, r, d) != want or twisted_topological_zeta_from_strata(m, n, r, d) != want:
                bad.append((m, n, r, d))
    record(6, not bad, f"d = 1..6 over {len(shapes(3))} shapes; failures={bad}")


def test_criterion_07_conjecture_grid():
    t0 = time.perf_counter()
    bad = []
    for m, n, r in shapes(5):
        if not check_monodromy_conjecture(m, n, r).verdict:
            bad.append(("monodromy", m, n, r))
        if not check_holomorphy(m, n, r, 6).verdict:
            bad.append(("holomorphy", m, n, r))
    elapsed = time.perf_counter() - t0
    record(7, not bad and elapsed < 1.0, f"{len(shapes(5))} shapes in {elapsed:.3f}s; failures={bad}")


def test_criterion_08_maximal_minors():
    bad = []
    for m in range(1, 6):
        for n in range(m, 6):
            b = bernstein_sato_maximal(m, n)
            eig = set(eigenvalue_set(m, n, m))
            # roots of b are integers, so their exponentials are all 1
            if not eig <= {Fraction(0)}:
                bad.append(("eigenvalues", m, n, sorted(eig)))
            for j, (N, nu) in enumerate(determinantal_resolution(m, n, m).pairs, start=1):
                s0 = Fraction(-nu, N)
                if s0 != -(n + 1 - j) or b(s0.numerator) != 0 or s0 % 1 not in eig:
                    bad.append(("pole", m, n, str(s0)))
    record(8, not bad, f"r = m <= n <= 5; failures={bad}")


def test_criterion_09_level_stability():
    bad = []
    for m, n, r in shapes(4):
        res = determinantal_resolution(m, n, r)
        for k in range(1, r + 1):
            for J in combinations(range(1, r + 1), k):
                l0 = working_level(res, ContactProfile.indicator(r, J))
                try:
                    a = stratum_class(m, n, r, J, level=l0)
                    b = stratum_class(m, n, r, J, level=l0 + 1)
                except InstabilityError:
                    bad.append(("stratum", m, n, r, J))
                    continue
                if a.value != b.value:
                    bad.append(("stratum", m, n, r, J))
        for i in range(1, r + 1):
            for q in range(r, m + 1):
                if fiber_class(m, n, r, i, q, r + 2) != fiber_class(m, n, r, i, q, r + 3):
                    bad.append(("fibre", m, n, r, i, q))
    record(9, not bad, f"consecutive levels agree over {len(shapes(4))} shapes; failures={bad[:3]}")


def test_criterion_10_series_matches_rational():
    bad = []
    for m, n, r in [(2, 2, 1), (2, 2, 2), (2, 3, 1)]:
        if motivic_zeta_rational(m, n, r).expand(6) != motivic_zeta_series(m, n, r, 6):
            bad.append((m, n, r))
    record(10, not bad, f"orders 0..6; failures={bad}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
