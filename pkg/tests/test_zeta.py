from fractions import Fraction

import pytest

from detzeta.lring import LClass, LPoly
from detzeta.orbits import PointClass
from detzeta.zeta import (
    CycloFactored,
    ZetaRat,
    bernstein_sato_maximal,
    bernstein_sato_roots,
    check_holomorphy,
    check_monodromy_conjecture,
    eigenvalue_set,
    monodromy_zeta_at_point,
    motivic_zeta_rational,
    motivic_zeta_series,
    point_classes,
    topological_zeta,
    topological_zeta_from_strata,
    twisted_topological_zeta,
    twisted_topological_zeta_from_strata,
)

L = LClass.L()
SMALL = [(m, n, r) for m in range(1, 4) for n in range(m, 4) for r in range(1, m + 1)]


def test_zetarat_normalizes_and_prints():
    z = ZetaRat(36, [((2, 9), -1), ((1, 4), -1)])
    assert z.to_text() == "1/((1+2s/9)(1+s/4))"
    assert ZetaRat(18, [((2, 9), -1), ((1, 4), -1)]).to_text() == "(1/2)/((1+2s/9)(1+s/4))"
    assert ZetaRat(36, [((2, 12), -1), ((1, 6), -1)]) == ZetaRat(18, [((1, 6), -2)])
    assert ZetaRat.zero().to_text() == "0"
    assert ZetaRat(1, [((1, 1), -1)]).poles() == [Fraction(-1)]


def test_zetarat_sum_refactors():
    a = ZetaRat(1, [((1, 1), -1)])
    b = ZetaRat(1, [((1, 2), -1)])
    total = a + b
    assert total.expanded() == a.expanded() + b.expanded()
    assert total.has_factor(1, 1) == -1 and total.has_factor(1, 2) == -1
    assert (a + ZetaRat(-1) * a).is_zero()


def test_zetarat_polynomial():
    assert ZetaRat(3).is_polynomial()
    assert ZetaRat(1, [((1, 2), 1)]).is_polynomial()
    assert not ZetaRat(1, [((1, 2), -1)]).is_polynomial()


def test_product_string():
    assert topological_zeta(3, 3, 2).to_product_string() == "36/1 * prod(((2*s+9)^-1), ((1*s+4)^-1))"


def test_topological_examples():
    assert str(topological_zeta(3, 3, 2)) == "1/((1+2s/9)(1+s/4))"
    assert str(topological_zeta(1, 1, 1)) == "1/(1+s)"
    assert str(topological_zeta(2, 3, 1)) == "1/(1+s/6)"


@pytest.mark.parametrize("m,n,r", SMALL)
def test_strata_pipeline_matches_closed_form(m, n, r):
    closed = topological_zeta(m, n, r)
    assert topological_zeta_from_strata(m, n, r) == closed
    assert motivic_zeta_rational(m, n, r).euler_specialization() == closed


@pytest.mark.parametrize("m,n,r", SMALL)
def test_twisted_degenerates(m, n, r):
    assert twisted_topological_zeta(m, n, r, 1) == topological_zeta(m, n, r)
    assert twisted_topological_zeta_from_strata(m, n, r, 1) == topological_zeta(m, n, r)
    for d in range(2, 7):
        assert twisted_topological_zeta(m, n, r, d).is_zero()
        assert twisted_topological_zeta_from_strata(m, n, r, d).is_zero()


def test_twisted_examples():
    assert str(twisted_topological_zeta(3, 3, 2, 2)) == "0"
    assert str(twisted_topological_zeta(2, 2, 2, 3)) == "0"
    assert str(twisted_topological_zeta(3, 3, 2, 1)) == "1/((1+2s/9)(1+s/4))"
    with pytest.raises(ValueError):
        twisted_topological_zeta(2, 2, 2, 0)


def test_motivic_strata_form():
    mz = motivic_zeta_rational(2, 2, 1)
    form = dict(mz.strata_form)
    assert form[frozenset()] == L**4 - 1
    assert form[frozenset({1})] == L**3 + L**2 + L + 1
    assert mz.pairs.pairs == ((1, 4),)


def test_motivic_series_examples():
    s = motivic_zeta_series(2, 2, 2, 1)
    assert s[0] == L**4 - L**3 - L**2 + L
    assert s[1] == L**-1 * (L - 1) ** 2 * (L + 1) ** 2
    assert motivic_zeta_series(2, 2, 1, 0)[0] == L**4 - 1


@pytest.mark.parametrize("m,n,r", [(2, 2, 1), (2, 2, 2), (2, 3, 1)])
def test_series_matches_rational(m, n, r):
    assert motivic_zeta_rational(m, n, r).expand(6) == motivic_zeta_series(m, n, r, 6)


def test_cyclo_factored():
    z = CycloFactored(((2, 1),))
    assert z.to_text() == "1 - t^2"
    assert z.roots() == {Fraction(0), Fraction(1, 2)}
    assert CycloFactored().to_text() == "1"
    assert CycloFactored(((1, 1), (1, -1))).is_one()
    assert CycloFactored(((1, -1),)).to_text() == "(1 - t)^-1"


def test_monodromy_table_three_by_three():
    table = {(1, 3): "1 - t^2", (1, 2): "1", (2, 2): "1 - t", (2, 3): "1 - t"}
    for (i, q), text in table.items():
        p = PointClass(3, 3, 2, i, q)
        assert monodromy_zeta_at_point(p).to_text() == text
        assert monodromy_zeta_at_point(p, method="classes").to_text() == text


def test_monodromy_outside_alpha_image():
    assert monodromy_zeta_at_point(PointClass(3, 3, 2, 1, None)).is_one()


def test_sign_convention_flips_exponent():
    p = PointClass(3, 3, 2, 1, 3)
    assert monodromy_zeta_at_point(p, sign=-1).factors == ((2, -1),)
    assert monodromy_zeta_at_point(p, sign=-1).roots() == monodromy_zeta_at_point(p).roots()


def test_eigenvalue_examples():
    assert eigenvalue_set(3, 3, 2) == [Fraction(0), Fraction(1, 2)]
    for m, n in [(1, 1), (2, 3), (4, 5)]:
        assert eigenvalue_set(m, n, 1) == [Fraction(0)]
    assert eigenvalue_set(4, 4, 3) == [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)]


def test_eigenvalues_of_maximal_minors():
    # r = m leaves no room for q > r, so only the i = r points contribute
    assert eigenvalue_set(3, 4, 3) == [Fraction(0)]


def test_point_classes_listing():
    pts = point_classes(2, 2, 1)
    assert [(p.i, p.q) for p in pts] == [(1, 1), (1, 2), (1, None)]


def test_monodromy_check_examples():
    rep = check_monodromy_conjecture(3, 3, 2)
    assert rep.verdict
    assert [w["eigenvalue"] for w in rep.witnesses] == ["1/2", "0/1"]
    assert [p["s0"] for p in rep.poles] == ["-9/2", "-4/1"]
    assert all(p["actual"] for p in rep.poles)
    rep = check_monodromy_conjecture(3, 4, 2)
    assert rep.verdict and [w["eigenvalue"] for w in rep.witnesses] == ["0/1", "0/1"]
    assert check_monodromy_conjecture(1, 1, 1).verdict


def test_report_schema():
    doc = check_monodromy_conjecture(3, 3, 2).to_json()
    assert doc["shape"] == {"m": 3, "n": 3, "r": 2}
    assert doc["eigenvalues"] == ["0/1", "1/2"]
    assert doc["verdict"] == "PASS"
    assert set(doc["poles"][0]) == {"N", "nu", "s0", "actual"}


def test_holomorphy_examples():
    rep = check_holomorphy(3, 3, 2, 2)
    assert rep.verdict
    assert rep.checks[1]["polynomial"] and rep.checks[1]["twisted_zeta"] == "0"
    assert rep.checks[0]["eigenvalue_orders_divisible"] == [1, 2]
    assert check_holomorphy(2, 2, 2, 5).checks[4]["polynomial"]


GRID5 = [(m, n, r) for m in range(1, 6) for n in range(m, 6) for r in range(1, m + 1)]


@pytest.mark.parametrize("sign", [1, -1])
def test_verdicts_ignore_sign(sign):
    for m, n, r in GRID5:
        assert check_monodromy_conjecture(m, n, r, sign=sign).verdict
        assert check_holomorphy(m, n, r, 6, sign=sign).verdict


def test_bernstein_sato():
    assert bernstein_sato_maximal(2, 3) == LPoly([2, 1]) * LPoly([3, 1])
    assert bernstein_sato_maximal(1, 4) == LPoly([4, 1])
    assert bernstein_sato_maximal(3, 3) == LPoly([1, 1]) * LPoly([2, 1]) * LPoly([3, 1])
    assert bernstein_sato_roots(2, 3) == [-2, -3]
    with pytest.raises(ValueError):
        bernstein_sato_maximal(3, 3, r=2)
