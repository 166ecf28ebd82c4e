from math import prod

import pytest

from conftest import E8, ELLIPTIC, FOUR_ONE, genus0_sweep, random_star_corpus
from seifert_calc.exact_arith import ValidationError
from seifert_calc.invariants import chi, k_order_numerical
from seifert_calc.pinkham import (
    DemazureData,
    QGorensteinReport,
    XiData,
    deg_floor_kE,
    dualizing_dims,
    gorenstein_test,
    graded_dim,
    poincare_series,
    q_gorenstein_order,
)

E8_DATA = DemazureData.from_star(E8)
FOUR_ONE_DATA = DemazureData.from_star(FOUR_ONE)
PLANE = DemazureData(1, ())


def brieskorn_235_dim(k):
    """Monomials x^a y^b z^c of weighted degree k (weights 15, 10, 6) with a < 2,
    i.e. a basis of C[x,y,z]/(x^2 + y^3 + z^5) in degree k."""
    return sum(1 for a in (0, 1) for b in range(k // 10 + 1) for c in range(k // 6 + 1)
               if 15 * a + 10 * b + 6 * c == k)


def test_deg_floor_examples():
    assert deg_floor_kE(E8_DATA, 0) == 0
    assert deg_floor_kE(E8_DATA, 6) == 0
    assert deg_floor_kE(E8_DATA, 1) == -1


def test_graded_dim_examples():
    assert [graded_dim(E8_DATA, k) for k in range(1, 6)] == [0] * 5
    assert [graded_dim(E8_DATA, k) for k in (6, 10, 15, 30)] == [1, 1, 1, 2]
    assert graded_dim(FOUR_ONE_DATA, 0) == 1
    assert graded_dim(FOUR_ONE_DATA, 1) == 1


def test_poincare_series_examples():
    assert poincare_series(E8_DATA, 12) == [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1]
    assert poincare_series(PLANE, 3) == [1, 2, 3, 4]


def test_e8_series_matches_brieskorn_ring():
    assert poincare_series(E8_DATA, 120) == [brieskorn_235_dim(k) for k in range(121)]


def test_positive_genus_refused():
    dd = DemazureData.from_star(ELLIPTIC)
    with pytest.raises(ValidationError, match="genus > 0"):
        graded_dim(dd, 1)
    with pytest.raises(ValidationError):
        dualizing_dims(dd, 0, 3)
    with pytest.raises(ValidationError):
        gorenstein_test(dd)


def test_dualizing_dims_examples():
    assert dualizing_dims(E8_DATA, 7, 7) == [1] == [graded_dim(E8_DATA, 6)]
    assert dualizing_dims(E8_DATA, -10, 0) == [0] * 11


def test_gorenstein_examples():
    assert gorenstein_test(E8_DATA) == -1
    assert gorenstein_test(FOUR_ONE_DATA) is None
    assert gorenstein_test(PLANE) == -2
    assert gorenstein_test(E8_DATA, XiData.from_star(E8)) == -1


def test_q_gorenstein_order_examples():
    assert q_gorenstein_order(E8_DATA) == 1
    assert q_gorenstein_order(FOUR_ONE_DATA) == 9
    report = q_gorenstein_order(DemazureData.from_star(ELLIPTIC))
    assert isinstance(report, QGorensteinReport)
    assert (report.s, report.t) == (1, 0) and "not decided" in report.torsion


def test_degree_identities(corpus):
    for sg in corpus:
        assert DemazureData.from_star(sg).degree == sg.e
        assert XiData.from_star(sg).degree == chi(sg)


def test_dimension_is_degree_plus_one_when_nonnegative():
    for sg in random_star_corpus(60, seed=2, genera=(0,), n_max=10):
        dd = DemazureData.from_star(sg)
        period = prod(n for n, _ in sg.arms) * sg.d
        for k in range(0, 40):
            deg = deg_floor_kE(dd, k)
            if deg >= 0:
                assert graded_dim(dd, k) == deg + 1
                assert graded_dim(dd, k + period) > graded_dim(dd, k)


def test_order_consistency_sweep():
    """Gorenstein iff order 1; duality shift; denominator divisibility; and the
    observed agreement of analytic and numerical orders."""
    for sg in genus0_sweep([3], 5, 7):
        dd = DemazureData.from_star(sg)
        order = q_gorenstein_order(dd)
        t = gorenstein_test(dd)
        assert (t is not None) == (order == 1)
        assert order % (chi(sg) / sg.e).denominator == 0
        if t is not None:
            assert dualizing_dims(dd, -5, 40) == [graded_dim(dd, k + t) for k in range(-5, 41)]
        assert order == k_order_numerical(sg)


def test_order_agrees_with_numerical_on_random_corpus():
    for sg in random_star_corpus(150, seed=4, genera=(0,)):
        assert q_gorenstein_order(DemazureData.from_star(sg)) == k_order_numerical(sg)
