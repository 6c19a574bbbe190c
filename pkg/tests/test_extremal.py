from plane_chroma import extremal as E
from plane_chroma.precision import mp


def test_crossing_constant_two_routes():
    assert abs(E.crossing_constant() - float(E.crossing_constant_exact())) < 1e-9


def test_h_endpoints():
    assert E.crossing_h(1) == 1
    assert abs(E.crossing_h(0) - 2 * 0.25 ** (1 / 3)) < 1e-15


def test_coefficient():
    c = E.u_upper_coefficient()
    assert abs(c - mp.mpf("2.082")) < 1e-3
    # same number from the golden-section maximum
    assert abs(float(c) - mp.cbrt(29) * E.crossing_constant() / 2) < 1e-9
    assert E.u_upper(1) == c
    assert E.u_upper(14) >= 33


def test_catalog_table():
    assert tuple(u for _, u in E.catalog_unit_pairs()) == E.UNIT_PAIR_TABLE


def test_density_recurrence():
    rep = E.density_recurrence_check(list(enumerate(E.UNIT_PAIR_TABLE, start=1)))
    assert rep.violations == []
    assert 9 in rep.tight
    assert E.density_recurrence_check([(4, 5), (5, 100)]).violations == [5]
