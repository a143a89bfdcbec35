from fractions import Fraction

import pytest

from upsilon_lab.errors import InvalidParameter
from upsilon_lab.exactmath import PLFunction, pl_integrate
from upsilon_lab.family import (
    CONSTANTS,
    DELTA_L,
    kn_alexander_closed,
    kn_alexander_torres,
    kn_minus_three_integral,
    kn_trefoil_difference,
    kn_upsilon_closed,
)
from upsilon_lab.upsilon import report

TENT = PLFunction((0, 1, 2), (0, -1, 0))


def test_delta_l_checksum():
    # x^7y^3z - x^5y^3z + x^5y^2z + x^5y^2 - x^4y^2 - x^5y - 2x^3y^2z + 2x^4y
    #   + x^2y^2z + x^3yz - x^2yz - x^2y + x^2 - 1
    assert len(DELTA_L.terms) == 14
    assert sum(c for _, c in DELTA_L.terms) == 0
    assert sum(abs(c) for _, c in DELTA_L.terms) == 16
    assert DELTA_L(1, 1, 1) == 0
    assert (CONSTANTS.linking_k_c1, CONSTANTS.linking_k_c2, CONSTANTS.linking_c1_c2) == (4, 2, 0)


def test_closed_form_n1(k1_delta):
    assert kn_alexander_closed(1) == k1_delta


def test_closed_form_n2_middle_block():
    d = kn_alexander_closed(2)
    assert {k: d.coeff(k) for k in (8, 9, 10, 11, 12)} == {8: 0, 9: 1, 10: -1, 11: 1, 12: 0}


@pytest.mark.parametrize("n", range(1, 11))
def test_closed_form_degree_and_shape(n):
    d = kn_alexander_closed(n)
    assert d.min_degree == 0 and d.max_degree == 2 * n + 16
    assert d.is_symmetric() and d(1) == 1


@pytest.mark.parametrize("n", range(1, 51))
def test_torres_route(n):
    assert kn_alexander_torres(n) == kn_alexander_closed(n)


def test_invalid_n():
    for f in (kn_alexander_closed, kn_alexander_torres, kn_upsilon_closed, kn_minus_three_integral):
        with pytest.raises(InvalidParameter):
            f(0)


def test_upsilon_closed_examples():
    assert kn_upsilon_closed(1)(Fraction(1, 2)) == Fraction(-9, 2)
    for n in (1, 2, 7, 30):
        f = kn_upsilon_closed(n)
        assert f(1) == -(n + 5)
        assert f(Fraction(1, 4)) == f(Fraction(7, 4))
        assert f(Fraction(3, 4)) == f(Fraction(5, 4))
        assert f.slopes()[:3] == (-(n + 8), -(n + 4), -(n - 1))


def test_upsilon_closed_breakpoints():
    expected = (0, Fraction(1, 2), Fraction(4, 5), 1, Fraction(6, 5), Fraction(3, 2), 2)
    for n in (2, 3, 50):
        assert kn_upsilon_closed(n).breakpoints == expected
    # at n = 1 the middle slope is 0 on both sides of t = 1, so that point is not a corner
    assert kn_upsilon_closed(1).breakpoints == expected[:3] + expected[4:]


@pytest.mark.parametrize("n", [1, 2, 3, 5, 13, 50])
def test_report_matches_closed_form(n):
    r = report(kn_alexander_closed(n))
    assert r.upsilon == kn_upsilon_closed(n)
    assert r.minus_three_integral == kn_minus_three_integral(n) == 3 * n + Fraction(102, 5)
    assert r.genus == n + 8
    assert r.omega == n + Fraction(22, 5)


def test_trefoil_difference():
    for n in (1, 5, 20):
        d = kn_trefoil_difference(n)
        assert d == TENT
        assert pl_integrate(d) == -1
