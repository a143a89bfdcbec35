from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from upsilon_lab.algebraic import (
    MultiplicitySequence,
    check_inequalities,
    coprime_pairs,
    milnor_number,
    minus_three_integral,
    multiplicity_sequence,
    omega,
    singularity_report,
    torus_alexander,
    upsilon_block,
    upsilon_from_mults,
)
from upsilon_lab.errors import InvalidParameter, InvalidParameters
from upsilon_lab.exactmath import PLFunction, parse_laurent, pl_integrate
from upsilon_lab.upsilon import formal_semigroup, is_closed_under_addition, upsilon_of

P = parse_laurent
TENT = PLFunction((0, 1, 2), (0, -1, 0))
PAIRS = coprime_pairs(12)


def test_coprime_pairs():
    assert len(PAIRS) == 34
    assert PAIRS[0] == (2, 3) and (11, 12) in PAIRS and (4, 6) not in PAIRS


@pytest.mark.parametrize(
    "pq, mults",
    [((2, 3), (2,)), ((2, 7), (2, 2, 2)), ((3, 4), (3,)), ((3, 5), (3, 2)), ((5, 7), (5, 2, 2)), ((6, 7), (6,))],
)
def test_multiplicity_sequence(pq, mults):
    assert multiplicity_sequence(*pq).mults == mults


@pytest.mark.parametrize("pq", [(4, 6), (1, 5), (5, 3), (3, 3)])
def test_multiplicity_sequence_rejects(pq):
    with pytest.raises(InvalidParameters):
        multiplicity_sequence(*pq)


def test_multiplicity_sequence_validation():
    with pytest.raises(InvalidParameter):
        MultiplicitySequence((2, 3))
    with pytest.raises(InvalidParameter):
        MultiplicitySequence((3, 1))
    assert len(MultiplicitySequence()) == 0


def test_blocks():
    assert upsilon_block(2) == TENT
    # i = 0: -3t; i = 1: -2; i = 2: -6 + 3t
    f = upsilon_block(3)
    assert f == PLFunction.from_pieces([
        (0, Fraction(2, 3), -3, 0),
        (Fraction(2, 3), Fraction(4, 3), 0, -2),
        (Fraction(4, 3), 2, 3, -6),
    ])
    with pytest.raises(InvalidParameter):
        upsilon_block(1)


@pytest.mark.parametrize("m", range(2, 11))
def test_block_integral(m):
    assert pl_integrate(upsilon_block(m)) == Fraction(1 - m * m, 3)


def test_upsilon_from_mults_examples():
    assert upsilon_from_mults(MultiplicitySequence((2,))) == TENT
    assert upsilon_from_mults(MultiplicitySequence()) == PLFunction.zero()
    f = upsilon_from_mults(MultiplicitySequence((2, 2, 2)))
    assert f.slopes()[0] == -3 and f == TENT * 3


def test_singularity_report_examples():
    r = singularity_report((2,))
    assert (r.milnor, r.omega, r.minus_three_integral) == (2, 1, 3)
    r = singularity_report((2, 2, 2))
    assert (r.milnor, r.omega) == (6, 3)
    r = singularity_report((3,))
    assert (r.milnor, r.omega, r.minus_three_integral, r.genus) == (6, 2, 8, 3)
    obj = r.to_json()
    assert obj["minus3I"] == "8" and obj["integral"] == "-8/3" and obj["mults"] == [3]


def test_inequality_examples():
    v = check_inequalities(2, 7)
    assert (v.omega, v.milnor) == (3, 6) and v.omega_below_p_plus_q and v.milnor_at_most_m_omega
    # equality case mu = m * omega
    assert v.milnor == v.multiplicity * v.omega
    v = check_inequalities(3, 4)
    assert (v.omega, v.milnor) == (2, 6)
    v = check_inequalities(6, 7)
    assert (v.omega, v.milnor) == (5, 30)
    with pytest.raises(InvalidParameters):
        check_inequalities(4, 6)


@pytest.mark.parametrize(
    "pq, poly",
    [((2, 3), "1 - t + t^2"), ((3, 4), "1 - t + t^3 - t^5 + t^6"), ((2, 5), "1 - t + t^2 - t^3 + t^4")],
)
def test_torus_alexander(pq, poly):
    assert torus_alexander(*pq) == P(poly)


@pytest.mark.parametrize("pq", PAIRS)
def test_torus_cross_validation(pq):
    p, q = pq
    ms = multiplicity_sequence(p, q)
    r = singularity_report(ms)
    delta = torus_alexander(p, q)
    assert r.genus == (p - 1) * (q - 1) // 2 == delta.span // 2
    assert r.milnor == 2 * r.genus
    assert upsilon_from_mults(ms) == upsilon_of(delta)
    v = check_inequalities(p, q)
    assert v.omega_below_p_plus_q and v.milnor_at_most_m_omega


@pytest.mark.parametrize("pq", PAIRS)
def test_torus_semigroup_is_generated_by_p_q(pq):
    p, q = pq
    s = formal_semigroup(torus_alexander(p, q))
    gen = {a * p + b * q for a in range(2 * s.genus + 1) for b in range(2 * s.genus + 1)}
    assert s.elements(2 * s.genus) == sorted(x for x in gen if x < 2 * s.genus)
    assert is_closed_under_addition(s) == (True, None)


mult_seqs = st.lists(st.integers(2, 9), max_size=6).map(lambda ls: MultiplicitySequence(tuple(sorted(ls, reverse=True))))


@given(mult_seqs)
def test_closed_form_integral_matches_blocks(ms):
    assert -3 * pl_integrate(upsilon_from_mults(ms)) == minus_three_integral(ms)
    r = singularity_report(ms)
    assert r.minus_three_integral - 2 * r.genus == r.omega
    assert r.milnor <= (ms.mults[0] if ms.mults else 0) * r.omega


@given(mult_seqs, mult_seqs)
def test_additivity(a, b):
    ab = a.merged(b)
    assert omega(ab) == omega(a) + omega(b)
    assert milnor_number(ab) == milnor_number(a) + milnor_number(b)
    assert upsilon_from_mults(ab) == upsilon_from_mults(a) + upsilon_from_mults(b)
