import pytest
from hypothesis import assume, given, strategies as st

from upsilon_lab.braid import (
    BraidWord,
    BurauMatrix,
    alexander_of_closure,
    burau,
    det_bareiss,
    kn_braid,
    parse_braid,
    positive_braid_genus,
)
from upsilon_lab.errors import InvalidParameter, NotAKnot, NotPositive, ParseError
from upsilon_lab.exactmath import LaurentPoly, parse_laurent
from upsilon_lab.family import kn_alexander_closed

P = parse_laurent


def test_kn_braid_shape():
    w = kn_braid(1)
    assert w.strands == 4 and len(w) == 21
    assert w.letters == (2, 1, 3, 2) + (3, 2, 1) * 4 + (3,) * 4 + (2,)
    assert len(kn_braid(2)) == 23
    with pytest.raises(InvalidParameter):
        kn_braid(0)


def test_burau_small():
    assert burau(BraidWord(2, ())) == BurauMatrix.identity(1)
    assert burau(BraidWord(2, (1,))).entries == ((P("-t"),),)
    assert burau(BraidWord(2, (1, 1, 1))).entries == ((P("-t^3"),),)


@pytest.mark.parametrize("strands", [2, 3, 4, 5])
def test_burau_generator_inverses(strands):
    for k in range(1, strands):
        assert burau(BraidWord(strands, (k, -k))) == BurauMatrix.identity(strands - 1)
        assert burau(BraidWord(strands, (-k, k))) == BurauMatrix.identity(strands - 1)


def test_braid_relations():
    # sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2; far generators commute
    assert burau(BraidWord(4, (1, 2, 1))) == burau(BraidWord(4, (2, 1, 2)))
    assert burau(BraidWord(4, (1, 3))) == burau(BraidWord(4, (3, 1)))


words4 = st.lists(st.sampled_from([1, 2, 3, -1, -2, -3]), max_size=8).map(lambda ls: BraidWord(4, ls))


@given(words4, words4)
def test_burau_homomorphism(u, v):
    assert burau(u * v) == burau(u) @ burau(v)


@given(words4)
def test_burau_determinant_is_unit(w):
    d = burau(w).det()
    assert len(d.coeffs) == 1 and abs(d.coeffs[0]) == 1


def test_det_bareiss_against_sympy():
    sympy = pytest.importorskip("sympy")
    t = sympy.symbols("t")
    rows = [
        [P("1 - t"), P("t^-1"), P("2")],
        [P("0"), P("t + t^2"), P("-1")],
        [P("t^3"), P("1"), P("0")],
    ]
    expected = sympy.Matrix([[sum(c * t**k for k, c in e.terms()) for e in r] for r in rows]).det()
    got = det_bareiss(rows)
    assert sympy.simplify(sum(c * t**k for k, c in got.terms()) - expected) == 0
    # zero pivot in the first column forces a row swap
    swapped = [[P("0"), P("1")], [P("t"), P("0")]]
    assert det_bareiss(swapped) == P("-t")


def test_alexander_examples():
    # trefoil: -(t^3 + 1)(1 - t)/(1 - t^2) up to units
    assert alexander_of_closure(BraidWord(2, (1, 1, 1))) == P("1 - t + t^2")
    assert alexander_of_closure(BraidWord(2, (1,))) == LaurentPoly.one()
    # figure eight as sigma_1 sigma_2^-1 sigma_1 sigma_2^-1
    assert alexander_of_closure(BraidWord(3, (1, -2, 1, -2))) == P("-1 + 3t - t^2")


def test_alexander_k1(k1_delta):
    assert alexander_of_closure(kn_braid(1)) == k1_delta


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_alexander_matches_closed_form(n):
    assert alexander_of_closure(kn_braid(n)) == kn_alexander_closed(n)


def test_not_a_knot():
    with pytest.raises(NotAKnot):
        alexander_of_closure(BraidWord(2, (1, 1)))
    with pytest.raises(NotAKnot):
        alexander_of_closure(BraidWord(3, (1,)))


def test_positive_braid_genus():
    assert positive_braid_genus(BraidWord(2, (1, 1, 1))) == 1
    assert positive_braid_genus(kn_braid(5)) == 13
    for n in range(1, 11):
        assert positive_braid_genus(kn_braid(n)) == n + 8
    with pytest.raises(NotPositive):
        positive_braid_genus(BraidWord(2, (1, -1, 1)))
    with pytest.raises(NotAKnot):
        positive_braid_genus(BraidWord(2, (1, 1)))


positive3 = st.lists(st.sampled_from([1, 2]), min_size=2, max_size=12).map(lambda ls: BraidWord(3, ls))


@given(positive3)
def test_positive_braid_degree_is_twice_genus(w):
    assume(w.is_knot())
    d = alexander_of_closure(w)
    assert d.span == 2 * positive_braid_genus(w)
    assert d.is_symmetric()


@st.composite
def knot_words4(draw):
    # u * c * d * u^-1 with c = sigma_1^+-1 sigma_2^+-1 sigma_3^+-1 (a 4-cycle) and
    # d built from repeated letters (trivial permutation); the product is a 4-cycle
    u = draw(st.lists(st.sampled_from([1, 2, 3, -1, -2, -3]), max_size=5))
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=3, max_size=3))
    core = [s * k for s, k in zip(signs, (1, 2, 3))]
    back = [-k for k in reversed(u)]
    extra = draw(st.lists(st.sampled_from([1, 2, 3, -1, -2, -3]), max_size=3))
    # extra pairs k, k contribute the identity permutation
    doubled = [k for k in extra for _ in range(2)]
    return BraidWord(4, u + core + doubled + back)


@given(knot_words4())
def test_normalized_alexander_symmetric(w):
    assert w.is_knot()
    d = alexander_of_closure(w)
    assert d.is_symmetric() and sum(d.coeffs) == 1 and d.min_degree == 0


def test_parse_braid():
    w = parse_braid("strands:4 2 1 3 2 3 2 1")
    assert w.strands == 4 and w.letters == (2, 1, 3, 2, 3, 2, 1)
    assert parse_braid("strands:4, 2,1,-3").letters == (2, 1, -3)
    assert parse_braid("1 1 1").strands == 2
    assert parse_braid(str(kn_braid(3))) == kn_braid(3)
    with pytest.raises(ParseError):
        parse_braid("strands:2 1 2")
    with pytest.raises(ParseError):
        parse_braid("strands:3 a b")


def test_permutation_cycle_count():
    assert kn_braid(1).is_knot()
    assert BraidWord(4, (1, 3)).component_count() == 2
    assert BraidWord(4, ()).component_count() == 4
