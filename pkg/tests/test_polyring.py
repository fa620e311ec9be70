from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jackpieri.errors import InexactDivision
from jackpieri.field import Field
from jackpieri.polyring import (
    MultiPoly,
    elementary,
    monomial_symmetric,
    parse_poly,
    schur_bialternant,
    to_monomial_basis,
    vandermonde,
)

Q = Field(1)
S = Field(None)


@st.composite
def polys(draw, rank=2):
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(0, 3)] * rank),
            st.fractions(min_value=-5, max_value=5, max_denominator=4),
            max_size=5,
        )
    )
    return MultiPoly(terms, rank, Q)


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a - a).is_zero()


@given(polys(), polys())
def test_exact_division_and_leibniz(a, b):
    if b:
        assert (a * b).divide_exact(b) == a
    for i in range(2):
        assert (a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i)


@given(polys(), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_shift_matches_evaluation(a, point):
    shifted = a.substitute_shift([1, 2])
    assert shifted.evaluate(point) == a.evaluate((point[0] + 1, point[1] + 2))


def test_inexact_division():
    z1 = MultiPoly.var(0, 2, Q)
    z2 = MultiPoly.var(1, 2, Q)
    with pytest.raises(InexactDivision):
        (z1 + MultiPoly.const(1, 2, Q)).divide_exact(z2)


def test_schur_bialternant_small_cases():
    f = Field(2)
    h2 = monomial_symmetric((2, 0), 2, f) + monomial_symmetric((1, 1), 2, f)
    assert schur_bialternant((2, 0), 2, f) == h2
    assert schur_bialternant((1, 1, 1), 3, f) == elementary(3, 3, f)
    assert vandermonde(2, f) == MultiPoly.var(0, 2, f) - MultiPoly.var(1, 2, f)


def test_monomial_basis_round_trip():
    p = monomial_symmetric((2, 1), 3, S) + monomial_symmetric((1, 1, 1), 3, S).scale(S.d)
    sym = to_monomial_basis(p)
    assert sym.expand() == p
    assert sym.to_text() == "m[2,1,0] + d*m[1,1,1]"


def test_text_rendering_and_parse():
    p = MultiPoly({(2, 1): S.one, (1, 1): 2 * S.d / (S.d + 2)}, 2, S)
    assert p.to_text() == "1*z1^2*z2 + (2*d/(d+2))*z1*z2"
    assert parse_poly(p.to_text(), 2, S) == p
    q = MultiPoly({(2,): Fraction(1), (1,): Fraction(-1)}, 1, Q)
    assert q.to_pretty() == "z1^2 - z1"
    assert q.to_latex() == "z_{1}^{2} - z_{1}"
    assert monomial_symmetric((1, 0), 2, Q).permute((1, 0)) == monomial_symmetric((1, 0), 2, Q)
    assert monomial_symmetric((2, 1), 2, Q).is_symmetric()
    assert not MultiPoly.var(0, 2, Q).is_symmetric()
