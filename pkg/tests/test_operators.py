from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jackpieri.errors import NotSymmetric
from jackpieri.field import Field
from jackpieri.jack import eigenvalue, jack
from jackpieri.combinatorics import partitions_up_to, staircase
from jackpieri.operators import (
    UPoly,
    apply_ad_twist,
    apply_D,
    apply_sekiguchi,
    apply_sekiguchi_gen,
    apply_total_derivative,
    eigen_I,
    elementary_scalar,
    multiply_total,
    s_shift,
)
from jackpieri.polyring import MultiPoly, monomial_symmetric

F = Field(Fraction(3, 2))


@st.composite
def polys(draw, rank=2):
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(0, 3)] * rank),
            st.fractions(min_value=-5, max_value=5, max_denominator=4),
            max_size=4,
        )
    )
    return MultiPoly(terms, rank, F)


@given(polys())
def test_total_derivative_commutator(f):
    lhs = apply_total_derivative(multiply_total(f)) - multiply_total(apply_total_derivative(f))
    assert lhs == f.scale(2)


def _sym(rank):
    return st.lists(
        st.tuples(st.sampled_from(partitions_up_to(3, rank)), st.integers(-4, 4)), max_size=3
    ).map(lambda items: sum((monomial_symmetric(m, rank, F).scale(c) for m, c in items), MultiPoly.zero(rank, F)))


@given(_sym(3))
def test_sekiguchi_operators_commute(f):
    for p in range(4):
        for q in range(p + 1, 4):
            assert apply_sekiguchi(p, apply_sekiguchi(q, f)) == apply_sekiguchi(q, apply_sekiguchi(p, f))


@given(_sym(2))
def test_first_sekiguchi_operator(f):
    # H_1 = (2/d) sum_i z_i d_i + r(r-1)/2 on homogeneous input scales by degree
    for n in range(4):
        g = f.homogeneous_part(n)
        assert apply_sekiguchi(1, g) == g.scale(F.two_over_d * n + 1)


def test_single_sekiguchi_eigenvalue():
    for m in partitions_up_to(3, 3):
        P = jack(m, F).poly
        for p in range(4):
            want = F.two_over_d**p * elementary_scalar(s_shift(m, F), p, F)
            assert apply_sekiguchi(p, P) == P.scale(want)


def test_generating_function_eigenvalue():
    m = (2, 1, 0)
    P = jack(m, F).poly
    assert apply_sekiguchi_gen(P) == eigen_I(m, F).times_poly(P)


def test_D_rejects_asymmetric_input():
    with pytest.raises(NotSymmetric):
        apply_D(MultiPoly.var(0, 2, F))


def test_D_eigenvalue_on_jacks():
    for m in partitions_up_to(4, 2):
        P = jack(m, F).poly
        assert apply_D(P) == P.scale(eigenvalue(m, F))


def test_ad_twist_degree_zero_is_identity_when_l_is_zero():
    f = jack((2, 1), F).poly
    assert apply_ad_twist(0, f, p=0) == f


def test_upoly_arithmetic():
    z = F.zero
    a = UPoly([1, 2], z)
    b = UPoly([0, 1], z)
    assert (a * b).coeff(2) == 2
    assert (a - a) == UPoly([], z)
    assert a.at(Fraction(1, 2)) == 2
    assert staircase(2) == (1, 0)
