from fractions import Fraction

import pytest

from jackpieri.combinatorics import dominance_leq, partitions_up_to
from jackpieri.errors import EigenvalueCollision, PoleInA
from jackpieri.field import Field, RatFunc
from jackpieri.jack import a_coefficient, eval_at_ones, jack, phi, psi
from jackpieri.polyring import elementary, monomial_symmetric

S = Field(None)
d = RatFunc.variable()


def test_known_expansions():
    assert jack((2, 0), S).expansion.coeffs == {(2, 0): 1, (1, 1): 2 * d / (d + 2)}
    assert jack((2, 1, 0), S).expansion.coeffs[(1, 1, 1)] == 3 * d / (d + 1)
    assert jack((2, 0), Field(2)).expansion.to_text() == "m[2,0] + 1*m[1,1]"


def test_d_limits():
    # d -> infinity in 2/d is the monomial basis; at d=2 this is checked against Schur elsewhere
    f = Field(Fraction(10**9))
    P = jack((2, 1), f).expansion.coeffs
    assert abs(float(P[(2, 1)]) - 1) < 1e-12


def test_columns_are_elementary():
    for r in (2, 3):
        for l in range(r + 1):
            m = (1,) * l + (0,) * (r - l)
            assert jack(m, S).poly == elementary(r, l, S)


def test_triangularity_and_symmetry():
    f = Field(Fraction(1, 2))
    for m in partitions_up_to(4, 3):
        P = jack(m, f)
        assert P.poly.is_symmetric()
        assert P.expansion.coeffs[m] == 1
        assert all(dominance_leq(k, m) for k in P.expansion.coeffs)


def test_specialization_commutes_with_construction():
    for m in partitions_up_to(3, 2):
        sym = jack(m, S).poly
        for d0 in (1, 3, Fraction(1, 2)):
            assert sym.specialize(Field(d0)) == jack(m, Field(d0)).poly


def test_normalizations():
    f = Field(3)
    for m in partitions_up_to(3, 2):
        assert phi(m, f).poly.evaluate([1, 1]) == 1
        assert psi(m, f).poly.scale(psi(m, f).normalizer) == jack(m, f).poly
    assert eval_at_ones((2, 0), S) == 2 + 2 * d / (d + 2)


def test_eigenvalue_collision_is_reported():
    # at d = -2 the eigenvalues of (2,0) and (1,1) coincide
    with pytest.raises(EigenvalueCollision):
        jack((2, 0), Field(-2))


def test_a_coefficient():
    f = Field(2)
    assert a_coefficient(+1, (1, 0), (0,), f) == Fraction(3, 2)
    assert a_coefficient(+1, (1, 0), (), f) == 1
    assert a_coefficient(+1, (1, 0), (0, 1), f) == 1
    with pytest.raises(PoleInA):
        a_coefficient(+1, (0, 1), (0,), f)
    assert monomial_symmetric((1, 0), 2, f) == jack((1, 0), f).poly
