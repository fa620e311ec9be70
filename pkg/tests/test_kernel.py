import math
from fractions import Fraction

import pytest

from jackpieri.field import Field
from jackpieri.kernel import build_kernel, kernel_text, verify_intertwining, verify_symmetry


def test_rank_one_is_exponential():
    kern = build_kernel(4, 1, Field(Fraction(1, 3)))
    for m in range(5):
        assert kern.coefficient((m,), (m,)) == Fraction(1, math.factorial(m))
    assert kern.coefficient((1,), (2,)) == 0


@pytest.mark.parametrize("d", [1, Fraction(1, 2), None])
def test_relations_rank_two(d):
    kern = build_kernel(3, 2, Field(d))
    assert verify_symmetry(kern).ok
    for l in range(3):
        rep = verify_intertwining(kern, l)
        assert rep.ok, rep.first_failure


def test_l_out_of_range():
    with pytest.raises(ValueError):
        verify_intertwining(build_kernel(1, 2, Field(1)), 3)


def test_text_render():
    text = kernel_text(build_kernel(2, 1, Field(1)))
    assert text.splitlines()[2] == "[2] (1/2*z1^2) * (w1^2)"
