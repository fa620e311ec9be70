"""Interpolation (shifted) Jack polynomials and the Knop-Sahi difference operator.

P^ip_m is written as P_m + sum a_mu P_mu over |mu| < |m| and the a_mu are
fixed by vanishing at nu + (d/2) delta for every |nu| < |m|.  That system is
square; vanishing at weights >= |m| is not imposed and is tested separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import is_partition, partitions_up_to, shift_by_subset, subsets, complement
from .errors import NotSymmetric, SingularSystem, ZeroNormalizer
from .field import Field
from .jack import a_coefficient, eval_at_ones, jack
from .linalg import Singular, solve
from .operators import UPoly, eigen_poly_I, s_shift
from .polyring import MultiPoly


@dataclass(frozen=True, eq=False)
class InterpJackPolynomial:
    index: tuple
    jack_coeffs: dict  # partition -> coefficient on P_mu; index maps to 1
    poly: MultiPoly
    field: Field

    @property
    def rank(self):
        return len(self.index)


def shifted_point(x, field: Field) -> tuple:
    """x + (d/2) delta."""
    return tuple(s_shift(x, field))


@lru_cache(maxsize=None)
def _jack_at(mu, nu, field: Field):
    return jack(mu, field).poly.evaluate(shifted_point(nu, field))


@lru_cache(maxsize=None)
def interp_jack(m, field: Field) -> InterpJackPolynomial:
    m = tuple(m)
    r, n = len(m), sum(m)
    basis = partitions_up_to(n - 1, r) if n else []
    coeffs = {m: field.one}
    if basis:
        A = [[_jack_at(mu, nu, field) for mu in basis] for nu in basis]
        b = [-_jack_at(m, nu, field) for nu in basis]
        try:
            sol = solve(A, b, field)
        except Singular:
            raise SingularSystem(field.d, m) from None
        for mu, a in zip(basis, sol):
            if a:
                coeffs[mu] = a
    poly = MultiPoly.zero(r, field)
    for mu, a in coeffs.items():
        poly = poly + jack(mu, field).poly.scale(a)
    return InterpJackPolynomial(m, coeffs, poly, field)


def eval_interp(m, point, field: Field):
    return interp_jack(tuple(m), field).poly.evaluate(point)


@lru_cache(maxsize=None)
def own_value(m, field: Field):
    """P^ip_m(m + (d/2) delta), the Psi normalizer."""
    v = eval_interp(m, shifted_point(m, field), field)
    if not v:
        raise ZeroNormalizer(f"P^ip_{m} vanishes at its own point for d={field}")
    return v


def binomial_coefficient(k, x, field: Field):
    """P^ip_k(x + (d/2) delta) / P_k(1)."""
    k = tuple(k)
    return eval_interp(k, shifted_point(x, field), field) / eval_at_ones(k, field)


def jack_decompose(p: MultiPoly) -> dict:
    """Coefficients of a symmetric polynomial on the Jack basis {P_lambda}."""
    out = {}
    rem = p
    while rem:
        e, c = rem.leading_term()
        if not is_partition(e):
            raise NotSymmetric(f"leading exponent {e} is not a partition")
        out[e] = c
        rem = rem - jack(e, p.field).poly.scale(c)
    return out


@dataclass(frozen=True)
class DifferenceOperator:
    """sum_J (-1)^|J| I_{J^c}(u; x) A_{-,J}(x) prod_{j in J} s_j T^J."""

    rank: int
    field: Field

    def terms(self, x):
        r, field = self.rank, self.field
        s = s_shift(x, field)
        for J in subsets(r):
            coef = field.one
            for j in J:
                coef = coef * s[j]
            if coef:
                coef = coef * a_coefficient(-1, x, J, field)
            if len(J) % 2:
                coef = -coef
            yield J, eigen_poly_I(x, complement(J, r), field) * coef

    def apply(self, fn, x) -> UPoly:
        """Apply to the function ``y -> fn(y)`` at the point x."""
        out = UPoly([], self.field.zero)
        for J, coef in self.terms(x):
            if coef:
                y, _ = shift_by_subset(tuple(x), J, -1)
                out = out + coef * fn(y)
        return out


def apply_difference_operator(k, x, field: Field) -> UPoly:
    op = DifferenceOperator(len(x), field)
    return op.apply(lambda y: eval_interp(k, shifted_point(y, field), field), x)
