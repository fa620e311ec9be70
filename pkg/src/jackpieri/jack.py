"""Jack polynomials from the triangular eigenproblem of D, and their normalizations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import dominance_leq, partitions_of
from .errors import EigenvalueCollision, PoleInA, ZeroNormalizer
from .field import Field
from .operators import apply_D
from .polyring import MultiPoly, SymPoly, monomial_symmetric


@dataclass(frozen=True, eq=False)
class JackPolynomial:
    index: tuple
    expansion: SymPoly
    poly: MultiPoly
    field: Field

    @property
    def rank(self):
        return len(self.index)


@dataclass(frozen=True, eq=False)
class NormalizedJack:
    kind: str  # "Phi" or "Psi"
    underlying: JackPolynomial
    normalizer: object
    poly: MultiPoly

    @property
    def index(self):
        return self.underlying.index


def eigenvalue(m, field: Field):
    """sum_j m_j (m_j - 1 + d (r - j))."""
    r = len(m)
    d = field.d
    return sum((field(mj) * (mj - 1) + d * (mj * (r - 1 - j)) for j, mj in enumerate(m)), field.zero)


@lru_cache(maxsize=None)
def d_matrix(n: int, r: int, field: Field) -> dict:
    """Rows D(m_k) on the monomial basis, for every partition k of n."""
    return {k: apply_D(monomial_symmetric(k, r, field)).to_monomial_basis().coeffs for k in partitions_of(n, r)}


@lru_cache(maxsize=None)
def jack(m, field: Field) -> JackPolynomial:
    """P_m(z; d/2): monic in m_m, lower terms fixed top-down by the eigen equation."""
    m = tuple(m)
    r, n = len(m), sum(m)
    rows = d_matrix(n, r, field)
    lower = [k for k in partitions_of(n, r) if k != m and dominance_leq(k, m)]
    em = eigenvalue(m, field)
    coeffs = {m: field.one}
    for k in lower:
        gap = em - eigenvalue(k, field)
        if not gap:
            raise EigenvalueCollision(field.d, m, k)
        rhs = field.zero
        for j, cj in coeffs.items():
            mjk = rows[j].get(k)
            if mjk is not None:
                rhs = rhs + cj * mjk
        if rhs:
            coeffs[k] = rhs / gap
    expansion = SymPoly(coeffs, r, field)
    return JackPolynomial(m, expansion, expansion.expand(), field)


@lru_cache(maxsize=None)
def eval_at_ones(m, field: Field):
    v = jack(tuple(m), field).poly.evaluate([1] * len(m))
    if not v:
        raise ZeroNormalizer(f"P_{m}(1) vanishes at d={field}")
    return v


@lru_cache(maxsize=None)
def phi(m, field: Field) -> NormalizedJack:
    p = jack(tuple(m), field)
    c = eval_at_ones(tuple(m), field)
    return NormalizedJack("Phi", p, c, p.poly.scale(1 / c))


@lru_cache(maxsize=None)
def psi(m, field: Field) -> NormalizedJack:
    from .interpjack import own_value

    p = jack(tuple(m), field)
    c = own_value(tuple(m), field)
    return NormalizedJack("Psi", p, c, p.poly.scale(1 / c))


def a_coefficient(sign: int, x, J, field: Field, within=None):
    """A_{+-,J}(x) = prod_{j in J, l in K \\ J} (x_j - x_l - (d/2)(j-l) +- d/2) / (x_j - x_l - (d/2)(j-l)).

    ``K`` is ``within`` (default all of [r]); a single index i is J=(i,), and
    the restricted form over I \\ {i} is ``within=I``.
    """
    r = len(x)
    h = field.half_d
    pool = range(r) if within is None else within
    js = set(J)
    num = field.one
    den = field.one
    for j in J:
        xj = field(x[j])
        for l in pool:
            if l in js:
                continue
            base = xj - x[l] - h * (j - l)
            if not base:
                raise PoleInA(tuple(x), field.d, (j, l))
            num = num * (base + h if sign > 0 else base - h)
            den = den * base
    return num / den
