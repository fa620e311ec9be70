"""Differential operators applied to concrete polynomials.

Nothing here builds an operator algebra: every function takes a polynomial
and returns the image under a fixed operator.  Results that carry the
formal variable ``u`` are :class:`UPoly` values.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinatorics import subsets
from .errors import NotSymmetric
from .field import Field
from .polyring import MultiPoly, vandermonde


class UPoly:
    """Polynomial in ``u``; ``coeffs[k]`` multiplies ``u**k``.

    Coefficients are scalars or MultiPolys; ``zero`` is the additive
    identity used to pad missing powers.
    """

    __slots__ = ("coeffs", "zero")

    def __init__(self, coeffs, zero):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = coeffs
        self.zero = zero

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.coeff(k) == other.coeff(k) for k in range(n))

    __hash__ = None

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly([self.coeff(k) + other.coeff(k) for k in range(n)], self.zero)

    def __neg__(self):
        return UPoly([-c for c in self.coeffs], self.zero)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UPoly):
            if not self.coeffs or not other.coeffs:
                return UPoly([], self.zero * other.zero if _is_scalar(self.zero) else self.zero)
            zero = self.coeffs[0] * other.coeffs[0]
            zero = zero - zero
            out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return UPoly(out, zero)
        return UPoly([c * other for c in self.coeffs], self.zero * other if _is_scalar(self.zero) else self.zero)

    def times_poly(self, f: MultiPoly) -> UPoly:
        """Scalar-coefficient UPoly times a polynomial in z."""
        return UPoly([f.scale(c) for c in self.coeffs], MultiPoly.zero(f.rank, f.field))

    def map(self, fn) -> UPoly:
        return UPoly([fn(c) for c in self.coeffs], fn(self.zero))

    def at(self, u0):
        acc = self.zero
        for c in reversed(self.coeffs):
            acc = acc * u0 + c
        return acc

    def __repr__(self):
        return "UPoly(" + " + ".join(f"[{c}]*u^{k}" for k, c in enumerate(self.coeffs)) + ")"

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            s = c.to_text() if isinstance(c, MultiPoly) else str(c)
            parts.append(f"({s})" + ("" if k == 0 else "*u" if k == 1 else f"*u^{k}"))
        return " + ".join(parts)


def _is_scalar(x):
    return not isinstance(x, MultiPoly)


def scalar_upoly(coeffs, field: Field) -> UPoly:
    return UPoly([field(c) for c in coeffs], field.zero)


# ---------------------------------------------------------------------------


def apply_total_derivative(f: MultiPoly) -> MultiPoly:
    out = MultiPoly.zero(f.rank, f.field)
    for i in range(f.rank):
        out = out + f.derivative(i)
    return out


def multiply_total(f: MultiPoly) -> MultiPoly:
    """|z| * f."""
    out = MultiPoly.zero(f.rank, f.field)
    for i in range(f.rank):
        out = out + f * MultiPoly.var(i, f.rank, f.field)
    return out


def apply_D(f: MultiPoly) -> MultiPoly:
    """The second-order operator whose eigenfunctions are the Jack polynomials.

    The singular pair terms are merged two at a time,
    ``(z_j^2 f_j - z_l^2 f_l) / (z_j - z_l)``, which is a polynomial when
    ``f`` is symmetric, so the result never leaves the polynomial ring.
    """
    if not f.is_symmetric():
        raise NotSymmetric("apply_D needs a symmetric polynomial")
    r, field = f.rank, f.field
    out = MultiPoly.zero(r, field)
    euler = [f.euler(j) for j in range(r)]
    sq = []
    for j in range(r):
        # z_j^2 d_j^2 = E_j^2 - E_j
        out = out + euler[j].euler(j) - euler[j]
        sq.append(euler[j] * MultiPoly.var(j, r, field))
    pairs = MultiPoly.zero(r, field)
    for j in range(r):
        for l in range(j + 1, r):
            num = sq[j] - sq[l]
            if num:
                lin = MultiPoly.var(j, r, field) - MultiPoly.var(l, r, field)
                pairs = pairs + num.divide_exact(lin)
    return out + pairs.scale(field.d)


def _subset_eulers(f: MultiPoly):
    """E_J f for every J, keyed by bitmask."""
    r = f.rank
    out = {0: f}
    for mask in range(1, 1 << r):
        low = (mask & -mask).bit_length() - 1
        out[mask] = out[mask & (mask - 1)].euler(low)
    return out


@lru_cache(maxsize=None)
def _delta_eulers(r: int, field: Field):
    return _subset_eulers(vandermonde(r, field))


def _mask(I):
    m = 0
    for i in I:
        m |= 1 << i
    return m


def sekiguchi_all(f: MultiPoly) -> list:
    """[H_{r,0} f, ..., H_{r,r} f].

    Each term's Vandermonde factor is the multiplier (E_I Delta)/Delta; the
    numerators for fixed p are accumulated and divided by Delta once, which
    is exact for symmetric input.
    """
    r, field = f.rank, f.field
    ej = _subset_eulers(f)
    edelta = _delta_eulers(r, field)
    delta = vandermonde(r, field)
    a = field.two_over_d
    out = []
    for p in range(r + 1):
        numer = MultiPoly.zero(r, field)
        for l in range(p + 1):
            weight = a ** (p - l)
            for I in subsets(r, l):
                im = _mask(I)
                g = MultiPoly.zero(r, field)
                rest = [j for j in range(r) if not (im >> j) & 1]
                for J in _subsets_of(tuple(rest), p - l):
                    g = g + ej[_mask(J)]
                if g:
                    numer = numer + (edelta[im] * g).scale(weight)
        out.append(numer.divide_exact(delta) if r > 1 else numer)
    return out


@lru_cache(maxsize=None)
def _subsets_of(items: tuple, size: int):
    from itertools import combinations

    return tuple(combinations(items, size))


def apply_sekiguchi(p: int, f: MultiPoly) -> MultiPoly:
    if not 0 <= p <= f.rank:
        raise ValueError(f"p={p} outside 0..{f.rank}")
    return sekiguchi_all(f)[p]


def apply_sekiguchi_gen(f: MultiPoly) -> UPoly:
    """S_r(u; z) f with the u^(r-p) coefficient equal to H_{r,p} f."""
    hs = sekiguchi_all(f)
    r = f.rank
    return UPoly([hs[r - k] for k in range(r + 1)], MultiPoly.zero(r, f.field))


def apply_ad_twist(l: int, f: MultiPoly, p: int | None = None):
    """[(ad |d_z|)^l / l!] applied to S_r(u; z) (or to H_{r,p} alone) on f.

    Expanded as sum_j (-1)^(l-j) / (j! (l-j)!) |d|^j S |d|^(l-j) f.
    Returns a UPoly, or a MultiPoly when ``p`` is given.
    """
    r, field = f.rank, f.field
    if l < 0:
        raise ValueError("l must be nonnegative")
    lowered = [f]
    for _ in range(l):
        lowered.append(apply_total_derivative(lowered[-1]))
    total = None
    for j in range(l + 1):
        g = lowered[l - j]
        w = Fraction((-1) ** (l - j), factorial(j) * factorial(l - j))
        img = apply_sekiguchi(p, g) if p is not None else apply_sekiguchi_gen(g)
        for _ in range(j):
            img = apply_total_derivative(img) if p is not None else img.map(apply_total_derivative)
        img = img.scale(w) if p is not None else img.map(lambda c, w=w: c.scale(w))
        total = img if total is None else total + img
    return total


def eigen_poly_I(x, Jc, field: Field) -> UPoly:
    """(2/d)^r prod_{l in Jc} (x_l + (d/2)(u + r - l)); all of [r] gives I_r(u; x)."""
    r = len(x)
    h = field.half_d
    out = scalar_upoly([field.two_over_d**r], field)
    for l in Jc:
        s = field(x[l]) + h * (r - 1 - l)
        out = out * UPoly([s, h], field.zero)
    return out


def eigen_I(x, field: Field) -> UPoly:
    return eigen_poly_I(x, tuple(range(len(x))), field)


def s_shift(x, field: Field) -> list:
    """s_j = x_j + (d/2)(r - j), i.e. the point x + (d/2) delta."""
    r = len(x)
    return [field(x[j]) + field.half_d * (r - 1 - j) for j in range(r)]


def elementary_scalar(values, l: int, field: Field):
    """e_l of a list of scalars."""
    e = [field.one] + [field.zero] * l
    for v in values:
        for k in range(l, 0, -1):
            e[k] = e[k] + e[k - 1] * v
    return e[l] if l <= len(values) else field.zero
