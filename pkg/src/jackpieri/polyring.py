"""Sparse exact polynomials in z_1..z_r over a :class:`~jackpieri.field.Field`.

A :class:`MultiPoly` is a dict from exponent tuples to nonzero scalars.
:class:`SymPoly` stores a symmetric polynomial on the monomial symmetric
basis m_lambda.  Term order everywhere is graded lex: total degree first,
then lexicographic on the exponent tuple.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .combinatorics import is_partition
from .errors import InexactDivision, ModeMismatch, NotSymmetric, RankMismatch
from .field import Field, RatFunc, parse_scalar


def grlex_key(e):
    return (sum(e), e)


class MultiPoly:
    __slots__ = ("terms", "rank", "field")

    def __init__(self, terms, rank: int, field: Field, *, _trusted: bool = False):
        self.rank = rank
        self.field = field
        if _trusted:
            self.terms = terms
            return
        clean = {}
        for e, c in dict(terms).items():
            e = tuple(e)
            if len(e) != rank:
                raise RankMismatch(f"exponent {e} has length != {rank}")
            c = field(c)
            if c:
                clean[e] = clean.get(e, field.zero) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, rank, field):
        return cls({}, rank, field, _trusted=True)

    @classmethod
    def const(cls, c, rank, field):
        c = field(c)
        return cls({(0,) * rank: c} if c else {}, rank, field, _trusted=True)

    @classmethod
    def var(cls, i, rank, field):
        e = tuple(1 if j == i else 0 for j in range(rank))
        return cls({e: field.one}, rank, field, _trusted=True)

    @classmethod
    def monomial(cls, exps, rank, field, c=1):
        return cls({tuple(exps): c}, rank, field)

    def _new(self, terms):
        return MultiPoly(terms, self.rank, self.field, _trusted=True)

    def _check(self, other):
        if other.rank != self.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")
        if other.field != self.field:
            raise ModeMismatch(f"field d={self.field} vs d={other.field}")

    # -- basic protocol -------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.rank == other.rank and self.terms == other.terms
        if isinstance(other, (int, Fraction, RatFunc)):
            return self == MultiPoly.const(other, self.rank, self.field)
        return NotImplemented

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r}, r={self.rank}, d={self.field})"

    def __str__(self):
        return self.to_text()

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, n: int) -> MultiPoly:
        return self._new({e: c for e, c in self.terms.items() if sum(e) == n})

    def leading_term(self):
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction, RatFunc)):
                other = MultiPoly.const(other, self.rank, self.field)
            else:
                return NotImplemented
        self._check(other)
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            other = MultiPoly.const(other, self.rank, self.field)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.field(c)
        if not c:
            return MultiPoly.zero(self.rank, self.field)
        if c == 1:
            return self
        return self._new({e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple([a + b for a, b in zip(e1, e2)])
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return self._new({e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction, RatFunc)):
            return self.scale(1 / self.field(c))
        return NotImplemented

    def __pow__(self, n: int):
        out = MultiPoly.const(1, self.rank, self.field)
        for _ in range(n):
            out = out * self
        return out

    def mul_monomial(self, exps, c):
        return self._new({tuple([a + b for a, b in zip(e, exps)]): v * c for e, v in self.terms.items()})

    # -- calculus -------------------------------------------------------------
    def derivative(self, i: int) -> MultiPoly:
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1 :]
                out[e2] = c * k
        return self._new(out)

    def euler(self, i: int) -> MultiPoly:
        """z_i d/dz_i."""
        return self._new({e: c * e[i] for e, c in self.terms.items() if e[i]})

    def permute(self, perm) -> MultiPoly:
        """Relabel variables: z_i -> z_perm[i]."""
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * self.rank
            for i, k in enumerate(e):
                e2[perm[i]] = k
            out[tuple(e2)] = c
        return self._new(out)

    def is_symmetric(self) -> bool:
        r = self.rank
        if r < 2:
            return True
        swap = (1, 0) + tuple(range(2, r))
        cycle = tuple(range(1, r)) + (0,)
        return self.permute(swap) == self and self.permute(cycle) == self

    def substitute_shift(self, offsets) -> MultiPoly:
        """p(z_1 + c_1, ..., z_r + c_r)."""
        offsets = [self.field(c) for c in offsets]
        if len(offsets) != self.rank:
            raise RankMismatch("offset length")
        out = MultiPoly.zero(self.rank, self.field)
        shifted = [
            MultiPoly({tuple(1 if j == i else 0 for j in range(self.rank)): 1, (0,) * self.rank: c}, self.rank, self.field)
            for i, c in enumerate(offsets)
        ]
        powers = [[MultiPoly.const(1, self.rank, self.field)] for _ in range(self.rank)]

        def pw(i, k):
            lst = powers[i]
            while len(lst) <= k:
                lst.append(lst[-1] * shifted[i])
            return lst[k]

        for e, c in self.terms.items():
            term = MultiPoly.const(c, self.rank, self.field)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    def divide_exact(self, q: MultiPoly) -> MultiPoly:
        """Quotient by leading-term long division; raises if q does not divide."""
        self._check(q)
        if not q:
            raise ZeroDivisionError("division by the zero polynomial")
        qe, qc = q.leading_term()
        qinv = 1 / qc
        rem = dict(self.terms)
        quot = {}
        qterms = list(q.terms.items())
        while rem:
            e = max(rem, key=grlex_key)
            c = rem[e]
            shift = tuple([a - b for a, b in zip(e, qe)])
            if min(shift) < 0:
                raise InexactDivision(f"{q.to_text()} does not divide the dividend")
            f = c * qinv
            quot[shift] = f
            for e2, c2 in qterms:
                t = tuple([a + b for a, b in zip(e2, shift)])
                v = rem.get(t)
                v = -(c2 * f) if v is None else v - c2 * f
                if v:
                    rem[t] = v
                else:
                    del rem[t]
        return self._new(quot)

    def evaluate(self, point):
        point = [self.field(v) for v in point]
        if len(point) != self.rank:
            raise RankMismatch("point length")
        cache = [{0: self.field.one} for _ in point]

        def pw(i, k):
            c = cache[i]
            if k not in c:
                c[k] = point[i] ** k
            return c[k]

        acc = self.field.zero
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            acc = acc + t
        return acc

    def specialize(self, field: Field) -> MultiPoly:
        """Map a symbolic-d polynomial to rational mode at ``field.d_value``."""
        from .field import eval_at_d

        return MultiPoly({e: eval_at_d(c, field.d_value) for e, c in self.terms.items()}, self.rank, field)

    # -- symmetric bridge ---------------------------------------------------
    def to_monomial_basis(self) -> SymPoly:
        rem = self
        coeffs = {}
        while rem:
            e, c = rem.leading_term()
            if not is_partition(e):
                raise NotSymmetric(f"leading exponent {e} is not weakly decreasing")
            coeffs[e] = c
            rem = rem - monomial_symmetric(e, self.rank, self.field).scale(c)
        return SymPoly(coeffs, self.rank, self.field)

    # -- rendering ------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def to_text(self, var: str = "z") -> str:
        """Canonical form with explicit coefficients; parsed back by :func:`parse_poly`."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            parts.append(_coef_text(c) + "".join("*" + m for m in _mono_factors(e, var)))
        return " + ".join(parts)

    def to_pretty(self, var: str = "z") -> str:
        """Human form: unit coefficients dropped, subtraction written out."""
        if not self.terms:
            return "0"
        out = ""
        for n, (e, c) in enumerate(self.sorted_terms()):
            neg, a = split_sign(c)
            mono = "*".join(_mono_factors(e, var))
            if not mono:
                body = _pretty_coef(a)
            elif a == 1:
                body = mono
            else:
                body = f"{_pretty_coef(a)}*{mono}"
            if n == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out

    def to_latex(self, var: str = "z") -> str:
        if not self.terms:
            return "0"
        out = ""
        for n, (e, c) in enumerate(self.sorted_terms()):
            neg, a = split_sign(c)
            mono = " ".join(f"{var}_{{{i + 1}}}" + (f"^{{{k}}}" if k > 1 else "") for i, k in enumerate(e) if k)
            coef = "" if (a == 1 and mono) else latex_scalar(a)
            body = (coef + " " + mono).strip()
            out += ("-" if neg else "") + body if n == 0 else (" - " if neg else " + ") + body
        return out

    def to_json(self):
        return [{"exponents": list(e), "coefficient": str(c)} for e, c in self.sorted_terms()]


def _mono_factors(e, var):
    return [f"{var}{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k]


def _coef_text(c) -> str:
    s = str(c)
    if re.fullmatch(r"\d+", s):
        return s
    return f"({s})"


def split_sign(c):
    """(is_negative, absolute value) with negativity read off the leading coefficient."""
    if isinstance(c, RatFunc):
        neg = bool(c.num) and c.num[-1] < 0
        return neg, (-c if neg else c)
    return c < 0, abs(c)


def _pretty_coef(a) -> str:
    s = str(a)
    if re.fullmatch(r"[\d/]+|d", s):
        return s
    return f"({s})"


def latex_scalar(c) -> str:
    if isinstance(c, RatFunc):
        from .field import _pstr

        n = _pstr(c.num).replace("*", "")
        if c.den == (Fraction(1),):
            return n
        return r"\frac{" + n + "}{" + _pstr(c.den).replace("*", "") + "}"
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return sign + r"\frac{" + str(abs(c.numerator)) + "}{" + str(c.denominator) + "}"


_VAR = re.compile(r"([a-zA-Z])(\d+)")


def parse_poly(text: str, rank: int, field: Field, var: str = "z") -> MultiPoly:
    """Parse polynomial text (canonical or pretty) back into a MultiPoly."""
    # Split into top-level terms on ' + ' / ' - ' outside parentheses.
    text = text.strip()
    if text == "0":
        return MultiPoly.zero(rank, field)
    terms, depth, start, signs = [], 0, 0, [1]
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text[i : i + 3] in (" + ", " - "):
            terms.append(text[start:i])
            signs.append(1 if text[i + 1] == "+" else -1)
            i += 3
            start = i
            continue
        i += 1
    terms.append(text[start:])
    out = MultiPoly.zero(rank, field)
    for sign, term in zip(signs, terms):
        term = term.strip()
        if term.startswith("-"):
            sign, term = -sign, term[1:]
        exps = [0] * rank
        coef = field.one
        for factor in _split_factors(term):
            m = re.fullmatch(rf"{var}(\d+)(?:\^(\d+))?", factor)
            if m:
                exps[int(m.group(1)) - 1] += int(m.group(2) or 1)
            else:
                coef = coef * field(parse_scalar(factor, symbolic=field.symbolic))
        out = out + MultiPoly({tuple(exps): coef * sign}, rank, field)
    return out


def _split_factors(term: str):
    out, depth, start = [], 0, 0
    for i, ch in enumerate(term):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            out.append(term[start:i])
            start = i + 1
    out.append(term[start:])
    return [f for f in out if f]


class SymPoly:
    """Coefficients on the monomial symmetric basis."""

    __slots__ = ("coeffs", "rank", "field")

    def __init__(self, coeffs, rank: int, field: Field):
        self.rank = rank
        self.field = field
        self.coeffs = {}
        for lam, c in dict(coeffs).items():
            lam = tuple(lam) + (0,) * (rank - len(lam))
            if not is_partition(lam) or len(lam) != rank:
                raise ValueError(f"{lam} is not a partition of length {rank}")
            c = field(c)
            if c:
                self.coeffs[lam] = c

    def expand(self) -> MultiPoly:
        out = MultiPoly.zero(self.rank, self.field)
        for lam, c in self.coeffs.items():
            out = out + monomial_symmetric(lam, self.rank, self.field).scale(c)
        return out

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.rank == other.rank and self.coeffs == other.coeffs

    __hash__ = None

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def to_text(self) -> str:
        """Leading basis element bare, lower ones with explicit coefficients."""
        items = self.sorted_items()
        if not items:
            return "0"
        out = ""
        for n, (lam, c) in enumerate(items):
            name = "m[" + ",".join(map(str, lam)) + "]"
            neg, a = split_sign(c)
            if n == 0:
                out = name if c == 1 else f"{'-' if neg else ''}{_pretty_coef(a)}*{name}"
            else:
                out += (" - " if neg else " + ") + f"{_pretty_coef(a)}*{name}"
        return out

    def to_latex(self) -> str:
        items = self.sorted_items()
        if not items:
            return "0"
        out = ""
        for n, (lam, c) in enumerate(items):
            name = "m_{(" + ",".join(map(str, lam)) + ")}"
            neg, a = split_sign(c)
            body = name if a == 1 else latex_scalar(a) + " " + name
            out += ("-" if neg else "") + body if n == 0 else (" - " if neg else " + ") + body
        return out

    def to_json(self):
        return [{"partition": list(lam), "coefficient": str(c)} for lam, c in self.sorted_items()]

    def __repr__(self):
        return f"SymPoly({self.to_text()!r})"


def to_monomial_basis(p: MultiPoly) -> SymPoly:
    return p.to_monomial_basis()


@lru_cache(maxsize=None)
def monomial_symmetric(lam, rank: int, field: Field) -> MultiPoly:
    lam = tuple(lam) + (0,) * (rank - len(lam))
    return MultiPoly({e: field.one for e in set(permutations(lam))}, rank, field, _trusted=True)


@lru_cache(maxsize=None)
def elementary(rank: int, l: int, field: Field) -> MultiPoly:
    return monomial_symmetric((1,) * l + (0,) * (rank - l), rank, field)


@lru_cache(maxsize=None)
def vandermonde(rank: int, field: Field) -> MultiPoly:
    """Delta(z) = prod_{i<j} (z_i - z_j)."""
    out = MultiPoly.const(1, rank, field)
    for i in range(rank):
        for j in range(i + 1, rank):
            out = out * (MultiPoly.var(i, rank, field) - MultiPoly.var(j, rank, field))
    return out


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def alternant(exponents, rank: int, field: Field) -> MultiPoly:
    """det(z_i^{a_j}) by permutation expansion."""
    terms = {}
    for perm in permutations(range(rank)):
        e = [0] * rank
        for j, i in enumerate(perm):
            e[i] = exponents[j]
        terms[tuple(e)] = terms.get(tuple(e), 0) + _perm_sign(perm)
    return MultiPoly(terms, rank, field)


def schur_bialternant(lam, rank: int, field: Field) -> MultiPoly:
    """Schur polynomial as det(z_i^{lam_j + r - j}) / det(z_i^{r - j})."""
    lam = tuple(lam) + (0,) * (rank - len(lam))
    num = alternant([lam[j] + rank - 1 - j for j in range(rank)], rank, field)
    den = alternant([rank - 1 - j for j in range(rank)], rank, field)
    return num.divide_exact(den)
