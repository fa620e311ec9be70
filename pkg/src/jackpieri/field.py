"""Exact scalars: rationals and rational functions in the parameter ``d``.

Two modes share one code path.  In rational mode every scalar is a
``fractions.Fraction`` and ``d`` is a fixed nonzero rational.  In symbolic
mode scalars are :class:`RatFunc` instances and ``d`` is the indeterminate.
A :class:`Field` object fixes the mode for a computation and hands out the
value of ``d`` to formula code, which then never needs to know which mode it
runs in.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Union

from .errors import DivisionByZero, ModeMismatch, PoleAtD, ZeroDenominator

# ---------------------------------------------------------------------------
# dense univariate polynomials over Q: tuples of Fractions, low degree first,
# no trailing zeros; the zero polynomial is ().

_ZERO: tuple = ()
_ONE = (Fraction(1),)


def _trim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return _ZERO
    if len(b) == 1:
        c = b[0]
        return tuple(x * c for x in a)
    if len(a) == 1:
        c = a[0]
        return tuple(x * c for x in b)
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pscale(a, c):
    if not c:
        return _ZERO
    return tuple(x * c for x in a)


def _pdivmod(a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            c = c / lb
            q[k - db] = c
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    return _trim(q), _trim(a[:db])


def _peval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _monic(a):
    lc = a[-1]
    if lc == 1:
        return a
    return tuple(c / lc for c in a)


def _primitive_int(a):
    """Scale a rational polynomial to a primitive integer one (lists of int)."""
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for i in ints:
        g = math.gcd(g, i)
    return [i // g for i in ints]


def _int_prem(a, b):
    """Pseudo-remainder of integer polynomials (lists, low degree first)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        k = len(a) - 1
        c = a[k]
        a = [lb * x for x in a]
        for j in range(db + 1):
            a[k - db + j] -= c * b[j]
        while a and a[-1] == 0:
            a.pop()
    return a


def _pgcd(a, b):
    """Monic gcd over Q via primitive pseudo-remainder sequences over Z."""
    if not a:
        return _monic(b) if b else _ZERO
    if not b:
        return _monic(a)
    if len(a) == 1 or len(b) == 1:
        return _ONE
    x, y = _primitive_int(a), _primitive_int(b)
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _int_prem(x, y)
        if not r:
            break
        g = 0
        for i in r:
            g = math.gcd(g, i)
        x, y = y, [i // g for i in r]
        if len(y) == 1:
            return _ONE
    return _monic(tuple(Fraction(c) for c in y))


def _pstr(a):
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if k == 0:
            body = str(c)
        else:
            mono = "d" if k == 1 else f"d^{k}"
            body = mono if c == 1 else f"{c}*{mono}"
        parts.append((sign, body))
    s0, b0 = parts[0]
    out = ("-" if s0 == "-" else "") + b0
    for s, b in parts[1:]:
        out += s + b
    return out


# ---------------------------------------------------------------------------


class RatFunc:
    """Reduced quotient of polynomials in ``d`` with monic denominator.

    Equality is structural because the canonical form is unique.  Python
    ints and Fractions are coerced as constants by the arithmetic operators.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=_ZERO, den=_ONE, *, _canonical=False):
        if _canonical:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize_pair(_trim(map(Fraction, num)), _trim(map(Fraction, den)))
        self._hash = None

    @classmethod
    def variable(cls) -> RatFunc:
        return cls((Fraction(0), Fraction(1)), _ONE, _canonical=True)

    @classmethod
    def const(cls, c) -> RatFunc:
        c = Fraction(c)
        return cls((c,) if c else _ZERO, _ONE, _canonical=True)

    # -- predicates -------------------------------------------------------
    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ModeMismatch(f"{self} is not a constant")
        return self.num[0] if self.num else Fraction(0)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.const(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            if self.den == _ONE:
                return RatFunc(_padd(self.num, o.num), _ONE, _canonical=True)
            num, den = _normalize_pair(_padd(self.num, o.num), self.den)
        else:
            num, den = _normalize_pair(
                _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
                _pmul(self.den, o.den),
            )
        return RatFunc(num, den, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RatFunc(_ZERO, _ONE, _canonical=True)
        if o.den == _ONE and len(o.num) == 1:
            return RatFunc(_pscale(self.num, o.num[0]), self.den, _canonical=True)
        if self.den == _ONE and len(self.num) == 1:
            return RatFunc(_pscale(o.num, self.num[0]), o.den, _canonical=True)
        # cross-cancel before multiplying to keep degrees small
        g1 = _pgcd(self.num, o.den)
        g2 = _pgcd(o.num, self.den)
        n1, d2 = (self.num, o.den) if g1 == _ONE else (_pdivmod(self.num, g1)[0], _pdivmod(o.den, g1)[0])
        n2, d1 = (o.num, self.den) if g2 == _ONE else (_pdivmod(o.num, g2)[0], _pdivmod(self.den, g2)[0])
        num = _pmul(n1, n2)
        den = _pmul(d1, d2)
        lc = den[-1]
        if lc != 1:
            num, den = _pscale(num, 1 / lc), _pscale(den, 1 / lc)
        return RatFunc(num, den, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num:
            raise DivisionByZero("inverse of zero")
        lc = self.num[-1]
        return RatFunc(_pscale(self.den, 1 / lc), _pscale(self.num, 1 / lc), _canonical=True)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFunc.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- evaluation and rendering -------------------------------------------
    def eval_at(self, d0) -> Fraction:
        d0 = Fraction(d0)
        den = _peval(self.den, d0)
        if not den:
            raise PoleAtD(f"{self} has a pole at d={d0}")
        return _peval(self.num, d0) / den

    def __str__(self):
        n = _pstr(self.num)
        if self.den == _ONE:
            return n
        nterms = sum(1 for c in self.num if c)
        if nterms > 1:
            n = f"({n})"
        d = _pstr(self.den)
        if d != "d":
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def _normalize_pair(num, den):
    if not den:
        raise ZeroDenominator("zero denominator")
    if not num:
        return _ZERO, _ONE
    if len(den) == 1:
        c = den[0]
        return (num if c == 1 else _pscale(num, 1 / c)), _ONE
    if len(num) > 1:
        g = _pgcd(num, den)
        if g != _ONE:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
    lc = den[-1]
    if lc != 1:
        num, den = _pscale(num, 1 / lc), _pscale(den, 1 / lc)
    return num, den


FieldElement = Union[Fraction, RatFunc]


# ---------------------------------------------------------------------------
# module-level operations


def normalize(e):
    """Canonical reduced form of a scalar (idempotent)."""
    if isinstance(e, RatFunc):
        return RatFunc(e.num, e.den)
    if isinstance(e, tuple):
        num, den = e
        if isinstance(num, RatFunc) or isinstance(den, RatFunc):
            return RatFunc._coerce(num) / RatFunc._coerce(den)
        if den == 0:
            raise ZeroDenominator("zero denominator")
        return Fraction(num, den)
    return Fraction(e)


def _mode(x):
    if isinstance(x, RatFunc):
        return "symbolic"
    if isinstance(x, (int, Fraction)):
        return "rational"
    raise TypeError(f"not a field element: {x!r}")


def arith(a, b, op: str):
    """Strict binary arithmetic: both operands must belong to the same mode."""
    if _mode(a) != _mode(b):
        raise ModeMismatch(f"cannot combine {a!r} and {b!r}")
    if not isinstance(a, RatFunc):
        a, b = Fraction(a), Fraction(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def eval_at_d(e, d0) -> Fraction:
    if isinstance(e, RatFunc):
        return e.eval_at(d0)
    return Fraction(e)


# ---------------------------------------------------------------------------
# text round trip

_TOKEN = re.compile(r"\s*(?:(\d+)|(d)|(.))")


def parse_scalar(text: str, symbolic: bool = True):
    """Parse ``num/den`` style text in the variable ``d``.

    Returns a Fraction when ``symbolic`` is false (and the text has no ``d``).
    """
    toks = []
    for num, var, op in _TOKEN.findall(text.strip()):
        if num:
            toks.append(("n", int(num)))
        elif var:
            toks.append(("d", None))
        elif op.strip():
            toks.append(("o", op))
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        pos += 1
        return toks[pos - 1]

    def expr():
        v = term()
        while peek() in (("o", "+"), ("o", "-")):
            _, o = take()
            w = term()
            v = v + w if o == "+" else v - w
        return v

    def term():
        v = unary()
        while peek() in (("o", "*"), ("o", "/")):
            _, o = take()
            w = unary()
            v = v * w if o == "*" else v / w
        return v

    def unary():
        if peek() == ("o", "-"):
            take()
            return -unary()
        if peek() == ("o", "+"):
            take()
            return unary()
        return power()

    def power():
        v = atom()
        if peek() == ("o", "^"):
            take()
            kind, n = take()
            if kind != "n":
                raise ValueError(f"bad exponent in {text!r}")
            v = v**n
        return v

    def atom():
        kind, val = take() if pos < len(toks) else (None, None)
        if kind == "n":
            return RatFunc.const(val) if symbolic else Fraction(val)
        if kind == "d":
            if not symbolic:
                raise ModeMismatch(f"'d' in rational-mode text {text!r}")
            return RatFunc.variable()
        if (kind, val) == ("o", "("):
            v = expr()
            if take() != ("o", ")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return v
        raise ValueError(f"cannot parse {text!r}")

    v = expr()
    if pos != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return v


def format_scalar(c) -> str:
    return str(c)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Field:
    """Scalar mode for one computation: ``d_value=None`` means symbolic ``d``."""

    d_value: Fraction | None = None

    def __post_init__(self):
        if self.d_value is not None:
            object.__setattr__(self, "d_value", Fraction(self.d_value))
            if self.d_value == 0:
                raise ValueError("d must be nonzero")

    @classmethod
    def parse(cls, text: str) -> Field:
        text = text.strip()
        if text == "symbolic":
            return cls(None)
        return cls(Fraction(text))

    @property
    def symbolic(self) -> bool:
        return self.d_value is None

    @cached_property
    def d(self):
        return RatFunc.variable() if self.symbolic else self.d_value

    @cached_property
    def half_d(self):
        return self.d / 2

    @cached_property
    def two_over_d(self):
        return 2 / self.d

    @cached_property
    def zero(self):
        return RatFunc.const(0) if self.symbolic else Fraction(0)

    @cached_property
    def one(self):
        return RatFunc.const(1) if self.symbolic else Fraction(1)

    def __call__(self, x):
        """Coerce a scalar into this field's mode."""
        if self.symbolic:
            if isinstance(x, RatFunc):
                return x
            if isinstance(x, (int, Fraction)):
                return RatFunc.const(x)
        else:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            if isinstance(x, RatFunc):
                if x.is_constant():
                    return x.constant_value()
                raise ModeMismatch(f"symbolic scalar {x} in rational mode d={self.d_value}")
        raise TypeError(f"not a field element: {x!r}")

    def parse_scalar(self, text: str):
        return self(parse_scalar(text, symbolic=self.symbolic))

    def __str__(self):
        return "symbolic" if self.symbolic else str(self.d_value)
