"""Partitions, subsets of [r] and the small vectors that index everything else.

Partitions and integer vectors are plain tuples of ints of length exactly
``r`` (trailing zeros kept).  Subsets are sorted tuples of 0-based indices;
they print 1-based.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .errors import WeightMismatch


def is_partition(x) -> bool:
    if any(not isinstance(v, int) for v in x):
        return False
    if x and x[-1] < 0:
        return False
    return all(x[i] >= x[i + 1] for i in range(len(x) - 1))


def weight(x) -> int:
    return sum(x)


def staircase(r: int) -> tuple:
    if r < 1:
        raise ValueError("r must be positive")
    return tuple(range(r - 1, -1, -1))


def dominance_leq(k, m) -> bool:
    if sum(k) != sum(m):
        raise WeightMismatch(f"|{k}| != |{m}|")
    sk = sm = 0
    for a, b in zip(k, m):
        sk += a
        sm += b
        if sk > sm:
            return False
    return True


def contains(k, m) -> bool:
    """Inclusion order: ``k`` fits inside ``m`` componentwise."""
    return all(a <= b for a, b in zip(k, m))


def shift_by_subset(x, J, sign: int = +1):
    """Return ``(x + sign * eps_J, is_partition)``."""
    y = list(x)
    for j in J:
        y[j] += sign
    y = tuple(y)
    return y, is_partition(y)


def unit(r: int, i: int) -> tuple:
    return tuple(1 if j == i else 0 for j in range(r))


@lru_cache(maxsize=None)
def partitions_of(n: int, r: int) -> tuple:
    """Partitions of ``n`` with at most ``r`` parts, descending lex order."""
    out = []

    def rec(prefix, remaining, cap):
        slots = r - len(prefix)
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        if remaining > slots * cap:
            return
        for p in range(min(cap, remaining), -1, -1):
            rec(prefix + [p], remaining - p, p)

    rec([], n, n)
    return tuple(out)


def partitions_up_to(max_weight: int, r: int) -> list:
    """All partitions of length <= r and weight <= max_weight.

    Ordered by weight, then descending lex; this order is what keeps golden
    files byte-stable.
    """
    out = []
    for n in range(max_weight + 1):
        out.extend(partitions_of(n, r))
    return out


@lru_cache(maxsize=None)
def subsets(r: int, size: int | None = None) -> tuple:
    """Subsets of range(r), by size then lex; all sizes when ``size`` is None."""
    if size is not None:
        return tuple(combinations(range(r), size))
    return tuple(c for s in range(r + 1) for c in combinations(range(r), s))


def complement(J, r: int) -> tuple:
    js = set(J)
    return tuple(i for i in range(r) if i not in js)


def format_partition(x) -> str:
    return ",".join(str(v) for v in x)


def parse_partition(text: str, r: int | None = None) -> tuple:
    parts = tuple(int(t) for t in text.split(",") if t.strip() != "")
    if r is not None:
        if len(parts) > r:
            raise ValueError(f"partition {text!r} longer than r={r}")
        parts = parts + (0,) * (r - len(parts))
    return parts


def format_subset(J) -> str:
    return "{" + ",".join(str(j + 1) for j in J) + "}"
