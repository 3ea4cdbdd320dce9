"""Weight systems, weighted degrees, monomial orders and monomial counting.

Monomials are plain tuples of nonnegative exponents.  Variables are ordered
x1 > x2 > ... > xn everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import comb, gcd, prod
from typing import Callable, Iterator, Sequence

Monomial = tuple


class NotInImage(ValueError):
    """A monomial is not of the form hom_W(m): some exponent is not a multiple of its weight."""


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if not w or any(x < 1 for x in w):
            raise ValueError(f"weights must be positive integers, got {self.weights!r}")
        object.__setattr__(self, "weights", w)

    @classmethod
    def ones(cls, n: int) -> WeightSystem:
        return cls((1,) * n)

    @property
    def n(self) -> int:
        return len(self.weights)

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def __iter__(self):
        return iter(self.weights)

    @property
    def is_standard(self) -> bool:
        return all(w == 1 for w in self.weights)

    @cached_property
    def delta(self) -> int:
        return reduce(gcd, self.weights)

    @cached_property
    def product(self) -> int:
        return prod(self.weights)

    @cached_property
    def s_values(self) -> tuple:
        s = [0]
        for i in range(1, self.n):
            g0 = reduce(gcd, self.weights[:i])
            g1 = reduce(gcd, self.weights[: i + 1])
            s.append(s[-1] + self.weights[i] * g0 // g1)
        return tuple(s)

    @cached_property
    def t_values(self) -> tuple:
        t = [0]
        for i in range(1, self.n):
            g0 = reduce(gcd, self.weights[:i])
            g1 = reduce(gcd, self.weights[: i + 1])
            t.append(t[-1] + self.weights[i] * (g0 // g1 - 1) - 1)
        return tuple(t)

    def prefix(self, k: int) -> WeightSystem:
        return WeightSystem(self.weights[:k])

    def extend(self, w: int) -> WeightSystem:
        return WeightSystem(self.weights + (w,))

    def wdeg(self, m: Sequence[int]) -> int:
        return wdeg(m, self)


def _check_dim(m, n):
    if len(m) != n:
        raise ValueError(f"monomial {tuple(m)} has {len(m)} exponents, expected {n}")


def wdeg(m: Sequence[int], W: WeightSystem) -> int:
    _check_dim(m, W.n)
    return sum(a * w for a, w in zip(m, W.weights))


def total_degree(m: Sequence[int]) -> int:
    return sum(m)


# -- orders -----------------------------------------------------------------
#
# Order keys sort ascending: key(a) < key(b) iff a < b.


def wgrevlex_key(W: WeightSystem) -> Callable[[Monomial], tuple]:
    ws = W.weights

    def key(m):
        return (sum(a * w for a, w in zip(m, ws)), tuple(-a for a in reversed(m)))

    return key


def grevlex_key(m: Monomial) -> tuple:
    return (sum(m), tuple(-a for a in reversed(m)))


def lex_key(m: Monomial) -> tuple:
    return tuple(m)


def _sign(x, y) -> int:
    return (x > y) - (x < y)


def cmp_wgrevlex(a: Monomial, b: Monomial, W: WeightSystem) -> int:
    """Return -1, 0 or 1 as a <, =, > b in W-grevlex."""
    _check_dim(a, W.n)
    _check_dim(b, W.n)
    key = wgrevlex_key(W)
    return _sign(key(a), key(b))


def cmp_grevlex(a: Monomial, b: Monomial) -> int:
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    return _sign(grevlex_key(a), grevlex_key(b))


def cmp_lex(a: Monomial, b: Monomial) -> int:
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    return _sign(tuple(a), tuple(b))


# -- monomial arithmetic ----------------------------------------------------


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def variable(i: int, n: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(n))


def last_variable(m: Monomial) -> int:
    """Index of the smallest variable dividing m, or -1 for m = 1."""
    for j in range(len(m) - 1, -1, -1):
        if m[j]:
            return j
    return -1


# -- enumeration and counting -----------------------------------------------


def _enumerate(d: int, ws: tuple) -> Iterator[tuple]:
    if len(ws) == 1:
        if d % ws[0] == 0:
            yield (d // ws[0],)
        return
    w = ws[0]
    for a in range(d // w, -1, -1):
        for rest in _enumerate(d - a * w, ws[1:]):
            yield (a,) + rest


def monomials_of_wdeg(d: int, W: WeightSystem) -> list:
    """All monomials of W-degree d, largest first in W-grevlex."""
    if d < 0:
        return []
    key = wgrevlex_key(W)
    return sorted(_enumerate(d, W.weights), key=key, reverse=True)


def monomials_up_to_wdeg(d: int, W: WeightSystem) -> list:
    out = []
    for e in range(d, -1, -1):
        out.extend(monomials_of_wdeg(e, W))
    return out


_count_tables: dict = {}


def count_monomials(d: int, W: WeightSystem, nvars: int | None = None) -> int:
    """Number of monomials of W-degree d in the first nvars variables.

    Coin-counting dynamic programme; the table for each weight prefix is kept
    and extended on demand.
    """
    if d < 0:
        return 0
    ws = W.weights if nvars is None else W.weights[:nvars]
    if nvars is not None and nvars > W.n:
        raise ValueError(f"nvars={nvars} exceeds {W.n} variables")
    if not ws:
        return 1 if d == 0 else 0
    table = _count_tables.get(ws)
    if table is None or len(table) <= d:
        size = max(d + 1, 2 * len(table) if table else 64)
        table = [1] + [0] * (size - 1)
        for w in ws:
            for e in range(w, size):
                table[e] += table[e - w]
        _count_tables[ws] = table
    return table[d]


def count_standard(e: int, n: int) -> int:
    """Monomials of total degree e in n variables (0 for e < 0)."""
    if e < 0:
        return 0
    return comb(e + n - 1, n - 1)


def count_bounds(d: int, W: WeightSystem) -> tuple:
    """Exact rational (lower, upper) bracketing count_monomials(d, W).

    Every W-degree is a multiple of delta, so for other d there is no
    monomial at all and the lower bound is 0; the binomial lower bound
    only applies on multiples of delta.
    """
    n = W.n
    factor = Fraction(W.delta, W.product)
    if d % W.delta:
        lower = Fraction(0)
    else:
        lower = factor * count_standard(d - W.t_values[-1] - n + 1, n)
    upper = factor * count_standard(d + W.s_values[-1] - n + 1, n)
    return lower, upper


# -- hom_W on exponents -----------------------------------------------------


def hom_exponents(m: Monomial, W: WeightSystem) -> Monomial:
    _check_dim(m, W.n)
    return tuple(a * w for a, w in zip(m, W.weights))


def dehom_exponents(m: Monomial, W: WeightSystem) -> Monomial:
    _check_dim(m, W.n)
    out = []
    for a, w in zip(m, W.weights):
        q, r = divmod(a, w)
        if r:
            raise NotInImage(f"monomial {tuple(m)} is not in the image of hom_W for W={W.weights}")
        out.append(q)
    return tuple(out)
