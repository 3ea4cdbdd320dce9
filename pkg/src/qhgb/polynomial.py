"""Sparse polynomials over GF(p) in a weighted polynomial ring."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .field import DEFAULT_PRIME, check_modulus, inv_mod
from .monomials import (
    NotInImage,
    WeightSystem,
    dehom_exponents,
    divides,
    hom_exponents,
    lex_key,
    mono_div,
    mono_mul,
    wgrevlex_key,
)

ORDERS = ("wgrevlex", "lex")


class Ring:
    """GF(p)[x1..xn] with a system of weights and an active monomial order."""

    def __init__(self, p=DEFAULT_PRIME, weights=None, order="wgrevlex", names=None, n=None):
        self.p = check_modulus(int(p))
        if weights is None:
            if n is None:
                raise ValueError("need weights or n")
            weights = WeightSystem.ones(n)
        elif not isinstance(weights, WeightSystem):
            weights = WeightSystem(tuple(weights))
        self.weights = weights
        self.n = weights.n
        if order not in ORDERS:
            raise ValueError(f"unknown order {order!r}; expected one of {ORDERS}")
        self.order = order
        if names is None:
            names = default_names(self.n)
        names = tuple(names)
        if len(names) != self.n:
            raise ValueError(f"{len(names)} names for {self.n} variables")
        self.names = names
        self.key = wgrevlex_key(weights) if order == "wgrevlex" else lex_key

    def __repr__(self):
        return f"Ring(p={self.p}, weights={self.weights.weights}, order={self.order!r})"

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.p == other.p
            and self.weights == other.weights
            and self.order == other.order
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.p, self.weights, self.order, self.names))

    def with_order(self, order) -> Ring:
        return Ring(self.p, self.weights, order, self.names)

    def with_weights(self, weights, names=None) -> Ring:
        return Ring(self.p, weights, self.order, names)

    def wdeg(self, m) -> int:
        return sum(a * w for a, w in zip(m, self.weights.weights))

    def one(self) -> Polynomial:
        return Polynomial(self, {(0,) * self.n: 1})

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def constant(self, c) -> Polynomial:
        return Polynomial(self, {(0,) * self.n: c})

    def var(self, i) -> Polynomial:
        m = tuple(1 if j == i else 0 for j in range(self.n))
        return Polynomial(self, {m: 1})

    def monomial(self, m, c=1) -> Polynomial:
        return Polynomial(self, {tuple(m): c})

    def gens(self):
        return [self.var(i) for i in range(self.n)]


def default_names(n):
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i + 1}" for i in range(n))


class Polynomial:
    """Immutable sparse polynomial; terms are kept sorted largest first."""

    def __init__(self, ring: Ring, terms=None, *, _clean=False):
        self.ring = ring
        if terms is None:
            terms = {}
        if _clean:
            items = terms.items()
        else:
            p = ring.p
            n = ring.n
            items = []
            for m, c in dict(terms).items():
                m = tuple(m)
                if len(m) != n:
                    raise ValueError(f"monomial {m} has wrong length for {n} variables")
                if any(a < 0 for a in m):
                    raise ValueError(f"negative exponent in {m}")
                c = int(c) % p
                if c:
                    items.append((m, c))
        self.terms = dict(sorted(items, key=lambda t: ring.key(t[0]), reverse=True))

    # -- basic accessors ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def monomials(self):
        return list(self.terms)

    @property
    def lm(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return next(iter(self.terms))

    @property
    def lc(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return next(iter(self.terms.values()))

    @cached_property
    def wdegrees(self) -> frozenset:
        return frozenset(self.ring.wdeg(m) for m in self.terms)

    def coefficient(self, m) -> int:
        return self.terms.get(tuple(m), 0)

    # -- arithmetic -----------------------------------------------------------

    def _same_ring(self, other):
        if not isinstance(other, Polynomial):
            return False
        if other.ring is not self.ring and (other.ring.p != self.ring.p or other.ring.n != self.ring.n):
            raise ValueError("polynomials live in different rings")
        return True

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not self._same_ring(other):
            return NotImplemented
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not self._same_ring(other):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> Polynomial:
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: a * c % p for m, a in self.terms.items()}, _clean=True)

    def mul_term(self, mono, c=1) -> Polynomial:
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring, {mono_mul(m, mono): a * c % p for m, a in self.terms.items()}, _clean=True
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not self._same_ring(other):
            return NotImplemented
        p = self.ring.p
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return Polynomial(self.ring, {m: c for m, c in out.items() if c}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(inv_mod(self.lc, self.ring.p))

    def in_ring(self, ring: Ring) -> Polynomial:
        """Same terms viewed in another ring (typically another order)."""
        if ring.n != self.ring.n or ring.p != self.ring.p:
            raise ValueError("incompatible ring")
        return Polynomial(ring, self.terms, _clean=True)

    def evaluate(self, point) -> int:
        p = self.ring.p
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, a in zip(point, m):
                v = v * pow(x, a, p) % p
            total += v
        return total % p

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.p == other.ring.p and self.ring.n == other.ring.n and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms.items():
            mono = "*".join(
                (name if a == 1 else f"{name}^{a}") for name, a in zip(self.ring.names, m) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


@dataclass
class PolySystem:
    """An ordered list f1..fm with declared W-degrees."""

    ring: Ring
    polys: list
    wdegrees: tuple = None
    quasi_homogeneous: bool = field(default=None)

    def __post_init__(self):
        self.polys = list(self.polys)
        for f in self.polys:
            if f.ring.n != self.ring.n or f.ring.p != self.ring.p:
                raise ValueError("polynomial from a different ring")
            if f.is_zero():
                raise ValueError("zero polynomial in system")
        homog = [is_whomogeneous(f) for f in self.polys]
        tops = tuple(max(f.wdegrees) for f in self.polys)
        if self.quasi_homogeneous is None:
            self.quasi_homogeneous = all(h for h, _ in homog)
        if self.wdegrees is None:
            self.wdegrees = tops
        else:
            self.wdegrees = tuple(int(d) for d in self.wdegrees)
            if len(self.wdegrees) != len(self.polys):
                raise ValueError("one W-degree per polynomial required")
        self.validate()

    def validate(self):
        if self.quasi_homogeneous:
            for i, (f, d) in enumerate(zip(self.polys, self.wdegrees)):
                ok, deg = is_whomogeneous(f)
                if not ok or deg != d:
                    raise ValueError(
                        f"f{i + 1} is not W-homogeneous of W-degree {d} for W={self.weights.weights}"
                    )
        else:
            for i, (f, d) in enumerate(zip(self.polys, self.wdegrees)):
                if max(f.wdegrees) != d:
                    raise ValueError(f"f{i + 1}: declared degree {d} is not its top W-degree")

    @property
    def weights(self) -> WeightSystem:
        return self.ring.weights

    @property
    def m(self) -> int:
        return len(self.polys)

    @property
    def n(self) -> int:
        return self.ring.n

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other):
        if not isinstance(other, PolySystem):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.wdegrees == other.wdegrees
            and [f.terms for f in self.polys] == [g.terms for g in other.polys]
        )


# -- structure ----------------------------------------------------------------


def is_whomogeneous(f: Polynomial, W: WeightSystem | None = None):
    """(True, d) if every term of f has W-degree d, else (False, None).

    The zero polynomial is reported as (True, None).
    """
    if W is None:
        W = f.ring.weights
    degs = {sum(a * w for a, w in zip(m, W.weights)) for m in f.terms}
    if not degs:
        return True, None
    if len(degs) == 1:
        return True, degs.pop()
    return False, None


def top_component(f: Polynomial, W: WeightSystem | None = None) -> Polynomial:
    if f.is_zero():
        raise ValueError("zero polynomial has no top component")
    if W is None:
        W = f.ring.weights
    degs = {m: sum(a * w for a, w in zip(m, W.weights)) for m in f.terms}
    top = max(degs.values())
    return Polynomial(f.ring, {m: c for m, c in f.terms.items() if degs[m] == top}, _clean=True)


def homogeneous_component(f: Polynomial, d: int) -> Polynomial:
    ring = f.ring
    return Polynomial(ring, {m: c for m, c in f.terms.items() if ring.wdeg(m) == d}, _clean=True)


def hom_ring(ring: Ring, names=None) -> Ring:
    """Target ring of hom_W: same p and order, all weights 1, variables t1..tn."""
    if names is None:
        names = tuple(f"t{i + 1}" for i in range(ring.n))
    return Ring(ring.p, WeightSystem.ones(ring.n), ring.order, names)


def hom_W(f: Polynomial, target: Ring | None = None) -> Polynomial:
    """Substitute x_i -> t_i^{w_i}."""
    W = f.ring.weights
    if target is None:
        target = hom_ring(f.ring)
    return Polynomial(target, {hom_exponents(m, W): c for m, c in f.terms.items()})


def dehom_W(f: Polynomial, ring: Ring) -> Polynomial:
    """Inverse of hom_W into `ring` (whose weights define the map)."""
    W = ring.weights
    out = {}
    for m, c in f.terms.items():
        try:
            out[dehom_exponents(m, W)] = c
        except NotInImage as exc:
            raise NotInImage(f"term {c}*{m} of polynomial: {exc}") from None
    return Polynomial(ring, out)


def hom_system(F: PolySystem) -> PolySystem:
    target = hom_ring(F.ring)
    return PolySystem(target, [hom_W(f, target) for f in F.polys], F.wdegrees, F.quasi_homogeneous)


# -- division -------------------------------------------------------------------


def _basis_polys(G):
    polys = getattr(G, "polys", G)
    return [g for g in polys if not g.is_zero()]


def normal_form(f: Polynomial, G) -> Polynomial:
    """Remainder of the multivariate division of f by G, in the order of f's ring.

    G may be a GroebnerBasis or a plain list of polynomials; its elements are
    reinterpreted in f's ring.
    """
    ring = f.ring
    p = ring.p
    key = ring.key
    basis = [g if g.ring == ring else g.in_ring(ring) for g in _basis_polys(G)]
    if any(len(g.lm) != ring.n for g in basis):
        raise ValueError("basis from a different ring")
    reducers = [(g.lm, inv_mod(g.lc, p), g) for g in basis]
    work = dict(f.terms)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, linv, g in reducers:
            if divides(lm, m):
                q = mono_div(m, lm)
                factor = c * linv % p
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    t = mono_mul(gm, q)
                    v = (work.get(t, 0) - factor * gc) % p
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            rem[m] = c
    return Polynomial(ring, rem, _clean=True)


def interreduce(polys) -> list:
    """Reduced Groebner basis from a Groebner basis: drop redundant leading
    terms, make monic, tail-reduce.  Sorted by leading monomial, ascending."""
    polys = [g.monic() for g in polys if not g.is_zero()]
    if not polys:
        return []
    key = polys[0].ring.key
    polys.sort(key=lambda g: key(g.lm))
    minimal = []
    for g in polys:
        if not any(divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = Polynomial(g.ring, {m: c for m, c in g.terms.items() if m != g.lm}, _clean=True)
        r = normal_form(tail, others)
        out.append(r + g.ring.monomial(g.lm, 1))
    return out
