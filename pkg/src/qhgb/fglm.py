"""FGLM change of ordering for zero-dimensional ideals (classical dense variant)."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

import numpy as np

from .f5 import GroebnerBasis
from .field import inv_mod
from .monomials import divides, lex_key, mono_div, mono_mul, variable
from .polynomial import Polynomial, Ring


class DimensionPositive(ValueError):
    """The quotient ring is infinite dimensional."""


@dataclass
class QuotientBasis:
    ring: Ring
    staircase: list
    mul_maps: list
    index: dict = field(default_factory=dict)

    def __post_init__(self):
        self.index = {m: j for j, m in enumerate(self.staircase)}

    @property
    def dimension(self) -> int:
        return len(self.staircase)


class _MonomialNormalForms:
    """Normal forms of monomials as coordinate vectors on the staircase, memoized."""

    def __init__(self, G: GroebnerBasis, staircase, index):
        self.ring = G.ring
        self.p = G.ring.p
        self.index = index
        self.D = len(staircase)
        self.reducers = [(g.lm, g.monic()) for g in G.polys]
        self.memo = {}

    def _reducer(self, m):
        for lm, g in self.reducers:
            if divides(lm, m):
                return lm, g
        raise AssertionError(f"monomial {m} neither standard nor reducible")

    def __call__(self, m) -> np.ndarray:
        memo, p = self.memo, self.p
        stack = [m]
        while stack:
            top = stack[-1]
            if top in memo:
                stack.pop()
                continue
            j = self.index.get(top)
            if j is not None:
                v = np.zeros(self.D, dtype=np.int64)
                v[j] = 1
                memo[top] = v
                stack.pop()
                continue
            lm, g = self._reducer(top)
            u = mono_div(top, lm)
            deps = [(mono_mul(t, u), c) for t, c in g.terms.items() if t != lm]
            missing = [t for t, _ in deps if t not in memo]
            if missing:
                stack.extend(missing)
                continue
            v = np.zeros(self.D, dtype=np.int64)
            for t, c in deps:
                v = (v - c * memo[t]) % p
            memo[top] = v
            stack.pop()
        return memo[m]


def quotient_basis(G: GroebnerBasis) -> QuotientBasis:
    stair = G.staircase
    if stair is None:
        raise DimensionPositive("some variable has no pure power among the leading monomials")
    ring = G.ring
    index = {m: j for j, m in enumerate(stair)}
    nf = _MonomialNormalForms(G, stair, index)
    D = len(stair)
    maps = []
    for i in range(ring.n):
        xi = variable(i, ring.n)
        M = np.zeros((D, D), dtype=np.int64)
        for j, s in enumerate(stair):
            M[:, j] = nf(mono_mul(s, xi))
        maps.append(M)
    Q = QuotientBasis(ring, list(stair), maps)
    Q.normal_forms = nf
    return Q


def fglm_to_lex(Q: QuotientBasis, target: Ring | None = None) -> GroebnerBasis:
    """Reduced Lex basis of the ideal whose quotient is described by Q."""
    ring = Q.ring
    lex_ring = target or ring.with_order("lex")
    n, p, D = ring.n, ring.p, Q.dimension
    ops = 0
    if D == 0:
        gb = GroebnerBasis(lex_ring, [lex_ring.one()], "lex", staircase=[])
        gb.fglm_ops = 0
        return gb
    one = (0,) * n
    one_vec = np.zeros(D, dtype=np.int64)
    one_vec[Q.index[one]] = 1

    new_stair = []          # lex staircase monomials, in discovery order
    vec_of = {}             # staircase monomial -> its normal-form vector
    echelon = {}            # pivot -> (vector normalized at pivot, combination over new_stair)
    pivots = []
    out = []
    lts = []
    heap = [(lex_key(one), one, None, None)]
    seen = {one}
    while heap:
        _, m, parent, var = heapq.heappop(heap)
        if any(divides(l, m) for l in lts):
            continue
        if parent is None:
            v = one_vec.copy()
        else:
            v = Q.mul_maps[var] @ vec_of[parent] % p
            ops += D * D
        raw = v
        combo = np.zeros(D, dtype=np.int64)
        for c in pivots:
            a = int(v[c])
            if a:
                ev, ec = echelon[c]
                v = (v - a * ev) % p
                combo = (combo - a * ec) % p
                ops += 2 * D
        nz = np.flatnonzero(v)
        if not len(nz):
            terms = {new_stair[j]: int(combo[j]) for j in np.flatnonzero(combo)}
            terms[m] = 1
            g = Polynomial(lex_ring, terms)
            out.append(g)
            lts.append(m)
            continue
        k = len(new_stair)
        new_stair.append(m)
        vec_of[m] = raw
        combo[k] = (combo[k] + 1) % p
        piv = int(nz[0])
        inv = inv_mod(int(v[piv]), p)
        echelon[piv] = (v * inv % p, combo * inv % p)
        ops += 2 * D
        pivots.append(piv)
        pivots.sort()
        for i in range(n):
            t = mono_mul(m, variable(i, n))
            if t not in seen:
                seen.add(t)
                heapq.heappush(heap, (lex_key(t), t, m, i))
    out.sort(key=lambda g: lex_key(g.lm))
    gb = GroebnerBasis(lex_ring, out, "lex", truncation_wdeg=None)
    gb.fglm_ops = ops
    return gb


def fglm(G: GroebnerBasis, target: Ring | None = None) -> GroebnerBasis:
    return fglm_to_lex(quotient_basis(G), target)
