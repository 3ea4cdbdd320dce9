"""Textbook Buchberger algorithm, used as an independent reference."""

from __future__ import annotations

from .f5 import GroebnerBasis
from .field import inv_mod
from .monomials import mono_div, mono_lcm
from .polynomial import PolySystem, Ring, interreduce, normal_form


def s_polynomial(f, g):
    lcm = mono_lcm(f.lm, g.lm)
    p = f.ring.p
    a = f.mul_term(mono_div(lcm, f.lm), inv_mod(f.lc, p))
    b = g.mul_term(mono_div(lcm, g.lm), inv_mod(g.lc, p))
    return a - b


def buchberger_reduced(F, order="wgrevlex") -> GroebnerBasis:
    """Reduced Groebner basis of F (a PolySystem or a list of polynomials)."""
    polys = list(F.polys if isinstance(F, PolySystem) else F)
    if not polys:
        raise ValueError("empty input")
    base = polys[0].ring
    ring = order if isinstance(order, Ring) else base.with_order(order)
    G = [f.in_ring(ring).monic() for f in polys if not f.is_zero()]
    key = ring.key
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        # normal selection: smallest lcm first
        pairs.sort(key=lambda ij: key(mono_lcm(G[ij[0]].lm, G[ij[1]].lm)), reverse=True)
        i, j = pairs.pop()
        f, g = G[i], G[j]
        # coprime leading monomials: the S-polynomial reduces to zero
        if all(a == 0 or b == 0 for a, b in zip(f.lm, g.lm)):
            continue
        r = normal_form(s_polynomial(f, g), G)
        if not r.is_zero():
            G.append(r.monic())
            k = len(G) - 1
            pairs.extend((t, k) for t in range(k))
    return GroebnerBasis(ring=ring, polys=interreduce(G), order=ring.order)
