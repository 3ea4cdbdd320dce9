"""Regularity and Noether-position tests, and a seeded generator of generic systems."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .f5 import matrix_f5
from .field import DEFAULT_PRIME
from .hilbert import profile, series_regular
from .monomials import WeightSystem, monomials_of_wdeg, variable
from .polynomial import PolySystem, Polynomial, Ring

SHAPES = ("whomog", "whomog_plus_constant", "affine_up_to_degree")


class EmptyDegree(ValueError):
    """No monomial of the requested W-degree exists."""


@dataclass
class RegularityReport:
    regular: bool
    witness: int | None
    hilbert_function: list
    expected: list
    reductions_to_zero: int

    def __bool__(self):
        return self.regular


def check_depth(F: PolySystem) -> int:
    """Degree up to which Hilbert functions are compared.

    For m = n, matching up to i_reg + max(w) forces every monomial above i_reg
    into the ideal.  For m < n we also cover every Koszul degree.
    """
    prof = profile(F.weights, F.wdegrees)
    depth = prof.dreg_bound
    if F.m < F.n:
        depth = max(depth, sum(F.wdegrees) + max(F.weights.weights))
    return max(depth, 0)


def is_regular(F: PolySystem) -> RegularityReport:
    """Decide whether f1..fm is a regular sequence by comparing the Hilbert
    function of the quotient, read off a Matrix-F5 staircase, with the
    regular-sequence series."""
    if not F.quasi_homogeneous:
        raise ValueError("regularity test needs W-homogeneous input")
    if F.m > F.n:
        return RegularityReport(False, None, [], [], 0)
    depth = check_depth(F)
    expected = series_regular(F.weights, F.wdegrees, depth)
    gb = matrix_f5(F, depth)
    hf = gb.hilbert_function(depth)
    exp = [expected.coefficient(d) for d in range(depth + 1)]
    witness = next((d for d in range(depth + 1) if hf[d] != exp[d]), None)
    return RegularityReport(witness is None, witness, hf, exp, gb.reductions_to_zero)


def extended_system(F: PolySystem) -> PolySystem:
    """(f1, ..., fm, x_{m+1}, ..., x_n)."""
    ring = F.ring
    polys = list(F.polys) + [ring.var(j) for j in range(F.m, F.n)]
    degs = tuple(F.wdegrees) + tuple(ring.weights[j] for j in range(F.m, F.n))
    return PolySystem(ring, polys, degs, True)


def is_noether_position(F: PolySystem) -> bool:
    return is_regular(extended_system(F)).regular


def monomial_witness(W: WeightSystem, wdegrees, p=DEFAULT_PRIME) -> PolySystem:
    """x_i^{d_i/w_i}, regular whenever every w_i divides d_i."""
    ring = Ring(p, W)
    polys = []
    for i, d in enumerate(wdegrees):
        q, r = divmod(d, W[i])
        if r:
            raise ValueError(f"w_{i + 1}={W[i]} does not divide d_{i + 1}={d}")
        polys.append(ring.monomial(tuple(q if j == i else 0 for j in range(W.n))))
    return PolySystem(ring, polys, tuple(wdegrees), True)


def divisible_degrees(W: WeightSystem, wdegrees) -> bool:
    return all(d % w == 0 for d, w in zip(wdegrees, W.weights))


def _coeffs(rng, count, p):
    # uniform on 1..p-1 so that every listed monomial appears
    return [int(c) for c in rng.integers(1, p, size=count)]


def gen_generic(n, W, wdegrees, seed, shape="whomog", p=DEFAULT_PRIME, names=None) -> PolySystem:
    """Random system with the given W-degrees.

    Coefficients come from numpy's PCG64 generator seeded with `seed`
    (integers drawn uniformly in [1, p-1]), so outputs are reproducible
    across platforms.  Monomials are visited in decreasing W-grevlex order
    within each W-degree, W-degrees from high to low.
    """
    if not isinstance(W, WeightSystem):
        W = WeightSystem(tuple(W))
    if W.n != n:
        raise ValueError(f"{W.n} weights for {n} variables")
    if shape not in SHAPES:
        raise ValueError(f"unknown shape {shape!r}")
    rng = np.random.Generator(np.random.PCG64(seed))
    ring = Ring(p, W, names=names)
    polys = []
    for d in wdegrees:
        top = monomials_of_wdeg(d, W)
        if not top:
            raise EmptyDegree(f"no monomial of W-degree {d} for W={W.weights}")
        if shape == "affine_up_to_degree":
            support = [m for e in range(d, -1, -1) for m in monomials_of_wdeg(e, W)]
        else:
            support = list(top)
            if shape == "whomog_plus_constant" and d > 0:
                support.append((0,) * n)
        cs = _coeffs(rng, len(support), p)
        polys.append(Polynomial(ring, dict(zip(support, cs))))
    qh = shape == "whomog"
    return PolySystem(ring, polys, tuple(wdegrees), qh if qh else None)


def gen_regular(n, W, wdegrees, seed, p=DEFAULT_PRIME, tries=20) -> PolySystem:
    """First generic W-homogeneous system seed, seed+1, ... that is regular."""
    for k in range(tries):
        F = gen_generic(n, W, wdegrees, seed + k, "whomog", p)
        if is_regular(F):
            return F
    raise RuntimeError(f"no regular system found in {tries} seeds for W={W}, D={wdegrees}")
