"""Solving affine (non W-homogeneous) systems through a weighted homogenization.

The system is lifted with one extra variable H, placed last and therefore
smallest for W-grevlex, solved by Matrix-F5, specialized back at H = 1 and
handed to FGLM.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from .checks import is_regular
from .f5 import GroebnerBasis, matrix_f5, matrix_f5_hom
from .fglm import fglm
from .monomials import WeightSystem
from .polynomial import PolySystem, Polynomial, Ring, interreduce, top_component


class NonIntegralLift(ValueError):
    """A term's degree gap is not a multiple of the weight of H."""


class AffineRegularityWarning(UserWarning):
    pass


@dataclass
class AffineSystem:
    polys: list
    W: WeightSystem
    top_wdegs: tuple
    lambdas: tuple | None
    h_weight: int

    @classmethod
    def from_polys(cls, polys, h_weight: int | None = None) -> AffineSystem:
        """Read off top degrees and detect the g_i + lambda_i shape.

        For that shape the weight of H defaults to gcd(d_1, ..., d_m);
        otherwise it defaults to 1.
        """
        polys = list(getattr(polys, "polys", polys))
        if not polys:
            raise ValueError("empty system")
        if any(f.is_zero() for f in polys):
            raise ValueError("zero polynomial in system")
        ring = polys[0].ring
        tops = tuple(max(f.wdegrees) for f in polys)
        lambdas = _constant_shape(polys, tops)
        if h_weight is None:
            h_weight = math.gcd(*tops) if lambdas is not None and all(tops) else 1
        if h_weight < 1:
            raise ValueError("weight of H must be positive")
        return cls(polys, ring.weights, tops, lambdas, int(h_weight))

    @property
    def ring(self) -> Ring:
        return self.polys[0].ring

    @property
    def m(self) -> int:
        return len(self.polys)

    @property
    def n(self) -> int:
        return self.W.n

    def tops(self) -> PolySystem:
        ring = self.ring.with_order("wgrevlex")
        return PolySystem(ring, [top_component(f).in_ring(ring) for f in self.polys], self.top_wdegs, True)


def _constant_shape(polys, tops):
    """The constants lambda_i if every f_i is W-homogeneous plus a constant."""
    out = []
    for f, d in zip(polys, tops):
        ring = f.ring
        below = [m for m in f.terms if ring.wdeg(m) != d]
        if any(any(m) for m in below):
            return None
        out.append(f.terms[below[0]] if below else 0)
    return tuple(out)


def is_affine_regular(F: AffineSystem) -> bool:
    if F.m > F.n:
        return False
    return is_regular(F.tops()).regular


def homogenized_ring(F: AffineSystem, h_weight: int | None = None) -> Ring:
    h = F.h_weight if h_weight is None else h_weight
    ring = F.ring
    names = tuple(ring.names) + ("H",)
    return Ring(ring.p, F.W.extend(h), "wgrevlex", names)


def homogenize(F: AffineSystem, h_weight: int | None = None) -> PolySystem:
    """f_i -> sum c * m * H^{(d_i - wdeg m) / h}: W-homogeneous of W-degree d_i."""
    h = F.h_weight if h_weight is None else h_weight
    target = homogenized_ring(F, h)
    polys = []
    for i, (f, d) in enumerate(zip(F.polys, F.top_wdegs)):
        terms = {}
        for m, c in f.terms.items():
            gap = d - f.ring.wdeg(m)
            if gap % h:
                raise NonIntegralLift(f"f{i + 1}: term {m} is {gap} below the top, not a multiple of {h}")
            terms[tuple(m) + (gap // h,)] = c
        polys.append(Polynomial(target, terms))
    return PolySystem(target, polys, F.top_wdegs, True)


def specialize_h(g: Polynomial, ring: Ring) -> Polynomial:
    """Evaluate the last variable at 1."""
    out = {}
    p = ring.p
    for m, c in g.terms.items():
        k = m[:-1]
        out[k] = (out.get(k, 0) + c) % p
    return Polynomial(ring, out)


def default_affine_dmax(F: AffineSystem, h_weight: int | None = None) -> int:
    h = F.h_weight if h_weight is None else h_weight
    ws = F.W.weights
    return sum(d - w for d, w in zip(F.top_wdegs, ws)) + max(ws + (h,))


@dataclass
class AffineSolution:
    basis: GroebnerBasis            # W-grevlex basis of the affine ideal
    lex: GroebnerBasis | None       # Lex basis, when requested and zero-dimensional
    hom_basis: GroebnerBasis        # Matrix-F5 output on the homogenized system
    h_weight: int
    d_max: int
    affine_regular: bool
    degree_falls: int
    observed_dreg: int | None
    warnings: list = field(default_factory=list)

    def report(self) -> dict:
        return {
            "h_weight": self.h_weight,
            "d_max": self.d_max,
            "affine_regular": self.affine_regular,
            "degree_falls": self.degree_falls,
            "observed_dreg": self.observed_dreg,
            "degree": len(self.basis.staircase) if self.basis.staircase is not None else None,
            "warnings": list(self.warnings),
        }


def solve_affine(F: AffineSystem, *, d_max: int | None = None, h_weight: int | None = None,
                 lex: bool = True, check: bool = True, strategy: str = "qh") -> AffineSolution:
    """Homogenize, run Matrix-F5 with H smallest, set H = 1, interreduce, FGLM.

    strategy "std" runs Matrix-F5 on hom_W of the lifted system instead.
    """
    if strategy not in ("qh", "std"):
        raise ValueError(f"unknown strategy {strategy!r}")
    h = F.h_weight if h_weight is None else h_weight
    notes = []
    regular = is_affine_regular(F) if check else True
    if not regular:
        msg = "input is not regular in the affine sense; the truncated basis may be incomplete"
        warnings.warn(msg, AffineRegularityWarning, stacklevel=2)
        notes.append(msg)
    Fh = homogenize(F, h)
    if d_max is None:
        d_max = default_affine_dmax(F, h)
    run = matrix_f5 if strategy == "qh" else matrix_f5_hom
    Gh = run(Fh, d_max, fall_variable=F.n)
    ring = F.ring.with_order("wgrevlex")
    polys = [specialize_h(g, ring) for g in Gh.polys]
    G = GroebnerBasis(ring, interreduce(polys), "wgrevlex", truncation_wdeg=d_max,
                      reductions_to_zero=Gh.reductions_to_zero, observed_dreg=Gh.observed_dreg,
                      stats=Gh.stats, degree_falls=Gh.degree_falls)
    L = None
    if lex:
        L = fglm(G)
    return AffineSolution(G, L, Gh, h, d_max, regular, Gh.degree_falls, Gh.observed_dreg, notes)


__all__ = [
    "AffineSolution",
    "AffineSystem",
    "NonIntegralLift",
    "default_affine_dmax",
    "homogenize",
    "is_affine_regular",
    "solve_affine",
    "specialize_h",
]
