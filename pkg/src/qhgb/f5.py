"""Weighted Matrix-F5.

One Macaulay matrix per W-degree d.  Its rows carry signatures (i, e) standing
for e*f_i; they are kept sorted by generator index, then by e in W-grevlex,
and echelonized top to bottom without row swaps.  Because the rows of index
< i form a prefix, the prefix of the echelon form is the echelon form of the
matrix M_{d,i-1}, so a single echelon form per degree serves every index.

Rows of index i in degree d are produced as x_k * r for r a row of index i in
degree d - w_k whose label e has no variable smaller than x_k.  Every label
monomial therefore arises from exactly one parent.
"""

from __future__ import annotations

import bisect
import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .field import inv_mod
from .monomials import (
    WeightSystem,
    divides,
    last_variable,
    monomials_of_wdeg,
    mono_mul,
    variable,
)
from .polynomial import (
    PolySystem,
    Polynomial,
    Ring,
    dehom_W,
    hom_system,
    interreduce,
    is_whomogeneous,
)


class NotQuasiHomogeneous(ValueError):
    pass


@dataclass(frozen=True)
class Signature:
    index: int
    mult: tuple


@dataclass
class SignedRow:
    sig: Signature
    coeffs: np.ndarray
    pivot: int = -1

    @property
    def is_zero(self) -> bool:
        return self.pivot < 0


@dataclass
class MacaulayMatrix:
    wdeg: int
    columns: list
    rows: list = field(default_factory=list)

    def __post_init__(self):
        self.col_index = {m: j for j, m in enumerate(self.columns)}
        self.owner = {}

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def rows_upto(self, i: int) -> list:
        """Rows of M_{d,i}: those whose generator index is at most i."""
        return [r for r in self.rows if r.sig.index <= i]

    def leading_monomials(self, i: int | None = None) -> set:
        return {self.columns[c] for c, idx in self.owner.items() if i is None or idx <= i}


@dataclass
class DegreeStats:
    degree: int
    rows: int
    cols: int
    ops: int
    new_polys: int
    rejected: int = 0
    zero_reductions: int = 0
    degree_falls: int = 0


@dataclass
class GroebnerBasis:
    ring: Ring
    polys: list
    order: str
    truncation_wdeg: int | None = None
    reductions_to_zero: int = 0
    observed_dreg: int | None = None
    stats: list = field(default_factory=list)
    staircase: list | None = None
    degree_falls: int = 0

    def __post_init__(self):
        if self.staircase is None:
            self.staircase = staircase_of([g.lm for g in self.polys], self.ring)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    @property
    def leading_monomials(self) -> list:
        return [g.lm for g in self.polys]

    @property
    def is_zero_dimensional(self) -> bool:
        return self.staircase is not None

    @property
    def ops(self) -> int:
        return sum(s.ops for s in self.stats)

    @property
    def rejected_rows(self) -> int:
        return sum(s.rejected for s in self.stats)

    def same_basis(self, other) -> bool:
        return [g.terms for g in self.polys] == [g.terms for g in other.polys]

    def stats_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "rows", "cols", "ops", "new_polys"])
        for s in self.stats:
            w.writerow([s.degree, s.rows, s.cols, s.ops, s.new_polys])
        return buf.getvalue()

    def hilbert_function(self, upto: int) -> list:
        """Number of standard monomials of each W-degree 0..upto."""
        lms = self.leading_monomials
        W = self.ring.weights
        return [
            sum(1 for m in monomials_of_wdeg(d, W) if not any(divides(l, m) for l in lms))
            for d in range(upto + 1)
        ]


def staircase_of(lms, ring: Ring):
    """Standard monomials of a monomial ideal, ascending in the ring order;
    None when there are infinitely many."""
    n = ring.n
    if any(sum(l) == 0 for l in lms):
        return []
    bounds = []
    for j in range(n):
        pure = [l[j] for l in lms if l[j] and sum(l) == l[j]]
        if not pure:
            return None
        bounds.append(min(pure))
    out = []

    def rec(prefix, j):
        if j == n:
            m = tuple(prefix)
            if not any(divides(l, m) for l in lms):
                out.append(m)
            return
        for a in range(bounds[j]):
            prefix.append(a)
            partial = tuple(prefix) + (0,) * (n - j - 1)
            if not any(divides(l, partial) for l in lms):
                rec(prefix, j + 1)
            prefix.pop()

    rec([], 0)
    out.sort(key=ring.key)
    return out


# -- criterion and elimination --------------------------------------------------


def f5_criterion(mu, i: int, archive: dict, weights: WeightSystem) -> bool:
    """False iff mu is the leading monomial of a row of index < i in the
    echelonized matrix of W-degree wdeg(mu).  True means: keep the row."""
    if i <= 1:
        return True
    mat = archive.get(weights.wdeg(mu))
    if mat is None:
        return True
    c = mat.col_index.get(tuple(mu))
    if c is None:
        return True
    owner = mat.owner.get(c)
    return owner is None or owner >= i


def _to_vector(f: Polynomial, mat: MacaulayMatrix) -> np.ndarray:
    v = np.zeros(mat.ncols, dtype=np.int64)
    for m, c in f.terms.items():
        v[mat.col_index[m]] = c
    return v


def _to_poly(v: np.ndarray, mat: MacaulayMatrix, ring: Ring) -> Polynomial:
    nz = np.flatnonzero(v)
    return Polynomial(ring, {mat.columns[j]: int(v[j]) for j in nz}, _clean=True)


def _echelonize(mat: MacaulayMatrix, p: int, fall_var: int | None, st: DegreeStats):
    pivots = {}
    pivot_cols = []
    ncols = mat.ncols
    for row in mat.rows:
        v = row.coeffs
        nz = np.flatnonzero(v)
        if not len(nz):
            row.pivot = -1
            continue
        lead_before = int(nz[0])
        for c in list(pivot_cols):
            if c < lead_before:
                continue
            x = int(v[c])
            if x:
                v[c:] = (v[c:] - x * pivots[c][c:]) % p
                st.ops += ncols - c
        nz = np.flatnonzero(v)
        if not len(nz):
            row.pivot = -1
            st.zero_reductions += 1
            continue
        lead = int(nz[0])
        lc = int(v[lead])
        if lc != 1:
            v[lead:] = v[lead:] * inv_mod(lc, p) % p
            st.ops += ncols - lead
        row.pivot = lead
        pivots[lead] = v
        bisect.insort(pivot_cols, lead)
        mat.owner[lead] = row.sig.index
        if fall_var is not None:
            if mat.columns[lead_before][fall_var] == 0 and mat.columns[lead][fall_var] > 0:
                st.degree_falls += 1


def default_dmax(F: PolySystem) -> int:
    from .hilbert import profile

    if F.m == 0:
        return 0
    return profile(F.weights, F.wdegrees).dreg_bound


def matrix_f5(F: PolySystem, d_max: int | None = None, *, criterion: bool = True,
              fall_variable: int | None = None, keep_matrices: bool = False) -> GroebnerBasis:
    """W-grevlex Groebner basis of a W-homogeneous system, truncated at W-degree d_max.

    With ``criterion=False`` the F5 criterion is disabled (every row is
    generated), which is useful to count the reductions it saves.
    """
    ring = F.ring
    if ring.order != "wgrevlex":
        ring = ring.with_order("wgrevlex")
    if not F.quasi_homogeneous:
        raise NotQuasiHomogeneous("matrix_f5 needs W-homogeneous input")
    for f, d in zip(F.polys, F.wdegrees):
        ok, deg = is_whomogeneous(f)
        if not ok or deg != d:
            raise NotQuasiHomogeneous(f"{f} is not W-homogeneous of W-degree {d}")
    polys = [f.in_ring(ring) for f in F.polys]
    if d_max is None:
        d_max = default_dmax(F)
    W = ring.weights
    n, p, key = ring.n, ring.p, ring.key
    degs = F.wdegrees
    xs = [variable(k, n) for k in range(n)]

    archive: dict = {}
    basis: list = []
    stats: list = []
    shift_cache: dict = {}
    total_zero = 0

    for d in range(0, d_max + 1):
        cols = monomials_of_wdeg(d, W)
        if not cols:
            continue
        mat = MacaulayMatrix(d, cols)
        st = DegreeStats(d, 0, len(cols), 0, 0)
        rows = []
        for i in range(1, len(polys) + 1):
            di = degs[i - 1]
            if d == di:
                if not criterion or f5_criterion((0,) * n, i, archive, W):
                    rows.append(SignedRow(Signature(i, (0,) * n), _to_vector(polys[i - 1], mat)))
                else:
                    st.rejected += 1
            elif d > di:
                for k in range(n):
                    prev = archive.get(d - W[k])
                    if prev is None:
                        continue
                    shift = shift_cache.get((d, k))
                    if shift is None:
                        shift = np.array([mat.col_index[mono_mul(m, xs[k])] for m in prev.columns], dtype=np.intp)
                        shift_cache[(d, k)] = shift
                    for r in prev.rows:
                        if r.sig.index != i or r.is_zero:
                            continue
                        e = r.sig.mult
                        if last_variable(e) > k:
                            continue
                        mu = mono_mul(e, xs[k])
                        if criterion and not f5_criterion(mu, i, archive, W):
                            st.rejected += 1
                            continue
                        v = np.zeros(len(cols), dtype=np.int64)
                        v[shift] = r.coeffs
                        rows.append(SignedRow(Signature(i, mu), v))
        rows.sort(key=lambda r: (r.sig.index, key(r.sig.mult)))
        mat.rows = rows
        st.rows = len(rows)
        _echelonize(mat, p, fall_variable, st)
        total_zero += st.zero_reductions
        lms = [g.lm for g in basis]
        for r in rows:
            if r.is_zero:
                continue
            lm = cols[r.pivot]
            if not any(divides(l, lm) for l in lms):
                g = _to_poly(r.coeffs, mat, ring)
                basis.append(g)
                lms.append(lm)
                st.new_polys += 1
        archive[d] = mat
        stats.append(st)
        # matrices of degree < d - max(w, d_i) are never read again
        if not keep_matrices:
            horizon = d - max(max(W.weights), max(degs, default=0))
            for old in [e for e in archive if e < horizon]:
                del archive[old]

    reduced = interreduce(basis)
    new_degs = [s.degree for s in stats if s.new_polys]
    gb = GroebnerBasis(
        ring=ring,
        polys=reduced,
        order="wgrevlex",
        truncation_wdeg=d_max,
        reductions_to_zero=total_zero,
        observed_dreg=max(new_degs) if new_degs else None,
        stats=stats,
        degree_falls=sum(s.degree_falls for s in stats),
    )
    if keep_matrices:
        gb.matrices = archive
    return gb


def matrix_f5_hom(F: PolySystem, d_max: int | None = None, **kw) -> GroebnerBasis:
    """The homogenize-first route: Matrix-F5 on hom_W(F) with unit weights,
    then pull every basis element back through hom_W."""
    if d_max is None:
        d_max = default_dmax(F)
    H = hom_system(F)
    gb_h = matrix_f5(H, d_max, **kw)
    ring = F.ring.with_order("wgrevlex")
    polys = [dehom_W(g, ring) for g in gb_h.polys]
    gb = GroebnerBasis(
        ring=ring,
        polys=polys,
        order="wgrevlex",
        truncation_wdeg=d_max,
        reductions_to_zero=gb_h.reductions_to_zero,
        observed_dreg=gb_h.observed_dreg,
        stats=gb_h.stats,
        degree_falls=gb_h.degree_falls,
    )
    gb.hom_basis = gb_h
    return gb
