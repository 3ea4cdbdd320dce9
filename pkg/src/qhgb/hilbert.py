"""Hilbert series of weighted regular sequences and the cost estimates built on them.

Every estimator drops the constant hidden in its O(.) and reports the bare
expression ("estimates", not measured costs).  With an integral exponent the
expressions are exact rationals; they are rounded up to integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .monomials import WeightSystem, count_monomials, count_standard


# -- integer polynomial helpers (coefficient lists, index = degree) ------------


def _one_minus_t_pow(d: int) -> list:
    c = [0] * (d + 1)
    c[0] += 1
    c[d] -= 1
    return c


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_prod(factors) -> list:
    out = [1]
    for f in factors:
        out = _poly_mul(out, f)
    return out


def _exact_div(num: list, den: list):
    """Quotient of num by den if the division is exact, else None.

    den has constant term 1 and leading coefficient +-1.
    """
    num = list(num)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    dd = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dd:
        return [0] if not any(num) else None
    q = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            if c % lead:
                return None
            f = c // lead
            q[k - dd] = f
            for j, y in enumerate(den):
                num[k - dd + j] -= f * y
    if any(num):
        return None
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q


def _series_div(num: list, den: list, trunc: int) -> list:
    """Power series num/den up to t^trunc (den[0] == 1)."""
    out = [0] * (trunc + 1)
    for k in range(trunc + 1):
        c = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            c -= den[j] * out[k - j]
        out[k] = c
    return out


@dataclass(frozen=True)
class HilbertSeries:
    coeffs: tuple
    truncation: int
    exact_polynomial: bool

    def coefficient(self, d: int) -> int:
        if d < 0:
            return 0
        if d < len(self.coeffs):
            return self.coeffs[d]
        if self.exact_polynomial:
            return 0
        raise ValueError(f"series only known up to t^{self.truncation}")

    @property
    def degree(self) -> int:
        if not self.exact_polynomial:
            raise ValueError("not a polynomial")
        nz = [i for i, c in enumerate(self.coeffs) if c]
        return nz[-1] if nz else -1

    def value_at_one(self) -> int:
        if not self.exact_polynomial:
            raise ValueError("value at 1 is only defined for a polynomial series")
        return sum(self.coeffs)

    def __getitem__(self, d):
        return self.coefficient(d)


def _rational_series(num_degs, den_weights, truncation, shift=0) -> HilbertSeries:
    num = _poly_prod(_one_minus_t_pow(d) for d in num_degs)
    den = _poly_prod(_one_minus_t_pow(w) for w in den_weights)
    q = _exact_div(num, den)
    if q is not None:
        coeffs = [0] * shift + q
        if truncation is not None and truncation >= len(coeffs):
            coeffs += [0] * (truncation + 1 - len(coeffs))
        return HilbertSeries(tuple(coeffs), max(len(coeffs) - 1, truncation or 0), True)
    if truncation is None:
        raise ValueError("series is not a polynomial; a truncation degree is required")
    body = _series_div(num, den, max(truncation - shift, -1)) if truncation >= shift else []
    coeffs = ([0] * min(shift, truncation + 1)) + body
    return HilbertSeries(tuple(coeffs[: truncation + 1]), truncation, False)


def series_regular(W: WeightSystem, wdegrees: Sequence[int], truncation: int | None = None) -> HilbertSeries:
    """prod(1 - t^d_i) / prod(1 - t^w_j): the Hilbert series of a regular sequence.

    When the quotient is a polynomial the whole polynomial is returned
    (padded with zeros up to `truncation`); otherwise the power series is
    truncated at `truncation`.
    """
    if truncation is not None and truncation < 0:
        raise ValueError("truncation must be >= 0")
    return _rational_series(list(wdegrees), list(W.weights), truncation)


def b_series(W: WeightSystem, wdegrees: Sequence[int], i: int, truncation: int | None = None) -> HilbertSeries:
    """z^{d_i} prod_{k<i} (1 - z^{d_k}) / (1 - z^{w_k}), with i 1-based."""
    m = len(wdegrees)
    if not 1 <= i <= m:
        raise ValueError(f"index {i} outside 1..{m}")
    if i - 1 > W.n:
        raise ValueError("more polynomials than variables")
    return _rational_series(list(wdegrees[: i - 1]), list(W.weights[: i - 1]), truncation, shift=wdegrees[i - 1])


# -- system profile -------------------------------------------------------------


@dataclass(frozen=True)
class SystemProfile:
    n: int
    m: int
    weights: WeightSystem
    wdegrees: tuple
    i_reg: int
    dreg_bound: int
    degree: Fraction
    partial_degrees: tuple
    homogenized_degrees: tuple

    @property
    def degree_is_integral(self) -> bool:
        return self.degree.denominator == 1

    def partial_dreg_bound(self, i: int) -> int:
        """Degree-of-regularity bound of <f1..fi> (first i W-degrees, all weights)."""
        return sum(d - w for d, w in zip(self.wdegrees[:i], self.weights.weights[:i])) + max(self.weights.weights)

    def homogenized_dreg_bound(self, i: int) -> int:
        """Macaulay bound for the first i polynomials of hom_W(F)."""
        return sum(d - 1 for d in self.wdegrees[:i]) + 1

    def D(self, i: int) -> Fraction:
        """D_i with D_0 = 1 and D_i = 0 for i < 0."""
        if i < 0:
            return Fraction(0)
        if i == 0:
            return Fraction(1)
        return self.partial_degrees[i - 1]

    def D_tilde(self, i: int) -> int:
        if i < 0:
            return 0
        if i == 0:
            return 1
        return self.homogenized_degrees[i - 1]


def profile(W: WeightSystem, wdegrees: Sequence[int]) -> SystemProfile:
    wdegrees = tuple(int(d) for d in wdegrees)
    m, n = len(wdegrees), W.n
    if m > n:
        raise ValueError(f"{m} polynomials in {n} variables: expected m <= n")
    ws = W.weights
    i_reg = sum(d - w for d, w in zip(wdegrees, ws))
    partial, tilde = [], []
    acc, acc_t = Fraction(1), 1
    for d, w in zip(wdegrees, ws):
        acc *= Fraction(d, w)
        acc_t *= d
        partial.append(acc)
        tilde.append(acc_t)
    return SystemProfile(
        n=n,
        m=m,
        weights=W,
        wdegrees=wdegrees,
        i_reg=i_reg,
        dreg_bound=i_reg + max(ws),
        degree=partial[-1] if partial else Fraction(1),
        partial_degrees=tuple(partial),
        homogenized_degrees=tuple(tilde),
    )


# -- operation-count estimates --------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    omega: float
    c_fglm: int
    c_f5_basic: int
    c_f5_binomial: int
    c_f5_refined: int
    c_f5_refined_binomial: int
    c_f5_hom: int
    c_f5_bdi: int
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "omega": self.omega,
            "c_fglm": self.c_fglm,
            "c_f5_basic": self.c_f5_basic,
            "c_f5_binomial": self.c_f5_binomial,
            "c_f5_refined": self.c_f5_refined,
            "c_f5_refined_binomial": self.c_f5_refined_binomial,
            "c_f5_hom": self.c_f5_hom,
            "c_f5_bdi": self.c_f5_bdi,
        }


def _finish(x, exact: bool):
    if exact:
        return math.ceil(x)
    return float(x)


def _pow(x, omega):
    if isinstance(omega, int):
        return Fraction(x) ** omega
    return float(x) ** omega


def estimate_fglm(prof: SystemProfile) -> Fraction:
    return prof.n * prof.degree**3


def estimate_f5_basic(prof: SystemProfile, omega=3):
    d = prof.dreg_bound
    return d * _pow(count_monomials(d, prof.weights), omega)


def estimate_f5_binomial(prof: SystemProfile, omega=3):
    W, n, d = prof.weights, prof.n, prof.dreg_bound
    if d < 0:
        return 0
    inner = Fraction(W.delta, W.product) * math.comb(max(d + W.s_values[-1] - 1, 0), n - 1)
    return d * _pow(inner, omega)


def estimate_f5_refined(prof: SystemProfile) -> Fraction:
    W, n = prof.weights, prof.n
    total = Fraction(0)
    for i in range(2, prof.m + 1):
        dr = prof.partial_dreg_bound(i)
        coef = prof.D(i - 1) - (prof.D(i - 2) if i >= 3 else 0)
        total += coef * count_monomials(dr, W, i) * count_monomials(dr, W, n)
    return total


def estimate_f5_refined_binomial(prof: SystemProfile) -> Fraction:
    W, n = prof.weights, prof.n
    S = W.s_values
    P = [1]
    for w in W.weights:
        P.append(P[-1] * w)
    total = Fraction(0)
    for i in range(2, prof.m + 1):
        dr = prof.partial_dreg_bound(i)
        coef = Fraction(prof.D_tilde(i - 1), P[i - 1])
        if i >= 3:
            coef -= Fraction(prof.D_tilde(i - 2), P[i - 2])
        total += (
            Fraction(1, P[i] * P[n])
            * coef
            * count_standard(dr + S[i - 1] - i + 1, i)
            * count_standard(dr + S[n - 1] - n + 1, n)
        )
    return total


def estimate_f5_hom(prof: SystemProfile) -> int:
    n = prof.n
    total = 0
    for i in range(2, prof.m + 1):
        dr = prof.homogenized_dreg_bound(i)
        coef = prof.D_tilde(i - 1) - (prof.D_tilde(i - 2) if i >= 3 else 0)
        total += coef * count_standard(dr, i) * count_standard(dr, n)
    return total


def estimate_f5_bdi(prof: SystemProfile) -> Fraction:
    W, n = prof.weights, prof.n
    S = W.s_values
    P = [1]
    for w in W.weights:
        P.append(P[-1] * w)
    total = Fraction(0)
    for i in range(1, prof.m):
        top = prof.partial_dreg_bound(i + 1)
        d_next = prof.wdegrees[i]
        b = b_series(W, prof.wdegrees, i + 1, truncation=max(top, 0))
        for e in range(d_next, top + 1):
            c = b.coefficient(e)
            if not c:
                continue
            total += (
                Fraction(c, P[i + 1] * P[n])
                * count_standard(e + S[i] - i, i + 1)
                * count_standard(e + S[n - 1] - n + 1, n)
            )
    return total


def bounds(prof: SystemProfile, omega=3) -> BoundReport:
    exact = isinstance(omega, int) or float(omega).is_integer()
    if exact:
        omega = int(omega)
    return BoundReport(
        omega=omega,
        c_fglm=_finish(estimate_fglm(prof), True),
        c_f5_basic=_finish(estimate_f5_basic(prof, omega), exact),
        c_f5_binomial=_finish(estimate_f5_binomial(prof, omega), exact),
        c_f5_refined=_finish(estimate_f5_refined(prof), True),
        c_f5_refined_binomial=_finish(estimate_f5_refined_binomial(prof), True),
        c_f5_hom=estimate_f5_hom(prof),
        c_f5_bdi=_finish(estimate_f5_bdi(prof), True),
    )
