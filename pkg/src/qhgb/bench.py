"""Side-by-side runs of the weighted ("qh") and homogenize-first ("std") strategies.

qh:  Matrix-F5 on F with W-grevlex up to the weighted bound, FGLM on its
     staircase (degree prod d_i / w_i).
std: Matrix-F5 on hom_W(F) with plain grevlex up to the Macaulay bound
     sum(d_i - 1) + 1, FGLM on that basis (degree prod d_i).
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import asdict, dataclass

from .checks import gen_generic
from .f5 import matrix_f5
from .fglm import fglm
from .hilbert import profile
from .monomials import WeightSystem
from .polynomial import dehom_W, hom_system, interreduce

COLUMNS = [
    "system", "deg_I", "f5_ops_qh", "f5_ops_std", "f5_speedup",
    "f5_time_qh", "f5_time_std", "fglm_ops_qh", "fglm_ops_std", "fglm_speedup",
    "fglm_time_qh", "fglm_time_std", "same_basis",
]


@dataclass
class BenchRow:
    system: str
    deg_I: int
    f5_ops_qh: int
    f5_ops_std: int
    f5_speedup: float
    f5_time_qh: float
    f5_time_std: float
    fglm_ops_qh: int
    fglm_ops_std: int
    fglm_speedup: float
    fglm_time_qh: float
    fglm_time_std: float
    same_basis: bool


def label(W, D) -> str:
    return f"W={','.join(map(str, W))};D={','.join(map(str, D))}"


def _ratio(a, b):
    return round(a / b, 3) if b else float("inf")


def run_config(weights, degrees, seed=0, fglm_std=True) -> BenchRow:
    W = WeightSystem(tuple(weights))
    F = gen_generic(W.n, W, tuple(degrees), seed)
    prof = profile(W, F.wdegrees)

    t0 = time.perf_counter()
    G = matrix_f5(F, prof.dreg_bound)
    t1 = time.perf_counter()
    L = fglm(G)
    t2 = time.perf_counter()

    H = hom_system(F)
    t3 = time.perf_counter()
    Gs = matrix_f5(H, sum(d - 1 for d in F.wdegrees) + 1)
    t4 = time.perf_counter()
    Ls = fglm(Gs) if fglm_std else None
    t5 = time.perf_counter()

    pulled = interreduce([dehom_W(g, G.ring) for g in Gs.polys])
    same = [g.terms for g in pulled] == [g.terms for g in G.polys]
    std_fglm_ops = Ls.fglm_ops if Ls is not None else 0
    return BenchRow(
        system=label(W.weights, degrees),
        deg_I=len(G.staircase),
        f5_ops_qh=G.ops,
        f5_ops_std=Gs.ops,
        f5_speedup=_ratio(Gs.ops, G.ops),
        f5_time_qh=round(t1 - t0, 4),
        f5_time_std=round(t4 - t3, 4),
        fglm_ops_qh=L.fglm_ops,
        fglm_ops_std=std_fglm_ops,
        fglm_speedup=_ratio(std_fglm_ops, L.fglm_ops) if Ls is not None else 0.0,
        fglm_time_qh=round(t2 - t1, 4),
        fglm_time_std=round(t5 - t4, 4),
        same_basis=same,
    )


def run(configs, fglm_std=True) -> list:
    """configs: iterable of dicts with keys weights, degrees and optional seed."""
    return [run_config(c["weights"], c["degrees"], c.get("seed", 0), fglm_std) for c in configs]


def to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(asdict(r))
    return buf.getvalue()
