"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -s`` or as a script.
The lines are also repeated in the pytest terminal summary.
"""

import itertools
import time
from collections import Counter
from math import prod

from instances import affine_systems, regular_systems
from qhgb import bench
from qhgb.affine import AffineSystem, default_affine_dmax, solve_affine
from qhgb.buchberger import buchberger_reduced
from qhgb.checks import gen_generic, gen_regular
from qhgb.cli import predict_report
from qhgb.f5 import matrix_f5, matrix_f5_hom
from qhgb.fglm import fglm
from qhgb.hilbert import bounds, profile, series_regular
from qhgb.monomials import WeightSystem, count_bounds, count_monomials
from qhgb.polynomial import PolySystem, Ring, normal_form

RESULTS = []


def report(k, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def terms(G):
    return [g.terms for g in G.polys]


def zero_dimensional_cases():
    cases = [matrix_f5(F) for F in regular_systems()]
    cases += [solve_affine(A, lex=False).basis for _, A in affine_systems()]
    return cases


def test_criterion_01_degree_of_regularity():
    expected = {((3, 2, 1), (6, 6, 6)): 13, ((1, 2, 3), (6, 6, 6)): 15, ((2, 3), (6, 6)): 6}
    parts, ok = [], True
    for (W, D), want in expected.items():
        seen, slowest = Counter(), 0.0
        for seed in range(5):
            F = gen_generic(len(W), WeightSystem(W), D, seed)
            t0 = time.perf_counter()
            G = matrix_f5(F)
            slowest = max(slowest, time.perf_counter() - t0)
            seen[G.observed_dreg] += 1
        top, votes = seen.most_common(1)[0]
        ok &= top == want and votes >= 3 and slowest < 10
        parts.append(f"W={W} dreg={top} ({votes}/5, max {slowest:.2f}s)")
    report(1, ok, "; ".join(parts))


def test_criterion_02_degree_formula():
    got = {}
    for W, D in [((2, 3), (5, 6)), ((1, 1, 2, 2), (4, 4, 4, 4))]:
        F = gen_regular(len(W), WeightSystem(W), D, seed=1)
        got[W] = (len(matrix_f5(F).staircase), predict_report(WeightSystem(W), D)["degree"])
    big = predict_report(WeightSystem((1, 1, 1, 1, 2, 2, 2)), (4,) * 7)["degree"]
    ok = got[(2, 3)] == (5, 5) and got[(1, 1, 2, 2)] == (64, 64) and big == 2048
    report(2, ok, f"staircases {got[(2, 3)][0]} and {got[(1, 1, 2, 2)][0]}, predicted n=7 degree {big}")


def test_criterion_03_pullback():
    t0 = time.perf_counter()
    systems = regular_systems()
    same = sum(terms(matrix_f5(F)) == terms(matrix_f5_hom(F)) for F in systems)
    elapsed = time.perf_counter() - t0
    report(3, same == len(systems) == 25 and elapsed < 60,
           f"{same}/{len(systems)} identical after pullback in {elapsed:.1f}s")


def test_criterion_04_buchberger_equivalence():
    same = sum(terms(matrix_f5(F)) == terms(buchberger_reduced(F)) for F in regular_systems())
    aff = sum(terms(solve_affine(A, lex=False).basis) == terms(buchberger_reduced(A.polys))
              for _, A in affine_systems())
    report(4, same == 25 and aff == 10, f"{same}/25 homogeneous and {aff}/10 affine bases match Buchberger")


def test_criterion_05_no_reduction_to_zero():
    zeros = [matrix_f5(F).reductions_to_zero for F in regular_systems()]
    zeros += [solve_affine(A, lex=False).hom_basis.reductions_to_zero for _, A in affine_systems()]
    R = Ring(65521, (2, 3))
    x, y = R.gens()
    f = x**3 + y**2
    witness = matrix_f5(PolySystem(R, [f, x * f])).reductions_to_zero
    report(5, max(zeros) == 0 and witness > 0,
           f"max {max(zeros)} zero reductions over {len(zeros)} regular runs, {witness} on (f, x*f)")


def test_criterion_06_hilbert_series():
    bad = 0
    for F in regular_systems():
        prof = profile(F.weights, F.wdegrees)
        upto = prof.i_reg + max(F.weights.weights)
        H = series_regular(F.weights, F.wdegrees, truncation=upto)
        bad += matrix_f5(F).hilbert_function(upto) != [H.coefficient(k) for k in range(upto + 1)]
    report(6, bad == 0, f"{25 - bad}/25 quotient Hilbert functions match the series")


def test_criterion_07_monomial_count_bounds():
    t0 = time.perf_counter()
    checked = violations = 0
    for n in range(1, 5):
        for ws in itertools.product(range(1, 5), repeat=n):
            W = WeightSystem(ws)
            for d in range(41):
                lo, hi = count_bounds(d, W)
                M = count_monomials(d, W)
                checked += 1
                violations += not lo <= M <= hi
                if set(ws) == {1}:
                    violations += not lo == M == hi
    elapsed = time.perf_counter() - t0
    report(7, violations == 0 and elapsed < 5,
           f"{checked} (W, d) pairs, {violations} violations, {elapsed:.2f}s")


def test_criterion_08_bound_ordering():
    W = WeightSystem((1, 2, 3))
    ok, parts = True, []
    for d in (6, 12, 18, 24):
        b = bounds(profile(W, (d, d, d)))
        ops = matrix_f5(gen_regular(3, W, (d, d, d), seed=0)).ops
        ok &= b.c_f5_bdi <= b.c_f5_refined <= b.c_f5_hom and ops <= b.c_f5_refined
        parts.append(f"d={d}: {b.c_f5_bdi} <= {b.c_f5_refined} <= {b.c_f5_hom}, ops {ops}")
    report(8, ok, "; ".join(parts))


def test_criterion_09_fglm():
    runs = bad = 0
    for G in zero_dimensional_cases():
        L = fglm(G)
        D, n = len(G.staircase), G.ring.n
        member = all(normal_form(g.in_ring(G.ring), G).is_zero() for g in L.polys)
        member &= all(normal_form(g.in_ring(L.ring), L).is_zero() for g in G.polys)
        runs += 1
        bad += not (member and len(L.staircase) == D and L.fglm_ops <= 4 * n * D**3)
    report(9, bad == 0, f"{runs - bad}/{runs} Lex bases pass membership and the 4nD^3 cost bound")


def test_criterion_10_affine_gcd_weight():
    F = gen_generic(2, WeightSystem((2, 2)), (4, 4), 7, "whomog_plus_constant")
    A = AffineSystem.from_polys(F.polys)
    d = max(default_affine_dmax(A), default_affine_dmax(A, 1))
    fast, slow = solve_affine(A, d_max=d), solve_affine(A, d_max=d, h_weight=1)
    slow_cols = {s.degree: s.cols for s in slow.hom_basis.stats}
    active = [(s.degree, s.cols, slow_cols[s.degree]) for s in fast.hom_basis.stats if s.rows]
    ok = A.h_weight == 4 and active and all(a < b for _, a, b in active) and terms(fast.lex) == terms(slow.lex)
    cols = ", ".join(f"{k}: {a}<{b}" for k, a, b in active)
    report(10, ok, f"h=4 vs h=1 columns per active degree ({cols}), same Lex basis")


def test_criterion_11_bench_speedup():
    row = bench.run_config((2, 2, 1, 1), (4, 4, 4, 4), seed=0)
    ok = row.f5_speedup > 1 and row.deg_I == 64 and row.same_basis
    report(11, ok, f"{row.system}: F5 ops std/qh = {row.f5_ops_std}/{row.f5_ops_qh} = {row.f5_speedup}")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
