"""qhgb command line: predict, solve, check, gen, bench."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings

from . import bench as bench_mod
from .affine import AffineRegularityWarning, AffineSystem, is_affine_regular, solve_affine
from .checks import SHAPES, EmptyDegree, gen_generic, is_noether_position, is_regular
from .f5 import NotQuasiHomogeneous, matrix_f5, matrix_f5_hom
from .fglm import DimensionPositive, fglm
from .hilbert import bounds, profile
from .io import FormatError, format_basis, format_system, read_system, write_text
from .monomials import WeightSystem

PREDICT_KEYS = [
    "n", "m", "weights", "wdegrees", "degree", "i_reg", "dreg_bound", "omega",
    "c_fglm", "c_f5_basic", "c_f5_binomial", "c_f5_refined",
    "c_f5_refined_binomial", "c_f5_hom", "c_f5_bdi",
]


class UsageError(Exception):
    pass


def _fraction_out(q):
    return int(q) if q.denominator == 1 else str(q)


def predict_report(W: WeightSystem, wdegrees, omega=3) -> dict:
    prof = profile(W, wdegrees)
    out = {
        "n": prof.n,
        "m": prof.m,
        "weights": list(W.weights),
        "wdegrees": list(prof.wdegrees),
        "degree": _fraction_out(prof.degree),
        "i_reg": prof.i_reg,
        "dreg_bound": prof.dreg_bound,
    }
    out.update(bounds(prof, omega).as_dict())
    return out


def _csv_line(report: dict, keys) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(keys)
    w.writerow([" ".join(map(str, v)) if isinstance(v, list) else v for v in (report[k] for k in keys)])
    return buf.getvalue()


def _emit(text: str, path=None):
    if path:
        write_text(path, text)
    else:
        sys.stdout.write(text)


def _load(path):
    try:
        return read_system(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


# -- subcommands ------------------------------------------------------------------


def cmd_predict(args) -> int:
    if args.input:
        sf = _load(args.input)
        W = sf.ring.weights
        degs = tuple(max(f.wdegrees) for f in sf.polys if not f.is_zero())
    else:
        if not args.weights or not args.degrees:
            raise UsageError("predict needs an input file or both --weights and --degrees")
        W = WeightSystem(tuple(args.weights))
        degs = tuple(args.degrees)
    try:
        rep = predict_report(W, degs, args.omega)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        _emit(_csv_line(rep, PREDICT_KEYS), args.output)
    else:
        _emit(json.dumps(rep, indent=2) + "\n", args.output)
    return 0


def _solve_homogeneous(F, args):
    run = matrix_f5 if args.strategy == "qh" else matrix_f5_hom
    G = run(F, args.dmax)
    report = {
        "strategy": args.strategy,
        "d_max": G.truncation_wdeg,
        "observed_dreg": G.observed_dreg,
        "reductions_to_zero": G.reductions_to_zero,
        "f5_ops": G.ops,
        "degree": len(G.staircase) if G.staircase is not None else None,
    }
    return G, report


def cmd_solve(args) -> int:
    sf = _load(args.input)
    polys = [f for f in sf.polys if not f.is_zero()]
    if not polys:
        raise UsageError("no polynomials in input")
    if args.affine:
        A = AffineSystem.from_polys(polys)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", AffineRegularityWarning)
            try:
                S = solve_affine(A, d_max=args.dmax, lex=False, strategy=args.strategy)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        G = S.basis
        report = {"strategy": args.strategy, **S.report(), "f5_ops": S.hom_basis.ops}
    else:
        sys_ = sf.system()
        if not sys_.quasi_homogeneous:
            raise UsageError("input is not W-homogeneous for the given weights; use --affine")
        try:
            G, report = _solve_homogeneous(sys_, args)
        except NotQuasiHomogeneous as exc:
            raise UsageError(str(exc)) from None
    out = G
    if args.order == "lex":
        if G.staircase is None:
            raise UsageError("ideal is positive dimensional: Lex output needs a finite staircase")
        try:
            out = fglm(G)
        except DimensionPositive as exc:
            raise UsageError(str(exc)) from None
        out.truncation_wdeg = None
        report["fglm_ops"] = out.fglm_ops
    if args.stats:
        write_text(args.stats, G.stats_csv())
    _emit(format_basis(out), args.output)
    if args.report:
        write_text(args.report, json.dumps(report, indent=2) + "\n")
    else:
        print(json.dumps(report), file=sys.stderr)
    return 0


def cmd_check(args) -> int:
    sf = _load(args.input)
    F = sf.system()
    out = {"whomogeneous": bool(F.quasi_homogeneous), "wdegrees": list(F.wdegrees)}
    if F.quasi_homogeneous:
        rep = is_regular(F)
        out["regular"] = rep.regular
        out["witness"] = rep.witness
        out["noether"] = bool(rep.regular and F.m <= F.n and is_noether_position(F))
    else:
        out["affine_regular"] = is_affine_regular(AffineSystem.from_polys(F.polys))
    if F.m <= F.n:
        out["profile"] = predict_report(F.weights, F.wdegrees, args.omega)
    _emit(json.dumps(out, indent=2) + "\n", args.output)
    return 0


def cmd_gen(args) -> int:
    W = WeightSystem(tuple(args.weights))
    try:
        F = gen_generic(W.n, W, tuple(args.degrees), args.seed, args.shape, args.p)
    except (EmptyDegree, ValueError) as exc:
        raise UsageError(str(exc)) from None
    _emit(format_system(F), args.output)
    return 0


def _bench_configs(args):
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot load bench config: {exc}") from None
        return data if isinstance(data, list) else data["configs"]
    if not args.weights or not args.degrees:
        raise UsageError("bench needs --config or both --weights and --degrees")
    return [{"weights": args.weights, "degrees": args.degrees, "seed": s} for s in args.seeds]


def cmd_bench(args) -> int:
    rows = bench_mod.run(_bench_configs(args), fglm_std=not args.no_std_fglm)
    _emit(bench_mod.to_csv(rows), args.output)
    return 0


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qhgb", description="Groebner bases of quasi-homogeneous systems over GF(p).")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("predict", help="degree, regularity bounds and cost estimates")
    p.add_argument("input", nargs="?", help="system file (its top W-degrees are used)")
    p.add_argument("--weights", type=int, nargs="+")
    p.add_argument("--degrees", type=int, nargs="+")
    p.add_argument("--omega", type=float, default=3)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("solve", help="compute a reduced Groebner basis")
    p.add_argument("input")
    p.add_argument("--order", choices=("lex", "wgrevlex"), default="lex")
    p.add_argument("--strategy", choices=("qh", "std"), default="qh",
                   help="qh: weighted Matrix-F5 on F; std: Matrix-F5 on hom_W(F), then pull back")
    p.add_argument("--affine", action="store_true", help="input is not W-homogeneous")
    p.add_argument("--dmax", type=int, help="truncation W-degree (default: the regularity bound)")
    p.add_argument("-o", "--output", help="basis file (default: stdout)")
    p.add_argument("--stats", help="write per-degree matrix statistics as CSV")
    p.add_argument("--report", help="write the run report as JSON (default: stderr)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="W-homogeneity, regularity and Noether position")
    p.add_argument("input")
    p.add_argument("--omega", type=float, default=3)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="seeded generic system")
    p.add_argument("--weights", type=int, nargs="+", required=True)
    p.add_argument("--degrees", type=int, nargs="+", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shape", choices=SHAPES, default="whomog")
    p.add_argument("--p", type=int, default=65521)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="qh versus std strategy table (CSV)")
    p.add_argument("--config", help="JSON list of {weights, degrees, seed}")
    p.add_argument("--weights", type=int, nargs="+")
    p.add_argument("--degrees", type=int, nargs="+")
    p.add_argument("--seeds", type=int, nargs="+", default=[0])
    p.add_argument("--no-std-fglm", action="store_true", help="skip FGLM on the homogenized basis")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qhgb {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
