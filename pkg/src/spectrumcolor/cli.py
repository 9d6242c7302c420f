"""Command-line surface: spectrum-color solve-tsc / solve-csc / bound /
oracle / bench / kernel-bench.

Exit codes: 0 success, 2 infeasible CSC run, 1 any error.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from . import _kernels
from .bench import emit_report, emit_series, parse_config, run_bench
from .bounds import csc_report, tsc_report
from .core import (
    Graph,
    InvalidParameterError,
    SolveReport,
    Spectrum,
    SpectrumColoringError,
    load_graph,
    load_matrix,
    make_exp_decay_spectrum,
    parse_rational,
)
from .graphs import gen_er_graph, named_graph
from .harmony import HarmonyParams, harmony_csc, harmony_tsc
from .oracle import exact_csc, exact_tsc
from .solvers import (
    balanced_coloring,
    csc_dsatur,
    iterative_csc,
    random_coloring,
    tsc_dsatur,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, per the CLI contract
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_graph_args(sub):
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("--graph", help="DIMACS-like graph file")
    grp.add_argument("--named", help="named graph: paw, cycle(m), complete(m), star(m), path(m)")


def _add_matrix_args(sub):
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("--matrix", help="CSV interference matrix file (exact rationals)")
    grp.add_argument(
        "--expdecay",
        type=int,
        metavar="S",
        help="exponential-decay base-2 spectrum of size S",
    )


def _add_harmony_args(sub):
    sub.add_argument("--hms", type=int, default=10, help="harmony memory size")
    sub.add_argument("--hmcr", type=float, default=0.9, help="memory considering rate")
    sub.add_argument("--par", type=float, default=0.3, help="pitch adjusting rate")
    sub.add_argument("--evals", type=int, default=50_000, help="objective evaluation budget")


def _load_graph(args) -> Graph:
    if args.graph:
        return load_graph(args.graph)
    return named_graph(args.named)


def _load_spectrum(args, min_size: int = 1) -> Spectrum:
    if args.matrix:
        spectrum = load_matrix(args.matrix)
        if spectrum.size < min_size:
            print(
                f"warning: matrix has {spectrum.size} colors, fewer than the "
                f"{min_size} the CSC convention asks for",
                file=sys.stderr,
            )
        return spectrum
    return make_exp_decay_spectrum(max(args.expdecay, min_size), 2)


def _harmony_params(args) -> HarmonyParams:
    return HarmonyParams(
        memory_size=args.hms,
        memory_consider_rate=args.hmcr,
        pitch_adjust_rate=args.par,
        max_evaluations=args.evals,
    )


def _print_report(report: SolveReport, fmt: str) -> None:
    if fmt == "csv":
        coloring = " ".join("-" if c is None else str(c) for c in report.coloring)
        maxi = "" if report.max_interference is None else str(report.max_interference)
        sumi = "" if report.sum_interference is None else str(report.sum_interference)
        print("strategy,seed,feasible,max_interference,sum_interference,distinct_colors,coloring")
        print(
            f"{report.strategy},{report.seed},{int(report.feasible)},"
            f"{maxi},{sumi},{report.distinct_colors},{coloring}"
        )
        return
    print(f"strategy         : {report.strategy}")
    print(f"seed             : {report.seed}")
    print(f"feasible         : {report.feasible}")
    if report.max_interference is not None:
        print(
            f"max interference : {report.max_interference} "
            f"(~{float(report.max_interference):.6g})"
        )
        print(
            f"sum interference : {report.sum_interference} "
            f"(~{float(report.sum_interference):.6g})"
        )
    print(f"distinct colors  : {report.distinct_colors}")
    if all(c is not None for c in report.coloring):
        print("coloring         : " + " ".join(str(c) for c in report.coloring))


def _cmd_solve_tsc(args) -> int:
    graph = _load_graph(args)
    spectrum = _load_spectrum(args, min_size=args.k)
    if args.strategy == "dsatur":
        report = tsc_dsatur(graph, spectrum, args.k, args.seed, deterministic=args.deterministic)
    elif args.strategy == "random":
        report = random_coloring(graph, spectrum, args.k, args.seed)
    elif args.strategy == "balanced":
        report = balanced_coloring(graph, spectrum, args.k, args.seed)
    else:
        report = harmony_tsc(graph, spectrum, args.k, _harmony_params(args), args.seed)
    _print_report(report, args.format)
    return 0


def _cmd_solve_csc(args) -> int:
    graph = _load_graph(args)
    spectrum = _load_spectrum(args, min_size=graph.n)
    t = parse_rational(args.t)
    if args.strategy == "dsatur":
        report = csc_dsatur(graph, spectrum, t, args.seed, deterministic=args.deterministic)
    elif args.strategy == "random":
        report = iterative_csc(graph, spectrum, t, random_coloring, args.seed)
    else:
        report = harmony_csc(graph, spectrum, t, _harmony_params(args), args.seed)
    _print_report(report, args.format)
    return 0 if report.feasible else 2


def _cmd_bound(args) -> int:
    graph = _load_graph(args)
    spectrum = _load_spectrum(args)
    if args.k is not None:
        rep = tsc_report(graph, spectrum, args.k)
        kind = f"max-interference bound (k={args.k})"
    else:
        rep = csc_report(graph, spectrum, parse_rational(args.t))
        kind = f"color-count bound (t={args.t})"
    print(f"max degree   : {rep.max_degree}")
    print(f"matrix norm  : {rep.norm} (~{float(rep.norm):.6g})")
    print(f"matrix gcd   : {rep.gcd} (~{float(rep.gcd):.6g})")
    print(f"{kind}: {rep.value} (~{float(rep.value):.6g})")
    print(f"precondition : {rep.precondition_holds}")
    return 0


def _cmd_oracle(args) -> int:
    graph = _load_graph(args)
    if args.problem == "tsc" and args.k is None:
        raise InvalidParameterError("--k is required for the tsc oracle")
    if args.problem == "csc" and args.t is None:
        raise InvalidParameterError("--t is required for the csc oracle")
    if args.problem == "tsc":
        spectrum = _load_spectrum(args, min_size=args.k)
        res = exact_tsc(graph, spectrum, args.k, cap=args.cap)
        print(f"optimal max interference: {res.optimum} (~{float(res.optimum):.6g})")
    else:
        spectrum = _load_spectrum(args, min_size=graph.n)
        res = exact_csc(graph, spectrum, parse_rational(args.t), cap=args.cap)
        if not res.feasible:
            print("infeasible: no coloring meets the threshold")
            return 2
        print(f"optimal color count: {res.optimum}")
    print(f"colorings examined: {res.enumerated}")
    print("witness: " + " ".join(str(c) for c in res.witness))
    return 0


def _cmd_bench(args) -> int:
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            cfg = parse_config(fh.read())
    else:
        cfg = parse_config("")
    if args.problem:
        cfg.problem = args.problem
    rows = run_bench(cfg)
    text = emit_report(rows, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.series:
        with open(args.series, "w", encoding="utf-8") as fh:
            fh.write(emit_series(rows))
    for row in rows:
        for flag in row.flagged:
            print(
                f"note: n={row.n} p={row.p} {row.param}: {flag} "
                "(strategy average exceeds the bound or failed)",
                file=sys.stderr,
            )
    return 0


def _cmd_kernel_bench(args) -> int:
    """Time the numba kernels against the interpreted fallback."""
    if not _kernels.numba_enabled():
        print("numba backend unavailable or disabled; nothing to compare", file=sys.stderr)
        return 1
    graph = gen_er_graph(args.n, args.p, seed=args.seed)
    spectrum = make_exp_decay_spectrum(args.k, 2)
    params = HarmonyParams(max_evaluations=args.evals)
    small = gen_er_graph(args.oracle_n, args.p, seed=args.seed)

    def run_harmony():
        return harmony_tsc(graph, spectrum, args.k, params, args.seed)

    def run_oracle():
        return exact_tsc(small, spectrum, min(args.k, 3))

    import os

    print(f"instance: n={args.n} p={args.p} k={args.k} evals={args.evals}")
    print(f"{'kernel':<14}{'backend':<10}{'seconds':>10}")
    for label, fn in (("harmony", run_harmony), ("oracle-tsc", run_oracle)):
        results = {}
        for backend in ("numba", "python"):
            if backend == "python":
                os.environ["SPECTRUMCOLOR_DISABLE_NUMBA"] = "1"
            else:
                os.environ.pop("SPECTRUMCOLOR_DISABLE_NUMBA", None)
            fn()  # warm-up (includes jit compile on the numba path)
            start = time.perf_counter()
            out = fn()
            elapsed = time.perf_counter() - start
            results[backend] = out
            print(f"{label:<14}{backend:<10}{elapsed:>10.4f}")
        os.environ.pop("SPECTRUMCOLOR_DISABLE_NUMBA", None)
        a, b = results["numba"], results["python"]
        va = a.max_interference if hasattr(a, "max_interference") else a.optimum
        vb = b.max_interference if hasattr(b, "max_interference") else b.optimum
        agree = "yes" if va == vb else "NO"
        print(f"{label:<14}{'agree':<10}{agree:>10}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="spectrum-color", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve-tsc", help="fixed color count, minimize max interference")
    _add_graph_args(p)
    _add_matrix_args(p)
    p.add_argument("--k", type=int, required=True, help="number of colors to use")
    p.add_argument(
        "--strategy",
        choices=("dsatur", "random", "harmony", "balanced"),
        default="dsatur",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--deterministic", action="store_true", help="break vertex ties by index")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    _add_harmony_args(p)
    p.set_defaults(func=_cmd_solve_tsc)

    p = sub.add_parser("solve-csc", help="fixed threshold, minimize color count")
    _add_graph_args(p)
    _add_matrix_args(p)
    p.add_argument("--t", required=True, help="interference threshold (rational)")
    p.add_argument("--strategy", choices=("dsatur", "random", "harmony"), default="dsatur")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--deterministic", action="store_true", help="break vertex ties by index")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    _add_harmony_args(p)
    p.set_defaults(func=_cmd_solve_csc)

    p = sub.add_parser("bound", help="theoretical upper bounds and matrix invariants")
    _add_graph_args(p)
    _add_matrix_args(p)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--k", type=int, help="color count (max-interference bound)")
    grp.add_argument("--t", help="threshold (color-count bound)")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("oracle", help="exact brute-force optimum for small instances")
    _add_graph_args(p)
    _add_matrix_args(p)
    p.add_argument("--problem", choices=("tsc", "csc"), required=True)
    p.add_argument("--k", type=int, help="color count (tsc)")
    p.add_argument("--t", help="threshold (csc)")
    p.add_argument("--cap", type=int, default=10**8, help="enumeration cap")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bench", help="run the benchmark protocol and emit a report")
    p.add_argument("--problem", choices=("tsc", "csc"))
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--out", help="report destination (default stdout)")
    p.add_argument("--series", help="also write the (np, best avg) series CSV here")
    p.add_argument("--format", choices=("csv", "markdown"), default="csv")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("kernel-bench", help="compare numba kernels against the fallback")
    p.add_argument("--n", type=int, default=60)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--evals", type=int, default=2000)
    p.add_argument("--oracle-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=_cmd_kernel_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpectrumColoringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
