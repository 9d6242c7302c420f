"""Experiment orchestration and report emission.

Reproduces the benchmark protocol: Erdos-Renyi categories (n, p), 10
graphs per category, 20 repetitions per graph, exponential-decay base-2
interference matrices, strategies random / dsatur / harmony. Aggregation
is exact (rational means, single final rounding) so reports are
reproducible byte for byte from the master seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import _rng
from .bounds import csc_bound, tsc_bound
from .core import InvalidParameterError, make_exp_decay_spectrum
from .graphs import gen_er_graph
from .harmony import HarmonyParams, harmony_csc, harmony_tsc
from .solvers import csc_dsatur, iterative_csc, random_coloring, tsc_dsatur

STRATEGIES = ("random", "dsatur", "harmony")


@dataclass(frozen=True)
class GraphCategory:
    n: int
    p: Fraction
    graphs_per_category: int = 10
    repetitions: int = 20
    master_seed: int = 0

    def __post_init__(self):
        if not (0 <= self.p <= 1):
            raise InvalidParameterError("p must be in [0, 1]")

    def graph_seed(self, index: int) -> int:
        return _rng.derive_seed(self.master_seed, "graph", self.n, self.p, index)


@dataclass
class ExperimentRow:
    n: int
    p: Fraction
    param: str
    stats: dict  # strategy -> (avg Fraction, std float, count int)
    bound: Fraction
    gap_pct: Fraction
    flagged: tuple = ()


def _mean_std(values: Sequence[Fraction]) -> tuple[Fraction, float]:
    n = len(values)
    mean = sum(values, Fraction(0)) / n
    if n < 2:
        return mean, 0.0
    var = sum((x - mean) ** 2 for x in values) / (n - 1)
    return mean, math.sqrt(float(var))


def _aggregate(per_graph: list[list[Fraction]], std_mode: str) -> tuple[Fraction, float, int]:
    pooled = [x for graph_vals in per_graph for x in graph_vals]
    mean, std = _mean_std(pooled)
    if std_mode == "per_graph":
        stds = [_mean_std(vals)[1] for vals in per_graph if len(vals) > 1]
        std = sum(stds) / len(stds) if stds else 0.0
    return mean, std, len(pooled)


def _finish_row(
    n: int,
    p: Fraction,
    param: str,
    stats: dict,
    bound: Fraction,
) -> ExperimentRow:
    best = min(avg for avg, _, _ in stats.values())
    gap = Fraction(0) if bound == 0 else 100 * (bound - best) / bound
    flagged = tuple(s for s, (avg, _, _) in stats.items() if avg > bound)
    return ExperimentRow(n=n, p=p, param=param, stats=stats, bound=bound, gap_pct=gap, flagged=flagged)


def run_tsc_experiment(
    category: GraphCategory,
    k: int,
    strategies: Sequence[str] = STRATEGIES,
    harmony_params: HarmonyParams = HarmonyParams(),
    std_mode: str = "pooled",
) -> ExperimentRow:
    spectrum = make_exp_decay_spectrum(k, 2)
    per_graph: dict[str, list[list[Fraction]]] = {s: [] for s in strategies}
    bounds = []
    for gi in range(category.graphs_per_category):
        gseed = category.graph_seed(gi)
        graph = gen_er_graph(category.n, category.p, gseed)
        bounds.append(tsc_bound(graph, spectrum, k))
        for strategy in strategies:
            vals = []
            for rep in range(category.repetitions):
                rseed = _rng.derive_seed(gseed, strategy, rep)
                if strategy == "random":
                    rep_out = random_coloring(graph, spectrum, k, rseed)
                elif strategy == "dsatur":
                    rep_out = tsc_dsatur(graph, spectrum, k, rseed)
                elif strategy == "harmony":
                    rep_out = harmony_tsc(graph, spectrum, k, harmony_params, rseed)
                else:
                    raise InvalidParameterError(f"unknown strategy {strategy!r}")
                vals.append(rep_out.max_interference)
            per_graph[strategy].append(vals)
    stats = {s: _aggregate(per_graph[s], std_mode) for s in strategies}
    bound = sum(bounds, Fraction(0)) / len(bounds)
    return _finish_row(category.n, category.p, f"k={k}", stats, bound)


def run_csc_experiment(
    category: GraphCategory,
    t_fraction: Fraction,
    strategies: Sequence[str] = STRATEGIES,
    harmony_params: HarmonyParams = HarmonyParams(),
    retries: int = 20,
    std_mode: str = "pooled",
) -> ExperimentRow:
    # threshold scales with the expected average degree n*p, not with
    # each sampled graph's realized degrees
    t = Fraction(t_fraction) * category.n * category.p
    spectrum = make_exp_decay_spectrum(category.n, 2)
    per_graph: dict[str, list[list[Fraction]]] = {s: [] for s in strategies}
    bounds = []
    infeasible: set[str] = set()
    for gi in range(category.graphs_per_category):
        gseed = category.graph_seed(gi)
        graph = gen_er_graph(category.n, category.p, gseed)
        bounds.append(Fraction(csc_bound(graph, spectrum, t)))
        for strategy in strategies:
            vals = []
            for rep in range(category.repetitions):
                rseed = _rng.derive_seed(gseed, strategy, rep)
                if strategy == "random":
                    rep_out = iterative_csc(graph, spectrum, t, random_coloring, rseed, retries)
                elif strategy == "dsatur":
                    rep_out = csc_dsatur(graph, spectrum, t, rseed)
                elif strategy == "harmony":
                    rep_out = harmony_csc(graph, spectrum, t, harmony_params, rseed, retries)
                else:
                    raise InvalidParameterError(f"unknown strategy {strategy!r}")
                if rep_out.feasible:
                    vals.append(Fraction(rep_out.distinct_colors))
                else:
                    infeasible.add(strategy)
            if vals:
                per_graph[strategy].append(vals)
    stats = {s: _aggregate(per_graph[s], std_mode) for s in strategies if per_graph[s]}
    bound = sum(bounds, Fraction(0)) / len(bounds)
    t_label = f"t={_fmt(t)}"
    row = _finish_row(category.n, category.p, t_label, stats, bound)
    row.flagged = row.flagged + tuple(f"{s}:infeasible" for s in sorted(infeasible))
    return row


# ---------------------------------------------------------------------------
# Report emission

def _fmt(x) -> str:
    """Shortest decimal form; exact fractions may print as fractions."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    as_float = float(f)
    if Fraction(str(as_float)) == f:
        return str(as_float)
    return f"{f.numerator}/{f.denominator}"


def _round1(x) -> str:
    return f"{float(x):.1f}"


def emit_report(rows: Sequence[ExperimentRow], fmt: str = "csv") -> str:
    if fmt == "csv":
        lines = ["n,p,param,strategy,avg,std,bound,gap_pct"]
        for row in rows:
            for strategy, (avg, std, _) in row.stats.items():
                lines.append(
                    f"{row.n},{_fmt(row.p)},{row.param},{strategy},"
                    f"{_round1(avg)},{std:.1f},{_round1(row.bound)},{_round1(row.gap_pct)}"
                )
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        strategies: list[str] = []
        for row in rows:
            for s in row.stats:
                if s not in strategies:
                    strategies.append(s)
        header = ["n", "p", "param", "Bound"]
        for s in strategies:
            header += [f"{s} avg", f"{s} std"]
        header.append("Gap (%)")
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        for row in rows:
            cells = [str(row.n), _fmt(row.p), row.param, _round1(row.bound)]
            for s in strategies:
                if s in row.stats:
                    avg, std, _ = row.stats[s]
                    cells += [_round1(avg), f"{std:.1f}"]
                else:
                    cells += ["-", "-"]
            cells.append(_round1(row.gap_pct))
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    raise InvalidParameterError(f"unknown report format {fmt!r}")


def emit_series(rows: Sequence[ExperimentRow]) -> str:
    """(expected average degree, best strategy average) pairs as CSV."""
    lines = ["np,best_avg"]
    for row in rows:
        best = min(avg for avg, _, _ in row.stats.values())
        lines.append(f"{_fmt(row.n * row.p)},{_round1(best)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Bench configuration

@dataclass
class BenchConfig:
    problem: str = "tsc"
    n_list: tuple = (60, 70, 80)
    p_list: tuple = (
        Fraction(1, 10),
        Fraction(3, 10),
        Fraction(1, 2),
        Fraction(7, 10),
        Fraction(9, 10),
    )
    k_list: tuple = (4,)
    t_fractions: tuple = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
    graphs_per_category: int = 10
    repetitions: int = 20
    master_seed: int = 1
    strategies: tuple = STRATEGIES
    # benchmark default trades budget for wall time; the library default
    # for one-off solves is 50k evaluations
    harmony: HarmonyParams = field(default_factory=lambda: HarmonyParams(max_evaluations=6000))
    retries: int = 20
    std_mode: str = "pooled"


def parse_config(text: str) -> BenchConfig:
    """key=value lines; lists are comma-separated; # starts a comment."""
    cfg = BenchConfig()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidParameterError(f"config line {lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        items = [v.strip() for v in value.split(",") if v.strip()]
        if key == "problem":
            cfg.problem = value
        elif key in ("n", "n_list"):
            cfg.n_list = tuple(int(v) for v in items)
        elif key in ("p", "p_list"):
            cfg.p_list = tuple(Fraction(v) for v in items)
        elif key in ("k", "k_list"):
            cfg.k_list = tuple(int(v) for v in items)
        elif key in ("t_fraction", "t_fractions"):
            cfg.t_fractions = tuple(Fraction(v) for v in items)
        elif key in ("graphs", "graphs_per_category"):
            cfg.graphs_per_category = int(value)
        elif key in ("reps", "repetitions"):
            cfg.repetitions = int(value)
        elif key == "master_seed":
            cfg.master_seed = int(value)
        elif key == "strategies":
            cfg.strategies = tuple(items)
        elif key == "retries":
            cfg.retries = int(value)
        elif key == "std_mode":
            if value not in ("pooled", "per_graph"):
                raise InvalidParameterError(f"config line {lineno}: bad std_mode {value!r}")
            cfg.std_mode = value
        elif key in ("hms", "hmcr", "par", "evals"):
            hp = {
                "memory_size": cfg.harmony.memory_size,
                "memory_consider_rate": cfg.harmony.memory_consider_rate,
                "pitch_adjust_rate": cfg.harmony.pitch_adjust_rate,
                "max_evaluations": cfg.harmony.max_evaluations,
            }
            if key == "hms":
                hp["memory_size"] = int(value)
            elif key == "hmcr":
                hp["memory_consider_rate"] = float(value)
            elif key == "par":
                hp["pitch_adjust_rate"] = float(value)
            else:
                hp["max_evaluations"] = int(value)
            cfg.harmony = HarmonyParams(**hp)
        else:
            raise InvalidParameterError(f"config line {lineno}: unknown key {key!r}")
    return cfg


def run_bench(cfg: BenchConfig) -> list[ExperimentRow]:
    rows = []
    params = cfg.k_list if cfg.problem == "tsc" else cfg.t_fractions
    if cfg.problem not in ("tsc", "csc"):
        raise InvalidParameterError(f"unknown problem {cfg.problem!r}")
    for param in params:
        for n in cfg.n_list:
            for p in cfg.p_list:
                cat = GraphCategory(
                    n=n,
                    p=Fraction(p),
                    graphs_per_category=cfg.graphs_per_category,
                    repetitions=cfg.repetitions,
                    master_seed=cfg.master_seed,
                )
                if cfg.problem == "tsc":
                    rows.append(
                        run_tsc_experiment(cat, param, cfg.strategies, cfg.harmony, cfg.std_mode)
                    )
                else:
                    rows.append(
                        run_csc_experiment(
                            cat, param, cfg.strategies, cfg.harmony, cfg.retries, cfg.std_mode
                        )
                    )
    return rows
