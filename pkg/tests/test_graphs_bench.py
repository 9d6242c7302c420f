from fractions import Fraction as F

import pytest

from spectrumcolor import (
    HarmonyParams,
    InvalidParameterError,
    gen_er_graph,
    named_graph,
)
from spectrumcolor.bench import (
    BenchConfig,
    GraphCategory,
    emit_report,
    emit_series,
    parse_config,
    run_bench,
    run_csc_experiment,
    run_tsc_experiment,
)


class TestGenEr:
    def test_reproducible(self):
        a = gen_er_graph(30, F(1, 2), seed=5)
        b = gen_er_graph(30, F(1, 2), seed=5)
        assert a == b

    def test_seed_sensitivity(self):
        assert gen_er_graph(30, F(1, 2), seed=5) != gen_er_graph(30, F(1, 2), seed=6)

    def test_extreme_probabilities(self):
        assert gen_er_graph(10, 0, seed=0).m == 0
        assert gen_er_graph(10, 1, seed=0).m == 45

    def test_density_roughly_matches_p(self):
        g = gen_er_graph(100, F(3, 10), seed=1)
        assert 0.25 < g.m / 4950 < 0.35

    def test_invalid_p(self):
        with pytest.raises(InvalidParameterError):
            gen_er_graph(10, F(3, 2), seed=0)


class TestNamedGraphs:
    def test_paw(self):
        g = named_graph("paw")
        assert (g.n, g.m) == (4, 4)

    def test_families(self):
        assert named_graph("cycle(5)").m == 5
        assert named_graph("complete(5)").m == 10
        assert named_graph("star(4)").n == 5 and named_graph("star(4)").m == 4
        assert named_graph("path(4)").m == 3

    def test_unknown(self):
        with pytest.raises(InvalidParameterError):
            named_graph("petersen")


SMALL_HARMONY = HarmonyParams(max_evaluations=200)


def small_cat(n=10, p=F(1, 2), graphs=2, reps=3, seed=7):
    return GraphCategory(n=n, p=p, graphs_per_category=graphs, repetitions=reps, master_seed=seed)


class TestExperiments:
    def test_tsc_row_shape(self):
        row = run_tsc_experiment(small_cat(), 4, harmony_params=SMALL_HARMONY)
        assert set(row.stats) == {"random", "dsatur", "harmony"}
        for avg, std, count in row.stats.values():
            assert count == 6 and std >= 0 and avg >= 0
        assert row.param == "k=4"
        # heuristic averages respect the bound on these sizes
        assert row.flagged == () or all(":" in f for f in row.flagged)

    def test_tsc_dsatur_beats_random(self):
        row = run_tsc_experiment(small_cat(n=20), 4, harmony_params=SMALL_HARMONY)
        assert row.stats["dsatur"][0] < row.stats["random"][0]

    def test_csc_row_shape(self):
        row = run_csc_experiment(
            small_cat(n=8), F(1, 2), harmony_params=SMALL_HARMONY, retries=3
        )
        assert row.param.startswith("t=")
        for avg, _, _ in row.stats.values():
            assert 1 <= avg <= 8

    def test_rows_reproducible(self):
        a = run_tsc_experiment(small_cat(), 4, harmony_params=SMALL_HARMONY)
        b = run_tsc_experiment(small_cat(), 4, harmony_params=SMALL_HARMONY)
        assert a.stats == b.stats and a.bound == b.bound and a.gap_pct == b.gap_pct


class TestReports:
    def _rows(self):
        return [run_tsc_experiment(small_cat(), 4, harmony_params=SMALL_HARMONY)]

    def test_csv_layout(self):
        text = emit_report(self._rows(), "csv")
        lines = text.strip().splitlines()
        assert lines[0] == "n,p,param,strategy,avg,std,bound,gap_pct"
        assert len(lines) == 4  # header + 3 strategies
        for line in lines[1:]:
            assert len(line.split(",")) == 8

    def test_markdown_layout(self):
        text = emit_report(self._rows(), "markdown")
        lines = text.strip().splitlines()
        assert lines[0].startswith("| n | p | param | Bound |")
        assert len(lines) == 3

    def test_series(self):
        text = emit_series(self._rows())
        lines = text.strip().splitlines()
        assert lines[0] == "np,best_avg"
        assert lines[1].startswith("5,")  # n*p = 10 * 1/2

    def test_unknown_format(self):
        with pytest.raises(InvalidParameterError):
            emit_report([], "yaml")


class TestConfig:
    def test_defaults(self):
        cfg = parse_config("")
        assert cfg.problem == "tsc"
        assert cfg.n_list == (60, 70, 80)
        assert cfg.p_list == (F(1, 10), F(3, 10), F(1, 2), F(7, 10), F(9, 10))
        assert cfg.harmony.max_evaluations == 6000

    def test_parse_full(self):
        cfg = parse_config(
            """
            # benchmark setup
            problem = csc
            n = 12, 16
            p = 0.5
            t_fractions = 1/4, 1/2
            graphs = 3
            reps = 5
            master_seed = 99
            strategies = dsatur, random
            retries = 4
            std_mode = per_graph
            evals = 500
            hmcr = 0.8
            """
        )
        assert cfg.problem == "csc"
        assert cfg.n_list == (12, 16)
        assert cfg.p_list == (F(1, 2),)
        assert cfg.t_fractions == (F(1, 4), F(1, 2))
        assert (cfg.graphs_per_category, cfg.repetitions) == (3, 5)
        assert cfg.master_seed == 99
        assert cfg.strategies == ("dsatur", "random")
        assert cfg.std_mode == "per_graph"
        assert cfg.harmony.max_evaluations == 500
        assert cfg.harmony.memory_consider_rate == 0.8

    def test_bad_lines(self):
        with pytest.raises(InvalidParameterError):
            parse_config("this is not a config")
        with pytest.raises(InvalidParameterError):
            parse_config("unknown_key = 1")
        with pytest.raises(InvalidParameterError):
            parse_config("std_mode = median")

    def test_run_bench_deterministic(self):
        cfg = BenchConfig(
            n_list=(8,),
            p_list=(F(1, 2),),
            k_list=(3,),
            graphs_per_category=2,
            repetitions=2,
            harmony=SMALL_HARMONY,
            strategies=("random", "dsatur"),
        )
        a = emit_report(run_bench(cfg), "csv")
        b = emit_report(run_bench(cfg), "csv")
        assert a == b

    def test_run_bench_unknown_problem(self):
        with pytest.raises(InvalidParameterError):
            run_bench(BenchConfig(problem="maxcut"))
