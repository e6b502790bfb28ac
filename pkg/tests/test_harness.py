import numpy as np
import pytest

from netcomplexity import (
    DirectedGraph,
    DynamicsAssignment,
    ExperimentConfig,
    GeneratorSpec,
    run_compute,
    run_experiment,
    run_table1,
    write_edge_list,
)
from netcomplexity.harness import derive_seed, experiment_csv_text, summary_csv_text, to_json


def cycle3():
    return DirectedGraph(3, {(0, 1), (1, 2), (2, 0)})


class TestRunCompute:
    def test_empty_graph(self):
        rec = run_compute(DirectedGraph(4, set()), DynamicsAssignment.uniform(4))
        assert rec["phi_structural"] == 0
        assert rec["phi_over_n"] == 0.0
        assert rec["n_min"] == 4

    def test_cycle_single_group(self):
        rec = run_compute(cycle3(), DynamicsAssignment.uniform(3))
        assert rec["phi_structural"] == 3
        assert (rec["lower_bound"], rec["upper_bound"]) == (3, 3)
        assert rec["phi_over_n"] == 1.0
        assert "phi_numerical" not in rec

    def test_path_distinct_attains_upper(self):
        g = DirectedGraph(3, {(0, 1), (1, 2)})
        rec = run_compute(g, DynamicsAssignment.distinct(3))
        assert rec["phi_structural"] == rec["upper_bound"] == 2

    def test_numerical_opt_in(self):
        rec = run_compute(cycle3(), DynamicsAssignment.uniform(3), numerical=True, seed=5)
        assert rec["phi_numerical"] == 3
        assert rec["oracle_values"] == [3, 3]
        assert rec["seed"] == 5

    def test_numerical_respects_existing_weights_and_poles(self):
        g = cycle3().with_weights({(0, 1): 1.0, (1, 2): 1.0, (2, 0): 1.0})
        d = DynamicsAssignment.from_gamma((-0.5, -0.5, -0.5))
        rec = run_compute(g, d, numerical=True)
        assert rec["phi_numerical"] == 3

    def test_json_is_stable(self):
        rec = run_compute(cycle3(), DynamicsAssignment.uniform(3), numerical=True, seed=1)
        assert to_json(rec) == to_json(
            run_compute(cycle3(), DynamicsAssignment.uniform(3), numerical=True, seed=1)
        )


class TestDeriveSeed:
    def test_deterministic_and_keyed(self):
        assert derive_seed(1, 2, 3) == derive_seed(1, 2, 3)
        assert derive_seed(1, 2, 3) != derive_seed(1, 3, 2)
        assert derive_seed(1) != derive_seed(2)


class TestExperimentConfig:
    def test_validation(self):
        spec = GeneratorSpec(model="barabasi_albert", n=10, m=1)
        with pytest.raises(ValueError):
            ExperimentConfig(k_values=(), trials=1, master_seed=0, generator=spec)
        with pytest.raises(ValueError):
            ExperimentConfig(k_values=(1,), trials=0, master_seed=0, generator=spec)
        with pytest.raises(ValueError):
            ExperimentConfig(k_values=(1,), trials=1, master_seed=0)
        with pytest.raises(ValueError):
            ExperimentConfig(k_values=(1,), trials=1, master_seed=0, generator=spec,
                             input_path="x.csv")


class TestRunExperiment:
    def test_row_accounting(self, tmp_path):
        out = str(tmp_path / "res.csv")
        config = ExperimentConfig(
            k_values=(1, 5, 10),
            trials=7,
            master_seed=3,
            generator=GeneratorSpec(model="watts_strogatz", n=20, ring_degree=4, p=0.3),
            output_path=out,
        )
        records, summaries = run_experiment(config)
        assert len(records) == 3 * 7
        lines = open(out).read().splitlines()
        assert lines[0] == "trial,k,phi_structural,lower,upper,phi_over_n,seed"
        assert len(lines) == 1 + 21
        assert len(summaries) == 3
        summary = open(str(tmp_path / "res_summary.csv")).read().splitlines()
        assert summary[0] == "k,median,q1,q3,min,max,trials"
        assert len(summary) == 4

    def test_k_exceeding_n_rejected(self):
        config = ExperimentConfig(
            k_values=(25,),
            trials=1,
            master_seed=0,
            generator=GeneratorSpec(model="barabasi_albert", n=10, m=1),
        )
        with pytest.raises(ValueError, match="exceeds node count"):
            run_experiment(config)

    def test_graph_paired_across_k(self):
        config = ExperimentConfig(
            k_values=(1, 4),
            trials=2,
            master_seed=9,
            generator=GeneratorSpec(model="barabasi_albert", n=12, m=2),
        )
        records, _ = run_experiment(config)
        by_k = {k: [r for r in records if r.k == k] for k in (1, 4)}
        assert [r.seed for r in by_k[1]] == [r.seed for r in by_k[4]]
        # Same graph, so the partition-free bounds coincide across k.
        assert [(r.lower, r.upper) for r in by_k[1]] == [(r.lower, r.upper) for r in by_k[4]]

    def test_empty_input_graph_single_row(self, tmp_path):
        src = str(tmp_path / "empty.csv")
        write_edge_list(src, DirectedGraph(5, set()))
        config = ExperimentConfig(k_values=(1,), trials=1, master_seed=0, input_path=src)
        records, summaries = run_experiment(config)
        assert len(records) == 1
        assert records[0].phi_structural == 0
        assert summaries[0]["median"] == 0.0

    def test_rewire_mode(self, tmp_path):
        src = str(tmp_path / "base.csv")
        write_edge_list(src, DirectedGraph(8, {(i, (i + 1) % 8) for i in range(8)}))
        config = ExperimentConfig(
            k_values=(2,), trials=4, master_seed=1, input_path=src,
        )
        records, _ = run_experiment(config)
        assert len(records) == 4
        assert all(r.generator == "rewire(base.csv)" for r in records)

    def test_numerical_column(self):
        config = ExperimentConfig(
            k_values=(2,),
            trials=3,
            master_seed=2,
            generator=GeneratorSpec(model="barabasi_albert", n=8, m=1),
            compute_numerical=True,
        )
        records, _ = run_experiment(config)
        text = experiment_csv_text(records, include_numerical=True)
        assert text.splitlines()[0].endswith(",phi_numerical")
        assert all(r.phi_numerical is not None and r.phi_numerical <= r.phi_structural
                   for r in records)

    def test_deterministic_payload(self):
        config = ExperimentConfig(
            k_values=(1, 3),
            trials=5,
            master_seed=11,
            generator=GeneratorSpec(model="watts_strogatz", n=15, ring_degree=4, p=0.5),
        )
        r1, s1 = run_experiment(config)
        r2, s2 = run_experiment(config)
        assert experiment_csv_text(r1) == experiment_csv_text(r2)
        assert summary_csv_text(s1) == summary_csv_text(s2)


class TestRunTable1:
    def test_zero_edges(self, tmp_path):
        edges = tmp_path / "e.csv"
        edges.write_text("n=4\n")
        groups = tmp_path / "g.csv"
        groups.write_text("0,a\n1,a\n2,b\n3,b\n")
        rec = run_table1(str(edges), str(groups), rewire_trials=5, seed=0)
        assert rec["phi_over_n_true"] == 0.0
        assert rec["phi_over_n_rand_mean"] == 0.0

    def test_cycle_vs_rewired(self, tmp_path):
        n = 12
        edges = tmp_path / "e.csv"
        edges.write_text("n=12\n" + "".join(f"{i},{(i + 1) % n}\n" for i in range(n)))
        groups = tmp_path / "g.csv"
        groups.write_text("".join(f"{i},grp{i % 2}\n" for i in range(n)))
        rec = run_table1(str(edges), str(groups), rewire_trials=20, seed=4)
        assert rec["n"] == n and rec["k"] == 2
        assert rec["phi_over_n_true"] == 1.0  # a directed cycle is a perfect matching
        assert 0.0 < rec["phi_over_n_rand_mean"] <= 1.0

    def test_deterministic(self, tmp_path):
        edges = tmp_path / "e.csv"
        edges.write_text("n=6\n0,1\n1,2\n2,3\n3,4\n4,5\n5,0\n")
        groups = tmp_path / "g.csv"
        groups.write_text("".join(f"{i},g{i % 3}\n" for i in range(6)))
        a = run_table1(str(edges), str(groups), rewire_trials=10, seed=8)
        b = run_table1(str(edges), str(groups), rewire_trials=10, seed=8)
        assert a == b
