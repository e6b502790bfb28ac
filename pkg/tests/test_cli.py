import json

import pytest

from netcomplexity.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def cycle_file(tmp_path):
    path = tmp_path / "cycle.csv"
    path.write_text("n=3\n0,1\n1,2\n2,0\n")
    return str(path)


@pytest.fixture
def groups_file(tmp_path):
    path = tmp_path / "groups.csv"
    path.write_text("0,a\n1,a\n2,b\n")
    return str(path)


class TestCompute:
    def test_default_single_group(self, capsys, cycle_file):
        code, out, _ = run(capsys, "compute", cycle_file)
        assert code == 0
        rec = json.loads(out)
        assert rec["phi_structural"] == 3
        assert rec["k"] == 1

    def test_with_groups(self, capsys, cycle_file, groups_file):
        code, out, _ = run(capsys, "compute", cycle_file, "--groups", groups_file)
        rec = json.loads(out)
        assert code == 0
        assert rec["k"] == 2
        assert rec["phi_structural"] == sum(rec["per_block"])

    def test_numerical(self, capsys, cycle_file):
        code, out, _ = run(capsys, "compute", cycle_file, "--numerical", "--seed", "3")
        rec = json.loads(out)
        assert code == 0
        assert rec["phi_numerical"] == rec["phi_structural"] == 3
        assert rec["oracle_values"] == [3, 3]

    def test_missing_file_exit_2(self, capsys, tmp_path):
        code, out, err = run(capsys, "compute", str(tmp_path / "nope.csv"))
        assert code == 2
        assert "error" in json.loads(err.strip())

    def test_parse_error_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("a,b\na,b\n")
        code, _, err = run(capsys, "compute", str(bad))
        assert code == 2
        assert "duplicate" in json.loads(err.strip())["error"]

    def test_out_file(self, capsys, tmp_path, cycle_file):
        out_path = tmp_path / "rec.json"
        code, out, _ = run(capsys, "compute", cycle_file, "--out", str(out_path))
        assert code == 0 and out == ""
        assert json.loads(out_path.read_text())["phi_structural"] == 3

    def test_gamma_merge_tolerance(self, capsys, tmp_path, cycle_file):
        grp = tmp_path / "gamma.csv"
        grp.write_text("0,-0.50\n1,-0.505\n2,-0.9\n")
        code, out, _ = run(capsys, "compute", cycle_file, "--groups", str(grp))
        assert code == 0 and json.loads(out)["k"] == 3
        code, out, _ = run(capsys, "compute", cycle_file, "--groups", str(grp),
                           "--gamma-merge-tol", "0.01")
        assert code == 0 and json.loads(out)["k"] == 2

    def test_numerical_failure_exit_3(self, capsys, cycle_file, monkeypatch):
        import numpy as np

        import netcomplexity.cli as cli_mod

        def boom(*args, **kwargs):
            raise np.linalg.LinAlgError("SVD did not converge")

        monkeypatch.setattr(cli_mod, "run_compute", boom)
        code, _, err = run(capsys, "compute", cycle_file, "--numerical")
        assert code == 3
        assert "numerical failure" in json.loads(err.strip())["error"]


class TestBounds:
    def test_cycle(self, capsys, cycle_file):
        code, out, _ = run(capsys, "bounds", cycle_file)
        rec = json.loads(out)
        assert code == 0
        assert (rec["lower_bound"], rec["upper_bound"], rec["n_min"]) == (3, 3, 1)


class TestGenerateRewire:
    def test_generate_ws(self, capsys, tmp_path):
        out_path = tmp_path / "ws.csv"
        code, _, _ = run(capsys, "generate", "--model", "ws", "-n", "10",
                         "--ring-degree", "2", "--p", "0.0", "--out", str(out_path))
        assert code == 0
        lines = out_path.read_text().splitlines()
        assert lines[0] == "n=10"
        assert len(lines) == 1 + 20

    def test_generate_ba_stdout(self, capsys):
        code, out, _ = run(capsys, "generate", "--model", "ba", "-n", "5", "--m", "1", "--seed", "2")
        assert code == 0
        assert out.splitlines()[0] == "n=5"
        assert len(out.splitlines()) == 1 + 8

    def test_generate_bad_params_exit_2(self, capsys):
        code, _, err = run(capsys, "generate", "--model", "ba", "-n", "5", "--m", "7")
        assert code == 2
        assert "error" in err

    def test_rewire_preserves_count(self, capsys, cycle_file, tmp_path):
        out_path = tmp_path / "rw.csv"
        code, _, _ = run(capsys, "rewire", cycle_file, "--seed", "1", "--out", str(out_path))
        assert code == 0
        assert len(out_path.read_text().splitlines()) == 1 + 3


class TestExperiment:
    def test_csv_and_summary(self, capsys, tmp_path):
        out_path = tmp_path / "exp.csv"
        code, _, _ = run(capsys, "experiment", "--model", "ba", "-n", "12", "--m", "2",
                         "--k", "1,3", "--trials", "4", "--seed", "5", "--out", str(out_path))
        assert code == 0
        lines = out_path.read_text().splitlines()
        assert lines[0] == "trial,k,phi_structural,lower,upper,phi_over_n,seed"
        assert len(lines) == 1 + 8
        assert (tmp_path / "exp_summary.csv").exists()

    def test_stdout_mode(self, capsys):
        code, out, _ = run(capsys, "experiment", "--model", "ws", "-n", "10",
                           "--ring-degree", "2", "--p", "0.5", "--k", "2", "--trials", "2")
        assert code == 0
        assert out.splitlines()[0].startswith("trial,k,")

    def test_bad_k_list(self, capsys):
        code, _, err = run(capsys, "experiment", "--model", "ba", "-n", "10", "--m", "1",
                           "--k", "1,zz")
        assert code == 2
        assert "--k" in json.loads(err.strip())["error"]


class TestTable1:
    def test_runs(self, capsys, cycle_file, groups_file):
        code, out, _ = run(capsys, "table1", "--edges", cycle_file, "--groups", groups_file,
                           "--rewire-trials", "5", "--seed", "2")
        assert code == 0
        rec = json.loads(out)
        assert rec["phi_over_n_true"] == 1.0
        assert rec["rewire_trials"] == 5


class TestDeterminism:
    def test_byte_identical_outputs(self, capsys, tmp_path, cycle_file, groups_file):
        pairs = []
        for i in (1, 2):
            out = tmp_path / f"a{i}"
            out.mkdir()
            run(capsys, "compute", cycle_file, "--groups", groups_file, "--numerical",
                "--seed", "9", "--out", str(out / "c.json"))
            run(capsys, "generate", "--model", "ba", "-n", "15", "--m", "2",
                "--seed", "9", "--out", str(out / "g.csv"))
            run(capsys, "rewire", cycle_file, "--seed", "9", "--out", str(out / "r.csv"))
            run(capsys, "experiment", "--model", "ws", "-n", "12", "--ring-degree", "4",
                "--p", "0.25", "--k", "1,4", "--trials", "3", "--seed", "9",
                "--out", str(out / "e.csv"))
            run(capsys, "table1", "--edges", cycle_file, "--groups", groups_file,
                "--rewire-trials", "4", "--seed", "9", "--out", str(out / "t.json"))
            pairs.append(out)
        a, b = pairs
        for name in ("c.json", "g.csv", "r.csv", "e.csv", "e_summary.csv", "t.json"):
            assert (a / name).read_bytes() == (b / name).read_bytes(), name
