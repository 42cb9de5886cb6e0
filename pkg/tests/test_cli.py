from __future__ import annotations

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from drfwl import oracle
from drfwl.cli import main
from drfwl.graph import gen_cycle, gen_disjoint_union, gen_petersen, parse_edge_list

SRC_DIR = str(Path(__file__).resolve().parents[1] / "src")


def run_cli(*args: str, env_extra: dict | None = None):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC_DIR + os.pathsep + env.get("PYTHONPATH", "")
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [sys.executable, "-m", "drfwl", *args],
        capture_output=True,
        text=True,
        env=env,
    )
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture
def c6_file(tmp_path):
    p = tmp_path / "c6.el"
    p.write_text(gen_cycle(6).to_edge_list())
    return str(p)


@pytest.fixture
def petersen_file(tmp_path):
    p = tmp_path / "petersen.el"
    p.write_text(gen_petersen().to_edge_list())
    return str(p)


class TestCount:
    def test_json_schema_and_values(self, c6_file):
        code, out, _ = run_cli("count", "--motifs", "cycle3,cycle6", c6_file)
        assert code == 0
        report = json.loads(out)
        assert report["n"] == 6
        assert report["substructures"]["cycle3"]["graph_level"] == 0
        assert report["substructures"]["cycle6"]["graph_level"] == 1
        assert report["substructures"]["cycle6"]["per_node"] == [1] * 6

    def test_cycle7_at_d2_is_capability_error(self, c6_file):
        code, _, err = run_cli("count", "--motifs", "cycle7", "--d", "2", c6_file)
        assert code == 3
        assert "cycle7" in err

    def test_clique4_closed_form_refused(self, c6_file):
        code, _, _ = run_cli("count", "--motifs", "clique4", c6_file)
        assert code == 3

    def test_parse_error_exit_2(self, tmp_path):
        bad = tmp_path / "bad.el"
        bad.write_text("0 zero\n")
        code, _, err = run_cli("count", str(bad))
        assert code == 2
        assert "line 1" in err

    def test_missing_file_exit_2(self):
        code, _, _ = run_cli("count", "/nonexistent/x.el")
        assert code == 2

    def test_matches_oracle_subcommand(self, petersen_file):
        code1, out1, _ = run_cli("count", "--motifs", "cycle5", "--d", "2", petersen_file)
        code2, out2, _ = run_cli("oracle", "--motifs", "cycle5", petersen_file)
        assert code1 == code2 == 0
        a = json.loads(out1)["substructures"]["cycle5"]
        b = json.loads(out2)["substructures"]["cycle5"]
        assert a == b

    def test_text_format(self, c6_file):
        code, out, _ = run_cli("count", "--motifs", "cycle6", "--format", "text", c6_file)
        assert code == 0
        assert "cycle6" in out

    def test_threads_flag_stable_output(self, petersen_file):
        _, out1, _ = run_cli("count", "--threads", "1", petersen_file)
        _, out2, _ = run_cli("count", "--threads", "4", petersen_file)
        assert out1 == out2

    def test_threads_env_fallback(self, petersen_file):
        _, out1, _ = run_cli("count", petersen_file, env_extra={"DRFWL_THREADS": "3"})
        _, out2, _ = run_cli("count", "--threads", "1", petersen_file)
        assert out1 == out2


class TestOracle:
    def test_clique4_allowed(self, tmp_path):
        p = tmp_path / "k4.el"
        p.write_text("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
        code, out, _ = run_cli("oracle", "--motifs", "clique4", str(p))
        assert code == 0
        assert json.loads(out)["substructures"]["clique4"]["graph_level"] == 1


class TestDistinguish:
    def test_wl1_indistinguishable(self, tmp_path):
        a = tmp_path / "a.el"
        b = tmp_path / "b.el"
        a.write_text(gen_disjoint_union([gen_cycle(3), gen_cycle(3)]).to_edge_list())
        b.write_text(gen_cycle(6).to_edge_list())
        code, out, _ = run_cli("distinguish", "--method", "wl1", "--format", "text", str(a), str(b))
        assert code == 0 and out.startswith("INDISTINGUISHABLE")
        code, out, _ = run_cli("distinguish", "--method", "drfwl", "--d", "1", "--format", "text", str(a), str(b))
        assert code == 0 and out.startswith("DISTINGUISHED")

    def test_json_verdict(self, tmp_path):
        a = tmp_path / "a.el"
        a.write_text(gen_cycle(8).to_edge_list())
        code, out, _ = run_cli("distinguish", str(a), str(a))
        payload = json.loads(out)
        assert code == 0
        assert payload["distinguished"] is False
        assert payload["iterations"] >= 1

    def test_fwl2_cap_exit_3(self, tmp_path):
        a = tmp_path / "a.el"
        a.write_text(gen_cycle(300).to_edge_list())
        code, _, _ = run_cli("distinguish", "--method", "fwl2", str(a), str(a))
        assert code == 3

    def test_mask_accepted(self, tmp_path):
        a = tmp_path / "a.el"
        a.write_text(gen_cycle(8).to_edge_list())
        code, out, _ = run_cli(
            "distinguish", "--method", "drfwl", "--d", "2", "--mask", "2,2,2", str(a), str(a)
        )
        assert code == 0 and not json.loads(out)["distinguished"]

    def test_bad_mask_exit_2(self, tmp_path):
        a = tmp_path / "a.el"
        a.write_text(gen_cycle(8).to_edge_list())
        code, _, _ = run_cli(
            "distinguish", "--method", "drfwl", "--mask", "0,0,2", str(a), str(a)
        )
        assert code == 2


class TestGen:
    def test_cycle_file(self, tmp_path):
        out = tmp_path / "c6.el"
        code, _, _ = run_cli("gen", "cycle", "6", "--out", str(out))
        assert code == 0
        g = parse_edge_list(out.read_text())
        assert (g.n, g.m) == (6, 6)

    def test_er_deterministic(self, tmp_path):
        o1, o2 = tmp_path / "a.el", tmp_path / "b.el"
        run_cli("gen", "er", "30", "0.15", "--seed", "5", "--out", str(o1))
        run_cli("gen", "er", "30", "0.15", "--seed", "5", "--out", str(o2))
        assert o1.read_text() == o2.read_text()

    def test_separation_family(self, tmp_path):
        code, out, _ = run_cli(
            "gen", "separation", "--d", "2", "--out", str(tmp_path / "sep")
        )
        assert code == 0
        paths = [Path(line) for line in out.splitlines()]
        assert len(paths) == 2
        double = parse_edge_list(paths[0].read_text())
        single = parse_edge_list(paths[1].read_text())
        assert (double.n, double.m) == (14, 14)
        assert (single.n, single.m) == (14, 14)
        assert oracle.oracle_graph_count(double, "cycle7") == 2
        assert oracle.oracle_graph_count(single, "cycle7") == 0


class TestBench:
    def test_csv_and_space_bound(self, tmp_path):
        out = tmp_path / "bench.csv"
        code = main([
            "bench", "--sizes", "100,200", "--degrees", "4",
            "--threads", "1", "--output", str(out),
        ])
        assert code == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "n,deg,tuple_count,build_ms,iter_ms"
        assert len(lines) == 3
        for line in lines[1:]:
            n, deg, tuples, _, _ = line.split(",")
            n, deg, tuples = int(n), int(deg), int(tuples)
            assert tuples <= n * (1 + deg + deg * (deg - 1))

    def test_doubling_n_doubles_tuples_on_cycles(self):
        # cycle graphs are 2-regular: tuple count is exactly n * (1 + 2d)
        from drfwl.tuples import build_index

        t1 = build_index(gen_cycle(100), 2).tuple_count
        t2 = build_index(gen_cycle(200), 2).tuple_count
        assert t2 == 2 * t1 == 200 * 5
