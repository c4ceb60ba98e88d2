import json
import subprocess
import sys

import pytest
from hypothesis import given

from dgr import build_digraph, complete_graph, directed_cycle, remoteness
from dgr.cli import run
from dgr.io import (
    digraph_from_edge_list,
    digraph_to_dot,
    digraph_to_edge_list,
    graph_from_edge_list,
    graph_to_edge_list,
)

from conftest import digraphs
from test_core import dpk_2121


class TestEdgeListFormat:
    def test_roundtrip_digraph(self):
        D = dpk_2121()
        assert digraph_from_edge_list(digraph_to_edge_list(D)) == D

    @given(digraphs())
    def test_roundtrip_property(self, D):
        assert digraph_from_edge_list(digraph_to_edge_list(D)) == D

    def test_comments_and_blanks(self):
        text = "# a comment\n\n3\n# another\n0 1\n1 2\n2 0\n"
        D = digraph_from_edge_list(text)
        assert D == build_digraph(3, [(0, 1), (1, 2), (2, 0)])

    def test_graph_roundtrip(self):
        G = complete_graph(4)
        assert graph_from_edge_list(graph_to_edge_list(G)) == G

    def test_malformed_header(self):
        with pytest.raises(ValueError, match="order"):
            digraph_from_edge_list("x\n0 1\n")

    def test_malformed_pair(self):
        with pytest.raises(ValueError, match="expected"):
            digraph_from_edge_list("3\n0 1 2\n")

    def test_empty(self):
        with pytest.raises(ValueError, match="empty"):
            digraph_from_edge_list("# nothing\n")

    def test_dot_output(self):
        dot = digraph_to_dot(build_digraph(2, [(0, 1), (1, 0)]))
        assert "digraph" in dot
        assert "0 -> 1;" in dot and "1 -> 0;" in dot


class TestCLI:
    def _write_cycle(self, tmp_path, n=5):
        path = tmp_path / "cycle.edges"
        path.write_text(digraph_to_edge_list(directed_cycle(n)))
        return str(path)

    def test_compute_remoteness(self, tmp_path, capsys):
        code = run(["compute", "--input", self._write_cycle(tmp_path), "--invariant", "remoteness"])
        assert code == 0
        assert capsys.readouterr().out == "5/2 (= 2.5) at vertex 0\n"

    def test_compute_json(self, tmp_path, capsys):
        code = run([
            "compute", "--input", self._write_cycle(tmp_path),
            "--invariant", "remoteness", "--format", "json",
        ])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["num"] == 5 and doc["den"] == 2 and doc["witness"] == 0

    def test_compute_profile_requires_vertex(self, tmp_path, capsys):
        code = run(["compute", "--input", self._write_cycle(tmp_path), "--invariant", "profile"])
        assert code == 1

    def test_compute_profile(self, tmp_path, capsys):
        code = run([
            "compute", "--input", self._write_cycle(tmp_path),
            "--invariant", "profile", "--vertex", "0",
        ])
        assert code == 0
        assert capsys.readouterr().out == "(1, 1, 1, 1, 1)\n"

    def test_compute_kappa_lambda_eulerian(self, tmp_path, capsys):
        path = self._write_cycle(tmp_path, 4)
        assert run(["compute", "--input", path, "--invariant", "kappa"]) == 0
        assert capsys.readouterr().out.startswith("1 ")
        assert run(["compute", "--input", path, "--invariant", "lambda"]) == 0
        assert capsys.readouterr().out.startswith("1 ")
        assert run(["compute", "--input", path, "--invariant", "eulerian"]) == 0
        assert capsys.readouterr().out == "true\n"

    def test_compute_missing_file(self, capsys):
        assert run(["compute", "--input", "/nonexistent.edges", "--invariant", "diam"]) == 2

    def test_compute_not_strong(self, tmp_path, capsys):
        path = tmp_path / "bad.edges"
        path.write_text("3\n0 1\n1 2\n")
        assert run(["compute", "--input", str(path), "--invariant", "remoteness"]) == 2

    def test_compute_undirected(self, tmp_path, capsys):
        path = tmp_path / "p3.edges"
        path.write_text("3\n0 1\n1 2\n")
        code = run([
            "compute", "--input", str(path), "--invariant", "remoteness", "--undirected",
        ])
        assert code == 0
        assert capsys.readouterr().out == "3/2 (= 1.5) at vertex 0\n"

    def test_generate_dpk_selector(self, capsys):
        assert run(["generate", "dpk", "--n", "6", "--m", "20", "--kappa", "2"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "6"
        assert len(lines) == 26

    def test_generate_explicit_params_dot(self, capsys):
        assert run([
            "generate", "dpk", "--kappa", "2", "--ell", "1", "--a", "2", "--b", "1",
            "--format", "dot",
        ]) == 0
        assert capsys.readouterr().out.startswith("digraph")

    def test_generate_roundtrip_through_compute(self, tmp_path, capsys):
        out = tmp_path / "dpk.edges"
        assert run([
            "generate", "dpk", "--n", "6", "--m", "20", "--kappa", "2",
            "--output", str(out),
        ]) == 0
        assert run(["compute", "--input", str(out), "--invariant", "remoteness"]) == 0
        assert capsys.readouterr().out == "9/5 (= 1.8) at vertex 0\n"

    def test_generate_pklambda(self, capsys):
        assert run([
            "generate", "pklambda", "--lambda", "2", "--variant", "A",
            "--k", "1", "--a", "2", "--b", "1",
        ]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "6" and len(lines) == 11

    def test_generate_profile(self, capsys):
        assert run(["generate", "profile", "--blocks", "1,2,1"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "4" and len(lines) == 11

    def test_generate_infeasible(self, capsys):
        assert run(["generate", "dpk", "--n", "6", "--m", "26", "--kappa", "2"]) == 2

    def test_bound_text(self, capsys):
        assert run(["bound", "--bound", "size_digraph", "--n", "5", "--m", "10"]) == 0
        assert capsys.readouterr().out.startswith("7/2 (= 3.5)")

    def test_bound_json(self, capsys):
        assert run([
            "bound", "--bound", "kappa_digraph", "--n", "6", "--m", "25",
            "--kappa", "2", "--format", "json",
        ]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["value"] == {"num": 9, "den": 5, "decimal": 1.8}
        assert doc["m_star"] == 25

    def test_bound_missing_param(self, capsys):
        assert run(["bound", "--bound", "kappa_graph", "--n", "6", "--m", "5"]) == 1

    def test_verify_clean_exit_zero(self, capsys, tmp_path):
        out = tmp_path / "report.json"
        code = run([
            "verify", "--check", "digraph_order", "--order", "4",
            "--format", "json", "--output", str(out),
        ])
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["violations"] == [] and doc["instances"] == 1606

    def test_verify_csv_one_row_per_size(self, capsys):
        assert run(["verify", "--check", "size_digraph", "--order", "3", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "check_id,n,m,class,instances,skipped,violations,equality_instances"
        # strong digraphs on 3 vertices have sizes 3..6: one row per size
        sizes = [int(line.split(",")[2]) for line in lines[1:]]
        assert sizes == [3, 4, 5, 6]
        assert sum(int(line.split(",")[4]) for line in lines[1:]) == 18

    def test_verify_exit_three_on_violation(self, capsys, monkeypatch):
        import dgr.cli as cli_mod
        from dgr.verifier import CheckReport, Counterexample

        fake = CheckReport(
            check_id="universal_bound:digraph_order:n=4:class=strong",
            spec={"order": 4, "class": "strong"},
            instances_examined=1,
            violations=[
                Counterexample("4\n0 1\n", "3/1", 1, None, None, "2/1", "1/1", "ff")
            ],
        )
        monkeypatch.setattr(cli_mod.verifier, "check_universal_bounds", lambda *a, **k: [fake])
        assert run(["verify", "--check", "digraph_order", "--order", "4"]) == 3
        assert "VIOLATION" in capsys.readouterr().out

    def test_verify_sampled(self, capsys):
        code = run([
            "verify", "--check", "digraph_order", "--order", "6",
            "--samples", "100", "--seed", "5",
        ])
        assert code == 0

    def test_verify_extremal_uniqueness(self, capsys):
        assert run([
            "verify", "--check", "extremal_uniqueness", "--order", "4",
            "--m", "9", "--kappa", "1",
        ]) == 0

    def test_verify_lemma(self, capsys):
        assert run(["verify", "--check", "lemma_monotonicity", "--order", "7"]) == 0

    def test_verify_infeasible_order(self, capsys):
        assert run(["verify", "--check", "digraph_order", "--order", "6"]) == 2

    def test_audit(self, capsys):
        assert run(["audit", "--n", "6", "--kappa", "2", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        items = [r["item"] for r in doc["audit"]]
        assert "family_max" in items

    def test_usage_error_exit_one(self, capsys):
        assert run(["bound", "--bound", "no_such", "--n", "5", "--m", "1"]) == 1

    def test_console_entrypoint(self):
        result = subprocess.run(
            [sys.executable, "-m", "dgr.cli", "bound", "--bound", "order", "--n", "8"],
            capture_output=True, text=True,
        )
        assert result.returncode == 0
        assert result.stdout.startswith("4 (= 4)")


class TestWorkersEnv:
    def test_env_default(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("DGR_WORKERS", "2")
        code = run(["verify", "--check", "digraph_order", "--order", "3", "--format", "json"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["instances"] == 18
