"""CLI subcommands: output shapes, exit codes, and byte-level reproducibility."""

from __future__ import annotations

import json
import subprocess

import pytest

from krsfree import complete_bipartite, write_hypergraph, write_partition
from krsfree.cli import (
    EXIT_BOUND_VIOLATION,
    EXIT_CAPACITY,
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    main,
)


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def k24_file(tmp_path):
    g, spec = complete_bipartite(2, 4)
    path = tmp_path / "k24.txt"
    write_hypergraph(g, str(path))
    write_partition(spec, str(path) + ".parts")
    return str(path)


class TestConstruct:
    def test_graph_header(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "--k", "2", "--r", "2", "--n", "3")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "2 12 27"
        assert "m=27 q=3 parts=3,9" in out

    def test_hypergraph_header(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "--k", "3", "--r", "2", "--n", "2")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "3 22 128"
        assert "m=128 q=7 parts=2,4,16" in out

    def test_writes_files(self, capsys, tmp_path):
        out_path = tmp_path / "host.txt"
        code, out, _ = run_cli(
            capsys, "construct", "--k", "2", "--r", "2", "--n", "3", "--out", str(out_path)
        )
        assert code == EXIT_OK
        text = out_path.read_text()
        assert text.splitlines()[0] == "2 12 27"
        parts_text = (tmp_path / "host.txt.parts").read_text()
        assert len(parts_text.splitlines()) == 2

    def test_zero_n_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "construct", "--k", "2", "--r", "2", "--n", "0")
        assert code == EXIT_USAGE
        assert "usage error" in err

    def test_capacity_exit(self, capsys):
        code, _, err = run_cli(capsys, "construct", "--k", "3", "--r", "3", "--n", "10")
        assert code == EXIT_CAPACITY
        assert "capacity error" in err


class TestCount:
    def test_k33(self, capsys, tmp_path):
        g, _ = complete_bipartite(3, 3)
        path = tmp_path / "k33.txt"
        write_hypergraph(g, str(path))
        code, out, _ = run_cli(capsys, "count", "--input", str(path), "--r", "2")
        assert code == EXIT_OK
        lines = dict(ln.split() for ln in out.splitlines())
        assert lines["copies"] == "9"
        assert lines["matchings"] == "18"
        assert lines["copy_bound"] == "144"
        assert lines["copy_bound_relaxed"] == "162"
        assert lines["bounds"] == "PASS"

    def test_k24_copies(self, capsys, k24_file):
        code, out, _ = run_cli(capsys, "count", "--input", k24_file, "--r", "2")
        assert code == EXIT_OK
        assert "copies 6" in out

    def test_empty_graph(self, capsys, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("2 5 0\n")
        code, out, _ = run_cli(capsys, "count", "--input", str(path), "--r", "2")
        assert code == EXIT_OK
        assert "copies 0" in out and "PASS" in out

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "count", "--input", "/nonexistent/g.txt", "--r", "2")
        assert code == EXIT_IO
        assert "error" in err

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("2 5\n")
        code, _, err = run_cli(capsys, "count", "--input", str(path), "--r", "2")
        assert code == EXIT_IO

    def test_missing_r(self, capsys, k24_file):
        code, _, _ = run_cli(capsys, "count", "--input", k24_file)
        assert code == EXIT_USAGE

    def test_both_input_sources_rejected(self, capsys, k24_file):
        code, _, _ = run_cli(
            capsys, "count", "--input", k24_file, "--construct", "--k", "2", "--r", "2", "--n", "2"
        )
        assert code == EXIT_USAGE


class TestExtract:
    def test_stdout_line(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "extract", "--construct", "--k", "2", "--r", "2", "--n", "3",
            "--trials", "5", "--seed", "7",
        )
        assert code == EXIT_OK
        assert out.startswith("trials 5 mean ")
        assert "guarantee 2.25" in out

    def test_csv_and_json_outputs(self, capsys, tmp_path):
        prefix = str(tmp_path / "run")
        code, _, _ = run_cli(
            capsys,
            "extract", "--construct", "--k", "2", "--r", "2", "--n", "3",
            "--trials", "4", "--seed", "3", "--out", prefix,
        )
        assert code == EXIT_OK
        csv_text = (tmp_path / "run.csv").read_text()
        assert csv_text.splitlines()[0].startswith("trial,seed,p,")
        assert len(csv_text.splitlines()) == 5
        payload = json.loads((tmp_path / "run.json").read_text())
        assert payload["schema"] == "v1"
        assert payload["num_trials"] == 4

    def test_byte_identical_reruns_and_jobs(self, capsys, tmp_path):
        outputs = []
        for tag, jobs in (("a", "1"), ("b", "1"), ("c", "3")):
            prefix = str(tmp_path / tag)
            code, _, _ = run_cli(
                capsys,
                "extract", "--construct", "--k", "2", "--r", "2", "--n", "3",
                "--trials", "12", "--seed", "41", "--jobs", jobs, "--out", prefix,
            )
            assert code == EXIT_OK
            outputs.append((tmp_path / (tag + ".csv")).read_bytes())
        assert outputs[0] == outputs[1] == outputs[2]

    def test_empty_host_single_row(self, capsys, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("2 4 0\n")
        prefix = str(tmp_path / "e")
        code, out, _ = run_cli(
            capsys,
            "extract", "--input", str(path), "--r", "2", "--trials", "1", "--out", prefix,
        )
        assert code == EXIT_OK
        rows = (tmp_path / "e.csv").read_text().splitlines()
        assert len(rows) == 2
        assert rows[1].split(",")[6] == "0"

    def test_bad_trials(self, capsys):
        code, _, _ = run_cli(
            capsys,
            "extract", "--construct", "--k", "2", "--r", "2", "--n", "2", "--trials", "0",
        )
        assert code == EXIT_USAGE


class TestOracle:
    def test_k24_optimum(self, capsys, k24_file):
        code, out, _ = run_cli(capsys, "oracle", "--input", k24_file, "--r", "2")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["optimum"] == 5
        assert payload["proof_of_optimality"] is True
        assert len(payload["witness_edges"]) == 5

    def test_oriented_needs_parts(self, capsys, k24_file):
        code, _, _ = run_cli(capsys, "oracle", "--input", k24_file, "--r", "2", "--s", "2")
        assert code == EXIT_USAGE

    def test_oriented_with_parts(self, capsys, k24_file):
        code, out, _ = run_cli(
            capsys,
            "oracle", "--input", k24_file, "--parts", k24_file + ".parts",
            "--r", "2", "--s", "2", "--orientation", "proof",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["optimum"] == 5

    def test_budget_exhaustion_still_exits_zero(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "oracle", "--construct", "--k", "2", "--r", "2", "--n", "3", "--budget", "2",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["proof_of_optimality"] is False


class TestCertify:
    def test_full_k24_proves(self, capsys):
        code, out, _ = run_cli(capsys, "certify", "--construct", "--k", "2", "--r", "2", "--n", "2")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["lhs"] == 4
        assert payload["rhs"] == 2
        assert payload["verdict"] == "proves-containment"
        assert payload["average_degree"] == "2"

    def test_subgraph_inconclusive(self, capsys, k24_file, tmp_path):
        sub = tmp_path / "sub.txt"
        sub.write_text("2 6 5\n0 2\n1 2\n0 3\n1 4\n0 5\n")
        code, out, _ = run_cli(
            capsys,
            "certify", "--input", k24_file, "--parts", k24_file + ".parts",
            "--r", "2", "--s", "2", "--subgraph", str(sub),
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["lhs"] == 1
        assert payload["verdict"] == "inconclusive"

    def test_needs_partition(self, capsys, k24_file):
        code, _, _ = run_cli(capsys, "certify", "--input", k24_file, "--r", "2")
        assert code == EXIT_USAGE


class TestBounds:
    def test_table_shape_and_monotonicity(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--r", "2", "--n", "3")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "n,m,guarantee,upper_bound,oracle_optimum,certified"
        assert len(lines) == 4
        rows = [ln.split(",") for ln in lines[1:]]
        ms = [int(row[1]) for row in rows]
        guarantees = [float(row[2]) for row in rows]
        uppers = [float(row[3]) for row in rows]
        opts = [int(row[4]) for row in rows if row[4]]
        assert ms == sorted(ms) and ms == [1, 8, 27]
        assert guarantees == sorted(guarantees)
        assert uppers == sorted(uppers)
        assert opts == sorted(opts)
        for row in rows:
            if row[4]:
                assert float(row[2]) <= int(row[4]) <= float(row[3]) + 1e-9

    def test_writes_file(self, capsys, tmp_path):
        path = tmp_path / "table.csv"
        code, out, _ = run_cli(capsys, "bounds", "--r", "2", "--n", "2", "--out", str(path))
        assert code == EXIT_OK
        assert out == ""
        assert path.read_text().splitlines()[0].startswith("n,m,")

    def test_usage_errors(self, capsys):
        assert run_cli(capsys, "bounds", "--r", "1", "--n", "2")[0] == EXIT_USAGE
        assert run_cli(capsys, "bounds", "--r", "3", "--s", "2", "--n", "2")[0] == EXIT_USAGE


class TestParserBehaviour:
    def test_unknown_flag(self, capsys):
        code, _, _ = run_cli(capsys, "count", "--frobnicate")
        assert code == EXIT_USAGE

    def test_unknown_command(self, capsys):
        code, _, _ = run_cli(capsys, "transmogrify")
        assert code == EXIT_USAGE

    def test_no_command(self, capsys):
        code, _, _ = run_cli(capsys)
        assert code == EXIT_USAGE

    def test_help_exits_zero(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--help"])
        assert exc.value.code == 0
        out = capsys.readouterr().out
        assert "construct" in out and "oracle" in out
        assert "Exit codes" in out

    def test_console_script_installed(self):
        proc = subprocess.run(
            ["krsfree", "construct", "--k", "2", "--r", "2", "--n", "3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[0] == "2 12 27"
