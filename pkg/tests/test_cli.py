"""Command-line surface: dispatch, exit codes, caching, and determinism."""

import json

import pytest

from edgeglue.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDispatch:
    def test_ex_subcommand(self, capsys):
        code, out, _ = run(capsys, "ex", "--n", "4", "--forbid", "c4")
        assert code == 0
        payload = json.loads(out)
        assert payload["value"] == 4
        assert payload["witness"]

    def test_zex_subcommand(self, capsys):
        code, out, _ = run(capsys, "zex", "--m", "3", "--n", "3", "--pattern", "c4")
        assert code == 0
        assert json.loads(out)["value"] == 6

    def test_glue_c4_c4_single_line(self, capsys):
        code, out, _ = run(capsys, "glue", "--a", "c4", "--ea", "0", "--b", "c4", "--eb", "0")
        assert code == 0
        assert len(out.strip().splitlines()) == 1

    def test_count_subcommand(self, capsys):
        code, out, _ = run(capsys, "count", "--pattern", "c4", "--host", "k2,3")
        assert code == 0
        payload = json.loads(out)
        assert payload == {"embeddings": 24, "copies": 3}

    def test_exponent_prints_rational_string(self, capsys):
        code, out, _ = run(
            capsys, "exponent", "--alpha", "1/2", "--pattern", "c4", "--root-edge", "0"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload == {"alpha_prime": "1/2", "branch": 2}

    def test_threshold_reports_branches(self, capsys):
        code, out, _ = run(
            capsys,
            "threshold", "--n", "100", "--alpha", "1/2", "--gamma", "1",
            "--pattern", "c4", "--root-edge", "0",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["dominating_branch"] == 2
        assert payload["branch1_n_exponent"] == "-2/3"
        assert payload["branch2_n_exponent"] == "-1/2"

    def test_ratio_rows(self, capsys):
        code, out, _ = run(capsys, "ratio", "--pattern", "c4", "--sizes", "4,5")
        assert code == 0
        rows = [json.loads(line) for line in out.strip().splitlines()]
        assert rows[0]["ratio"] == "4/9" and rows[1]["ratio"] == "1/2"

    def test_threads_flag_accepted(self, capsys):
        code, _, _ = run(capsys, "--threads", "4", "ex", "--n", "4", "--forbid", "c4")
        assert code == 0


class TestExitCodes:
    def test_domain_error_is_exit_1_with_json_stderr(self, capsys):
        code, _, err = run(capsys, "ex", "--n", "99", "--forbid", "c4")
        assert code == 1
        payload = json.loads(err)
        assert payload["error"] == "SizeExceeded"

    def test_parse_error_is_exit_1(self, capsys):
        code, _, err = run(capsys, "count", "--pattern", "??bogus??", "--host", "c4")
        assert code == 1
        assert json.loads(err)["error"] == "ParseError"

    def test_usage_error_is_exit_2(self, capsys):
        assert run(capsys, "count", "--pattern", "c4")[0] == 2
        assert run(capsys, "no-such-command")[0] == 2

    def test_seed_is_required_for_randomized_commands(self, capsys):
        code, _, _ = run(capsys, "construct", "--kind", "gnp", "--n", "5", "--p", "1/2")
        assert code == 2


class TestSeededCommands:
    def test_construct_echoes_seed_and_is_deterministic(self, capsys):
        args = ("construct", "--kind", "gnp", "--n", "10", "--p", "1/2", "--seed", "11")
        code, out1, _ = run(capsys, *args)
        assert code == 0
        header = json.loads(out1.splitlines()[0])
        assert header["seed"] == 11 and header["n"] == 10
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_deletion_construct_provenance(self, capsys):
        code, out, _ = run(
            capsys,
            "construct", "--kind", "deletion", "--n", "12",
            "--forbid", "c4", "--seed", "3",
        )
        assert code == 0
        header = json.loads(out.splitlines()[0])
        assert header["forbidden"] == "c4" and header["seed"] == 3
        assert 0 < header["p"] < 1

    def test_supersat_round_trips_through_verify(self, capsys, tmp_path):
        code, out, _ = run(
            capsys,
            "supersat", "--host", "k3,3", "--pattern", "c4", "--root-edge", "0",
            "--per-edge-cap", "2", "--seed", "1",
        )
        assert code == 0
        assert json.loads(out.splitlines()[0])["seed"] == 1
        fam_file = tmp_path / "family.json"
        fam_file.write_text(out.splitlines()[1])
        code, out2, _ = run(
            capsys, "verify", "--family", str(fam_file), "--per-edge-cap", "2"
        )
        assert code == 0
        report = json.loads(out2)
        assert report["edge_violations"] == 0 and report["pair_violations"] == 0


class TestCache:
    def test_compute_store_recompute_hits_cache(self, capsys, tmp_path):
        store = str(tmp_path / "records.jsonl")
        args = ("ex", "--n", "5", "--forbid", "c4", "--store", store)
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        first, second = json.loads(out1), json.loads(out2)
        assert first["method"] == "branch-and-bound"
        assert second["method"] == "cached"
        assert first["value"] == second["value"] == 6

    def test_cache_listing(self, capsys, tmp_path):
        store = str(tmp_path / "records.jsonl")
        run(capsys, "ex", "--n", "4", "--forbid", "c4", "--store", store)
        run(capsys, "zex", "--m", "2", "--n", "2", "--pattern", "c4", "--store", store)
        code, out, _ = run(capsys, "cache", "--store", store)
        assert code == 0
        kinds = [json.loads(line)["kind"] for line in out.strip().splitlines()]
        assert kinds == ["turan", "zarankiewicz"]
        code, out, _ = run(capsys, "cache", "--store", store, "--kind", "turan")
        assert [json.loads(l)["kind"] for l in out.strip().splitlines()] == ["turan"]

    def test_store_env_variable(self, capsys, tmp_path, monkeypatch):
        store = str(tmp_path / "records.jsonl")
        monkeypatch.setenv("EDGEGLUE_STORE", store)
        run(capsys, "ex", "--n", "4", "--forbid", "c4")
        _, out, _ = run(capsys, "ex", "--n", "4", "--forbid", "c4")
        assert json.loads(out)["method"] == "cached"

    def test_cache_without_store_is_domain_error(self, capsys, monkeypatch):
        monkeypatch.delenv("EDGEGLUE_STORE", raising=False)
        code, _, err = run(capsys, "cache")
        assert code == 1 and json.loads(err)["error"] == "EdgeGlueError"
