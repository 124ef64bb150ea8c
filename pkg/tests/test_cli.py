import json

import pytest

from assocmem.cli import main


def run_cli(argv):
    """Invoke the CLI in-process; argparse usage failures surface as SystemExit."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code)


@pytest.fixture
def workspace(tmp_path):
    mem = tmp_path / "mem.txt"
    mem.write_text("1 1 1 1\n1 -1 1 -1\n")
    weights = tmp_path / "w.json"
    assert run_cli(["train", "--memories", str(mem), "--out", str(weights)]) == 0
    return tmp_path, mem, weights


class TestTrain:
    def test_weight_file_matches_hand_computation(self, workspace):
        _, _, weights = workspace
        doc = json.loads(weights.read_text())
        assert doc["weights"] == [
            [0, 0, 2, 0],
            [0, 0, 0, 2],
            [2, 0, 0, 0],
            [0, 2, 0, 0],
        ]
        assert doc["kind"] == "weights"
        assert doc["config"]["seed"] is None
        assert doc["version"]

    def test_train_is_reproducible(self, workspace, tmp_path):
        _, mem, weights = workspace
        again = tmp_path / "again.json"
        assert run_cli(["train", "--memories", str(mem), "--out", str(again)]) == 0
        assert again.read_bytes() == weights.read_bytes()


class TestRecall:
    def test_synchronous_fixed_point(self, workspace, capsys):
        _, _, weights = workspace
        assert run_cli(["recall", "--weights", str(weights), "--state", "1,1,1,1"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["result"]["final"] == [1, 1, 1, 1]
        assert doc["result"]["converged"] is True

    def test_synchronous_two_cycle_surfaces_in_report(self, workspace, capsys):
        _, _, weights = workspace
        assert run_cli(["recall", "--weights", str(weights), "--state", "1,1,-1,1"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["result"]["converged"] is False
        cycle = doc["result"]["cycle"]
        assert cycle is not None and len(cycle) == 2
        assert sorted(cycle) == sorted([[1, 1, -1, 1], [-1, 1, 1, 1]])

    def test_async_cyclic(self, workspace, capsys):
        _, _, weights = workspace
        code = run_cli(
            ["recall", "--weights", str(weights), "--state", "1,1,-1,1",
             "--async", "--schedule", "cyclic"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["result"]["final"] == [-1, 1, -1, 1]
        trace = doc["result"]["energy_trace"]
        assert all(b <= a for a, b in zip(trace, trace[1:]))

    def test_async_random_requires_seed(self, workspace):
        _, _, weights = workspace
        assert run_cli(["recall", "--weights", str(weights), "--state", "1,1,1,1", "--async"]) == 5

    def test_state_dimension_mismatch(self, workspace):
        _, _, weights = workspace
        assert run_cli(["recall", "--weights", str(weights), "--state", "1,1,1"]) == 4

    def test_bad_state_token(self, workspace):
        _, _, weights = workspace
        assert run_cli(["recall", "--weights", str(weights), "--state", "1,2,1,1"]) == 5


class TestSpread:
    def test_single_neuron_seed_retrieves_first_memory(self, workspace, capsys):
        _, mem, weights = workspace
        code = run_cli(
            ["spread", "--weights", str(weights), "--start", "1:+1", "--memories", str(mem)]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        result = doc["result"]
        assert result["final"] == [1, 1, 1, 1]
        assert result["matched_memory"] == 1
        assert result["fixed_point"] is True
        assert result["consistency_flags"] == []

    def test_two_neuron_start(self, workspace, capsys):
        _, mem, weights = workspace
        code = run_cli(
            ["spread", "--weights", str(weights), "--start", "1:+1,2:-1", "--memories", str(mem)]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["result"]["final"] == [1, -1, 1, -1]
        assert doc["result"]["matched_memory"] == 2

    def test_proximity_file(self, workspace, capsys):
        tmp, _, weights = workspace
        prox = tmp / "p.txt"
        prox.write_text("0 4 1 5\n4 0 2 6\n1 2 0 3\n5 6 3 0\n")
        code = run_cli(
            ["spread", "--weights", str(weights), "--proximity", str(prox), "--start", "3:+1"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["result"]["order"] == [3, 1, 2, 4]
        assert doc["result"]["matched_memory"] is None  # no memory file given

    def test_bad_start_syntax(self, workspace):
        _, _, weights = workspace
        assert run_cli(["spread", "--weights", str(weights), "--start", "0:+1"]) == 5
        assert run_cli(["spread", "--weights", str(weights), "--start", "1=+1"]) == 5

    def test_start_out_of_range(self, workspace):
        _, _, weights = workspace
        assert run_cli(["spread", "--weights", str(weights), "--start", "9:+1"]) == 5


class TestFixedPoints:
    def test_census(self, workspace, capsys):
        _, mem, weights = workspace
        code = run_cli(["fixed-points", "--weights", str(weights), "--memories", str(mem)])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        result = doc["result"]
        assert result["count"] == 4
        assert result["census"] == {
            "stored": 2,
            "complement": 2,
            "spurious": 0,
            "labels": ["complement", "complement", "stored", "stored"],
        }
        assert result["complement_asymmetry"]["failures"] == []

    def test_limit_too_small(self, workspace):
        _, _, weights = workspace
        assert run_cli(["fixed-points", "--weights", str(weights), "--limit", "3"]) == 5


class TestCapacity:
    def test_runs_and_reports(self, tmp_path, capsys):
        code = run_cli(
            ["capacity", "--n", "30", "--m-list", "1,3", "--trials", "50", "--seed", "9"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        rows = doc["result"]["rows"]
        assert rows[0]["m"] == 1
        assert rows[0]["per_bit_instability"] == 0.0
        assert doc["config"]["seed"] == 9

    def test_byte_identical_reruns(self, tmp_path):
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        argv = ["capacity", "--n", "30", "--m-list", "2,4", "--trials", "50", "--seed", "4"]
        assert run_cli(argv + ["--out", str(out1)]) == 0
        assert run_cli(argv + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_parallel_byte_identical(self, tmp_path):
        serial, threaded = tmp_path / "s.json", tmp_path / "t.json"
        base = ["capacity", "--n", "30", "--m-list", "2,4", "--trials", "50", "--seed", "4"]
        assert run_cli(base + ["--workers", "1", "--out", str(serial)]) == 0
        assert run_cli(base + ["--workers", "3", "--out", str(threaded)]) == 0
        assert serial.read_bytes() == threaded.read_bytes()

    def test_missing_seed_is_usage_error(self):
        assert run_cli(["capacity", "--n", "30", "--m-list", "2", "--trials", "50"]) == 2

    def test_bad_m_list(self):
        assert run_cli(["capacity", "--n", "30", "--m-list", "2,x", "--trials", "50", "--seed", "1"]) == 5


class TestCollapse:
    def test_sampling_report(self, capsys):
        code = run_cli(["collapse", "--amps", "0.6,0.8", "--samples", "1000", "--seed", "3"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        result = doc["result"]
        assert result["probabilities"] == [pytest.approx(0.36), pytest.approx(0.64)]
        assert sum(result["counts"]) == 1000
        assert len(result["samples"]) == 1000

    def test_sampling_reruns_identical(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        argv = ["collapse", "--amps", "0.6,0.8", "--samples", "2000", "--seed", "12"]
        assert run_cli(argv + ["--out", str(a)]) == 0
        assert run_cli(argv + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_count_levels(self, capsys):
        assert run_cli(["collapse", "--count-levels", "10"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["result"]["distinct_count"] == 100
        assert doc["result"]["raw_case_count"] == 200
        assert doc["result"]["cases"] is None

    def test_unnormalized_amps(self):
        assert run_cli(["collapse", "--amps", "1,1", "--samples", "10", "--seed", "0"]) == 5

    def test_missing_seed(self):
        assert run_cli(["collapse", "--amps", "0.6,0.8", "--samples", "10"]) == 5

    def test_modes_are_exclusive(self):
        assert run_cli(["collapse", "--amps", "0.6,0.8", "--count-levels", "3"]) == 2

    def test_mismatched_options_rejected(self):
        assert run_cli(["collapse", "--count-levels", "3", "--samples", "5"]) == 5
        assert run_cli(["collapse", "--amps", "0.6,0.8", "--samples", "5", "--seed", "1", "--list-cases"]) == 5


class TestErrorChannels:
    def test_unknown_flag_is_usage(self, workspace):
        _, _, weights = workspace
        assert run_cli(["recall", "--weights", str(weights), "--state", "1,1,1,1", "--bogus"]) == 2

    def test_missing_subcommand_is_usage(self):
        assert run_cli([]) == 2

    def test_missing_file(self, tmp_path):
        assert run_cli(["train", "--memories", str(tmp_path / "nope.txt"), "--out", str(tmp_path / "w.json")]) == 2

    def test_parse_error(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("1 2 1\n")
        assert run_cli(["train", "--memories", str(bad), "--out", str(tmp_path / "w.json")]) == 3

    def test_version(self, capsys):
        assert run_cli(["--version"]) == 0
        assert "assocmem" in capsys.readouterr().out
