# tests/test_cli.py

import csv

import pytest

from cli.main import EXIT_OK, EXIT_RUNTIME, EXIT_USAGE, main


def _rows(path):
    with open(path, encoding="utf-8", newline="") as fh:
        return list(csv.reader(fh))


class TestSimulate:
    def test_small_run(self, tmp_path):
        out = tmp_path / "traj.csv"
        assert main(["simulate", "--case", "easy", "--scenario", "small", "--out", str(out)]) == EXIT_OK
        rows = _rows(out)
        assert rows[0] == ["step", "ub", "lb", "r", "bk", "sbk"]
        assert len(rows) == 101
        assert rows[1][0] == "1" and rows[-1][0] == "100"

    def test_stdout(self, capsys):
        assert main(["simulate", "--scenario", "n=5", "--processes", "ub"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "step,ub"
        assert lines[1] == "1,0"
        assert len(lines) == 6

    def test_deterministic_csv_and_svg(self, tmp_path):
        outputs = []
        for name in ("a", "b"):
            csv_path, svg_path = tmp_path / f"{name}.csv", tmp_path / f"{name}.svg"
            code = main([
                "simulate", "--scenario", "small", "--processes", "ub,bk,sj",
                "--sj-jump", "0.01", "--out", str(csv_path), "--svg", str(svg_path),
            ])
            assert code == EXIT_OK
            outputs.append((csv_path.read_bytes(), svg_path.read_bytes()))
        assert outputs[0] == outputs[1]
        assert outputs[0][1].lstrip().startswith(b"<?xml")

    def test_seed_changes_output(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["simulate", "--scenario", "small", "--seed", "1", "--out", str(a)])
        main(["simulate", "--scenario", "small", "--seed", "2", "--out", str(b)])
        assert a.read_bytes() != b.read_bytes()

    def test_window(self, tmp_path):
        out = tmp_path / "tail.csv"
        assert main(["simulate", "--scenario", "small", "--window", "10", "--out", str(out)]) == EXIT_OK
        rows = _rows(out)
        assert len(rows) == 11
        assert rows[1][0] == "91"

    def test_null_data(self, tmp_path):
        out = tmp_path / "null.csv"
        assert main(["simulate", "--scenario", "small", "--null", "pi=0.5", "--out", str(out)]) == EXIT_OK
        assert len(_rows(out)) == 101


class TestSweep:
    def test_finals_and_stats(self, tmp_path):
        out = tmp_path / "finals.csv"
        code = main([
            "sweep", "--scenario", "small", "--runs", "6",
            "--processes", "ub,lb,bk,sbk", "--out", str(out),
        ])
        assert code == EXIT_OK
        finals = _rows(out)
        assert finals[0] == ["process", "run", "final_log10"]
        assert len(finals) == 1 + 4 * 6
        assert [row[0] for row in finals[1:7]] == ["ub"] * 6
        assert [row[1] for row in finals[1:7]] == [str(i) for i in range(6)]

        stats = _rows(tmp_path / "finals.stats.csv")
        assert stats[0][:3] == ["process", "n_samples", "median"]
        assert [row[0] for row in stats[1:]] == ["ub", "lb", "bk", "sbk"]
        assert all(row[1] == "6" for row in stats[1:])

    def test_single_run_matches_simulate(self, tmp_path):
        finals_path, traj_path = tmp_path / "finals.csv", tmp_path / "traj.csv"
        flags = ["--case", "easy", "--scenario", "small", "--processes", "ub,bk"]
        assert main(["sweep", *flags, "--runs", "1", "--out", str(finals_path)]) == EXIT_OK
        assert main(["simulate", *flags, "--out", str(traj_path)]) == EXIT_OK
        finals = {row[0]: row[2] for row in _rows(finals_path)[1:]}
        last = _rows(traj_path)[-1]
        assert finals == {"ub": last[1], "bk": last[2]}
        assert not (tmp_path / "finals.stats.csv").exists()

    def test_explicit_stats_with_too_few_runs(self, tmp_path):
        code = main([
            "sweep", "--scenario", "n=10", "--runs", "2",
            "--out", str(tmp_path / "f.csv"), "--stats", str(tmp_path / "s.csv"),
        ])
        assert code == EXIT_RUNTIME

    def test_svg_skipped_with_too_few_runs(self, tmp_path):
        svg = tmp_path / "box.svg"
        code = main([
            "sweep", "--scenario", "n=10", "--runs", "2",
            "--out", str(tmp_path / "f.csv"), "--svg", str(svg),
        ])
        assert code == EXIT_OK
        assert len(_rows(tmp_path / "f.csv")) > 1
        assert not svg.exists()
        assert not (tmp_path / "f.stats.csv").exists()

    def test_svg(self, tmp_path):
        svg = tmp_path / "box.svg"
        code = main([
            "sweep", "--scenario", "n=20", "--runs", "8", "--processes", "ub,sbk",
            "--out", str(tmp_path / "f.csv"), "--svg", str(svg),
        ])
        assert code == EXIT_OK
        assert svg.stat().st_size > 0


class TestWeights:
    def test_first_step(self, capsys):
        assert main(["weights", "--scenario", "small", "--step", "1"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["k,weight", "0,0.5", "1,0.5"]

    def test_default_step(self, tmp_path):
        out = tmp_path / "w.csv"
        assert main(["weights", "--scenario", "n=50", "--out", str(out)]) == EXIT_OK
        rows = _rows(out)
        assert len(rows) == 1 + 51
        assert sum(float(row[1]) for row in rows[1:]) == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize(
    "argv",
    [
        ["simulate", "--case", "medium"],
        ["simulate", "--scenario", "n=0"],
        ["simulate", "--processes", "ub,xyz"],
        ["simulate", "--sj-jump", "2.0"],
        ["simulate", "--null", "pi=1.5"],
        ["simulate", "--seed", "-1"],
        ["sweep", "--runs", "0"],
        ["weights", "--scenario", "small", "--step", "101"],
        ["unknown"],
        [],
    ],
)
def test_bad_flags(argv):
    assert main(argv) == EXIT_USAGE


def test_help():
    assert main(["--help"]) == EXIT_OK
