import json
import subprocess
import sys

import pytest

from xcut.cli import run

D6_TEXT = "0 1 1\n0 2 1\n1 2 1\n3 4 1\n3 5 1\n4 5 1\n2 3 0.5\n"


def _pgm_text(side=24):
    """Two bright bumps on a gently sloped background; slope breaks degree
    ties so the grid graphs keep a small, stable terminal set."""
    import math

    rows = []
    for i in range(side):
        row = []
        for j in range(side):
            v = (30 + 0.03 * i + 0.017 * j
                 + 90 * math.exp(-((i - 4) ** 2 + (j - 5) ** 2) / 14.0)
                 + 80 * math.exp(-((i - 18) ** 2 + (j - 17) ** 2) / 18.0))
            row.append(str(int(round(v))))
        rows.append(" ".join(row))
    return f"P2\n{side} {side}\n255\n" + "\n".join(rows) + "\n"


PGM_TEXT = _pgm_text()


@pytest.fixture
def d6_file(tmp_path):
    path = tmp_path / "d6.txt"
    path.write_text(D6_TEXT)
    return path


def _cut_args(path, tmp_path, *extra):
    return ["cut", "--input", str(path), "--format", "edgelist", "--cut", "ncut",
            "--labels", str(tmp_path / "labels.txt"),
            "--metrics", str(tmp_path / "metrics.json"), *extra]


def test_cut_fixture(d6_file, tmp_path):
    assert run(_cut_args(d6_file, tmp_path)) == 0
    labels = (tmp_path / "labels.txt").read_text()
    assert labels == "0\n0\n0\n1\n1\n1\n"
    metrics = json.loads((tmp_path / "metrics.json").read_text())
    assert metrics["algorithm"] == "sweep-degree"
    assert metrics["cut"] == "ncut"
    assert metrics["n"] == 6
    assert metrics["m"] == 7
    assert abs(metrics["value"] - 0.0118343) < 1e-6
    assert abs(metrics["normalized_value"] - 2 / 13) < 1e-9
    assert metrics["partition_size"] == 3
    assert metrics["partition_volume"] == 6.5
    assert metrics["flow_calls"] == 1
    assert metrics["wall_time_s"] >= 0


def test_cut_rerun_is_deterministic(d6_file, tmp_path):
    assert run(_cut_args(d6_file, tmp_path)) == 0
    labels1 = (tmp_path / "labels.txt").read_bytes()
    metrics1 = json.loads((tmp_path / "metrics.json").read_text())
    assert run(_cut_args(d6_file, tmp_path)) == 0
    assert (tmp_path / "labels.txt").read_bytes() == labels1
    metrics2 = json.loads((tmp_path / "metrics.json").read_text())
    metrics1.pop("wall_time_s")
    metrics2.pop("wall_time_s")
    assert metrics1 == metrics2


def test_cut_disconnected_input_is_free(tmp_path):
    path = tmp_path / "two.txt"
    path.write_text("0 1 1\n2 3 1\n")
    assert run(_cut_args(path, tmp_path)) == 0
    metrics = json.loads((tmp_path / "metrics.json").read_text())
    assert metrics["value"] == 0.0
    assert metrics["flow_calls"] == 0
    assert (tmp_path / "labels.txt").read_text() == "0\n0\n1\n1\n"


def test_cut_largest_component(tmp_path):
    path = tmp_path / "mixed.txt"
    path.write_text("0 1 1\n2 3 1\n2 4 1\n3 4 1\n")
    assert run(_cut_args(path, tmp_path, "--largest-component")) == 0
    metrics = json.loads((tmp_path / "metrics.json").read_text())
    assert metrics["n"] == 3
    assert len((tmp_path / "labels.txt").read_text().splitlines()) == 3


def test_degenerate_terminals_exit_3(tmp_path, capsys):
    path = tmp_path / "p3.txt"
    path.write_text("0 1 1\n1 2 1\n")
    assert run(_cut_args(path, tmp_path)) == 3
    assert "--subset all" in capsys.readouterr().err
    assert run(_cut_args(path, tmp_path, "--subset", "all")) == 0
    metrics = json.loads((tmp_path / "metrics.json").read_text())
    assert metrics["algorithm"] == "all-pairs"
    assert abs(metrics["value"] - 1 / 3) < 1e-12


def test_missing_input_exits_1(tmp_path, capsys):
    assert run(_cut_args(tmp_path / "nope.txt", tmp_path)) == 1
    assert "error" in capsys.readouterr().err


def test_malformed_input_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("0 1 1\n0 zzz 1\n")
    assert run(_cut_args(path, tmp_path)) == 1
    assert "line 2" in capsys.readouterr().err


def test_usage_errors_exit_2(tmp_path, capsys):
    assert run(["cut", "--input", "x", "--format", "nope", "--cut", "ncut",
                "--labels", "l", "--metrics", "m"]) == 2
    assert run(["cut"]) == 2
    assert run([]) == 2
    capsys.readouterr()


def test_empty_graph_exits_1(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("# nothing but comments\n")
    assert run(_cut_args(path, tmp_path)) == 1
    capsys.readouterr()


def test_cut_pgm_with_grid(tmp_path):
    path = tmp_path / "img.pgm"
    path.write_text(PGM_TEXT)
    for subset in ("degree", "intensity"):
        args = ["cut", "--input", str(path), "--format", "pgm", "--grid", "8",
                "--cut", "cheeger", "--subset", subset,
                "--labels", str(tmp_path / "labels.txt"),
                "--metrics", str(tmp_path / "metrics.json")]
        assert run(args) == 0
        metrics = json.loads((tmp_path / "metrics.json").read_text())
        assert metrics["n"] == 64
        assert len((tmp_path / "labels.txt").read_text().splitlines()) == 64
    assert metrics["algorithm"] == "sweep-intensity"


def test_intensity_subset_needs_pgm(d6_file, tmp_path, capsys):
    assert run(_cut_args(d6_file, tmp_path, "--subset", "intensity")) == 2
    assert "pgm" in capsys.readouterr().err


def test_gen_is_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    base = ["gen", "gaussian", "--n", "40", "--delta", "3", "--seed", "7"]
    assert run(base + ["--out", str(out1)]) == 0
    assert run(base + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert len(out1.read_text().splitlines()) == 40


def test_multicut_on_points_with_figure(tmp_path):
    pts = tmp_path / "pts.csv"
    assert run(["gen", "gaussian", "--n", "60", "--delta", "4", "--seed", "1",
                "--out", str(pts)]) == 0
    fig = tmp_path / "clusters.png"
    args = ["multicut", "--input", str(pts), "--format", "csv-points",
            "--cut", "ncut", "--k", "3",
            "--labels", str(tmp_path / "labels.txt"),
            "--metrics", str(tmp_path / "metrics.json"), "--figure", str(fig)]
    assert run(args) == 0
    labels = [int(x) for x in (tmp_path / "labels.txt").read_text().split()]
    assert len(labels) == 60
    assert set(labels) == {0, 1, 2}
    metrics = json.loads((tmp_path / "metrics.json").read_text())
    assert metrics["k"] == 3
    assert sorted(metrics["cluster_sizes"]) == sorted(
        labels.count(i) for i in range(3))
    assert metrics["splits"] == 2
    assert metrics["multiway_value"] >= 0
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_multicut_fixture(d6_file, tmp_path):
    args = ["multicut", "--input", str(d6_file), "--format", "edgelist",
            "--cut", "ncut", "--k", "2",
            "--labels", str(tmp_path / "labels.txt"),
            "--metrics", str(tmp_path / "metrics.json")]
    assert run(args) == 0
    assert (tmp_path / "labels.txt").read_text() == "0\n0\n0\n1\n1\n1\n"


def test_multicut_figure_needs_points(d6_file, tmp_path, capsys):
    args = ["multicut", "--input", str(d6_file), "--format", "edgelist",
            "--cut", "ncut", "--k", "2",
            "--labels", str(tmp_path / "l"), "--metrics", str(tmp_path / "m"),
            "--figure", str(tmp_path / "f.png")]
    assert run(args) == 2
    capsys.readouterr()


def test_oracle_subcommand(capsys):
    assert run(["oracle", "--max-n", "8", "--trials", "6", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert "all checks passed" in out
    assert "flow_duality" in out


def test_bench_grid(tmp_path, capsys):
    img = tmp_path / "img.pgm"
    img.write_text(PGM_TEXT)
    out = tmp_path / "bench.csv"
    assert run(["bench", "grid", "--image", str(img), "--sizes", "6,8,12",
                "--repeats", "1", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "r,n,m,n_terminals,seconds"
    assert len(lines) == 4
    assert (tmp_path / "bench.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert "slope" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "xcut.cli", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "cut" in proc.stdout and "multicut" in proc.stdout
