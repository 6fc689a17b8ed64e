import csv
import json
import math

import pytest

from hdran.main import main


def read_rows(path):
    with open(path, newline="", encoding="utf-8") as handle:
        return list(csv.DictReader(handle))


@pytest.fixture
def generated(tmp_path):
    path = tmp_path / "net.json"
    assert main(["generate", "--k", "3", "--n", "1000", "--seed", "42", "--out", str(path)]) == 0
    return path


def test_generate(capsys, generated):
    out = capsys.readouterr().out

    assert generated.exists()
    assert "vertices=1003" in out
    assert "seed=42" in out


def test_generate_rejects_small_index(tmp_path, caplog):
    code = main(["generate", "--k", "2", "--n", "10", "--seed", "1", "--out", str(tmp_path / "net.json")])

    assert code == 2
    assert "k must be at least 3" in caplog.text
    assert not (tmp_path / "net.json").exists()


def test_missing_arguments_are_usage_errors():
    assert main(["generate", "--k", "3"]) == 2
    assert main([]) == 2


def test_stats(generated, tmp_path):
    prefix = str(tmp_path / "out_")
    assert main(["stats", "--in", str(generated), "--out-prefix", prefix, "--distances"]) == 0

    histogram = read_rows(prefix + "degree_hist.csv")
    assert list(histogram[0]) == ["j", "count_all", "count_newcomers", "fraction", "theory_b"]
    assert histogram[0]["j"] == "3"
    assert float(histogram[0]["theory_b"]) == pytest.approx(0.4)
    assert sum(int(row["count_newcomers"]) for row in histogram) == 1000

    summary = read_rows(prefix + "summary.csv")[0]
    assert summary["vertices"] == "1003"
    assert summary["active_cliques"] == "2001"
    assert int(summary["diameter"]) >= 2
    assert (tmp_path / "out_clustering.csv").exists()
    assert len(read_rows(prefix + "lorenz.csv")) == 1004


def test_stats_on_missing_input(tmp_path):
    assert main(["stats", "--in", str(tmp_path / "absent.json"), "--out-prefix", str(tmp_path / "x_")]) == 1


def test_stats_on_invalid_network(tmp_path, fixtures_dir, caplog):
    broken = tmp_path / "broken.json"
    text = (fixtures_dir / "fig3_k5_n2.json").read_text(encoding="utf-8")
    broken.write_text(text.replace("    [0, 1],\n", ""), encoding="utf-8")

    assert main(["stats", "--in", str(broken), "--out-prefix", str(tmp_path / "x_")]) == 1
    assert "Network file validation failed" in caplog.text


def test_theory(tmp_path, capsys):
    path = tmp_path / "theory.json"
    assert main(["theory", "--k", "3", "--n", "100", "--out", str(path)]) == 0

    report = json.loads(path.read_text(encoding="utf-8"))
    assert report["clustering_limit"] == pytest.approx(0.768586, abs=1e-6)
    out = capsys.readouterr().out
    assert "clustering_limit=0.768586" in out
    assert f"clustering_expected={report['clustering_expected']:.6f}" in out

    printed = dict(token.split("=") for line in out.splitlines() if line.startswith("height_constant=") for token in line.split())
    constants = report["diameter_constants"]
    assert float(printed["height_constant"]) == pytest.approx(constants["height_constant"], abs=1e-6)
    assert float(printed["diameter_constant"]) == pytest.approx(constants["c"], abs=1e-6)
    assert float(printed["diameter_constant"]) == pytest.approx(2 * float(printed["height_constant"]), abs=2e-6)
    assert float(printed["height_constant_k_log2"]) == pytest.approx(3 * math.log(2) * constants["height_constant"], abs=1e-6)


def test_validate_writes_rows(tmp_path):
    path = tmp_path / "rows.csv"
    code = main(["validate", "--k", "3", "--n", "100", "--reps", "10", "--seed", "7", "--out", str(path)])
    rows = read_rows(path)

    assert {row["metric"] for row in rows} >= {"clustering", "clustering_limit", "total_depth", "gini_vertex"}
    failed = [row for row in rows if row["passed"] == "false" and row["informational"] == "false"]
    assert code == (1 if failed else 0)


def test_validate_exits_one_when_a_row_fails(tmp_path, caplog):
    path = tmp_path / "rows.csv"
    # a single replicate has zero standard error, so non-integer expectations cannot be met
    code = main(["validate", "--k", "3", "--n", "50", "--reps", "1", "--seed", "0", "--out", str(path)])
    rows = read_rows(path)
    failed = [row["metric"] for row in rows if row["passed"] == "false" and row["informational"] == "false"]

    assert code == 1
    assert "total_depth" in failed
    assert "Validation rows failed" in caplog.text


@pytest.mark.slow
def test_validate_passes_at_desk_scale(tmp_path):
    path = tmp_path / "rows.csv"
    code = main(["validate", "--k", "3", "--n", "10000", "--reps", "50", "--seed", "7", "--out", str(path)])
    rows = read_rows(path)

    assert [row["metric"] for row in rows if row["passed"] == "false" and row["informational"] == "false"] == []
    assert code == 0


def test_validate_refuses_work_over_budget(caplog):
    assert main(["validate", "--k", "3", "--n", "1000", "--reps", "100000"]) == 1
    assert "budget exceeded" in caplog.text


def test_wiener_study(tmp_path, capsys):
    prefix = str(tmp_path / "w_")
    assert main(["wiener-study", "--k", "3", "--n", "40", "--reps", "25", "--out-prefix", prefix]) == 0

    assert len(read_rows(prefix + "samples.csv")) == 25
    assert len(read_rows(prefix + "histogram.csv")) == 20
    out = capsys.readouterr().out
    assert "skewness=" in out
    assert "verdict=" in out


def test_lorenz_svg(tmp_path):
    svg = tmp_path / "lorenz.svg"
    assert main(["lorenz", "--k", "3", "4", "--n", "60", "--reps", "3", "--svg", str(svg)]) == 0
    assert svg.read_text(encoding="utf-8").count("<polyline") == 3


def test_concentration(tmp_path):
    path = tmp_path / "tails.csv"
    assert main(["concentration", "--k", "3", "--n", "30", "--j", "3", "--reps", "50", "--out", str(path)]) == 0

    rows = read_rows(path)
    assert len(rows) == 20
    assert float(rows[0]["empirical_tail"]) == 1.0


def test_concentration_rejects_degree_below_index():
    assert main(["concentration", "--k", "4", "--n", "30", "--j", "3"]) == 2


@pytest.mark.slow
def test_lorenz_curve_below_equality(tmp_path):
    svg = tmp_path / "lorenz.svg"
    assert main(["lorenz", "--k", "3", "--n", "5000", "--reps", "100", "--svg", str(svg)]) == 0
    assert svg.read_text(encoding="utf-8").count("<polyline") == 2
