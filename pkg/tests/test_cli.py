"""CLI subcommands and the experiment harness (determinism, schema, tripwire)."""

import json
import math

import pytest

from graphenergy import (
    ExperimentConfig,
    GraphError,
    ResultRow,
    SoundnessError,
    bound_report,
    load_edge_list,
    path,
    rows_to_csv,
    run_experiment,
    save_edge_list,
    star,
    summarize,
)
from graphenergy.cli import main
from graphenergy.experiments import CSV_COLUMNS, _check_soundness


def test_gen_ba_tree(tmp_path, capsys):
    out = tmp_path / "t.edges"
    assert main(["gen", "--model", "ba", "--n", "10", "--seed", "7", "--out", str(out)]) == 0
    g = load_edge_list(out)
    assert g.n == 10 and g.m == 9


def test_gen_er_round_trips_through_analyze(tmp_path, capsys):
    out = tmp_path / "er.edges"
    assert main(["gen", "--model", "er", "--n", "100", "--lambda", "1",
                 "--seed", "7", "--out", str(out)]) == 0
    capsys.readouterr()
    assert main(["analyze", str(out)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["n"] == 100


def test_gen_bad_model_is_usage_error(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--model", "nope", "--n", "5", "--out", str(tmp_path / "x")])
    assert exc.value.code == 2


def test_gen_bad_n_is_usage_error(tmp_path, capsys):
    assert main(["gen", "--model", "ba", "--n", "1", "--out", str(tmp_path / "x")]) == 2


def test_analyze_star(tmp_path, capsys):
    f = tmp_path / "s5.edges"
    save_edge_list(star(5), f)
    assert main(["analyze", str(f), "--sachs"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["energy"] == pytest.approx(2 * math.sqrt(5), abs=1e-9)
    assert payload["bounds"]["tp"] == pytest.approx(2 * math.sqrt(5), abs=1e-9)
    assert payload["tp_equality"] is True
    assert len(payload["sachs_char_poly"]) == 7


def test_analyze_p4(tmp_path, capsys):
    f = tmp_path / "p4.edges"
    save_edge_list(path(4), f)
    assert main(["analyze", str(f)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["energy"] == pytest.approx(2 * math.sqrt(5), abs=1e-9)
    assert payload["bounds"]["aj"] == pytest.approx(2 + 2 * math.sqrt(2), abs=1e-9)
    assert payload["tp_equality"] is True  # P4 meets its local bound too


def test_analyze_k2(tmp_path, capsys):
    f = tmp_path / "k2.edges"
    save_edge_list(path(2), f)
    assert main(["analyze", str(f)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["bounds"]["tpg"] == pytest.approx(2.0)
    assert payload["bounds"]["tp"] is None


def test_analyze_parse_error_is_runtime(tmp_path, capsys):
    f = tmp_path / "bad.edges"
    f.write_text("0 zzz\n")
    assert main(["analyze", str(f)]) == 1


def test_experiment_rows_and_summary(tmp_path, capsys):
    config = ExperimentConfig(model="ba", n=40, trials=8, seed=42)
    rows = run_experiment(config)
    assert [r.trial for r in rows] == list(range(8))
    for r in rows:
        assert r.edges == 39
        assert r.energy <= r.report.tpg + 1e-7 * r.n
    summary = summarize(config, rows)
    assert summary["schema_version"] == 1
    assert "tpg" in summary["bounds_per_n"]
    assert summary["asymptotic_constant"] == pytest.approx(0.95999, abs=1e-4)


def test_experiment_deterministic_across_threads():
    texts = []
    for threads in (1, 2, 8):
        config = ExperimentConfig(model="er", n=40, trials=10, seed=5, lam=1.5, threads=threads)
        texts.append(rows_to_csv(run_experiment(config)))
    assert texts[0] == texts[1] == texts[2]


def test_experiment_validation():
    with pytest.raises(GraphError):
        ExperimentConfig(model="ba", n=40, trials=0, seed=1).validate()
    with pytest.raises(GraphError):
        ExperimentConfig(model="er", n=40, trials=5, seed=1).validate()
    with pytest.raises(GraphError):
        ExperimentConfig(model="zz", n=40, trials=5, seed=1).validate()


def test_experiment_cli_and_csv_schema(tmp_path, capsys):
    out = tmp_path / "exp.csv"
    js = tmp_path / "exp.json"
    assert main(["experiment", "--model", "ba", "--n", "30", "--trials", "4",
                 "--seed", "9", "--out", str(out), "--json", str(js)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("#")
    assert lines[1] == ",".join(CSV_COLUMNS)
    assert len(lines) == 2 + 4
    summary = json.loads(js.read_text())
    assert summary["model"] == "ba"


def test_experiment_cli_rejects_zero_trials(tmp_path):
    assert main(["experiment", "--model", "ba", "--n", "30", "--trials", "0",
                 "--seed", "9", "--out", str(tmp_path / "x.csv")]) == 2


def test_soundness_tripwire():
    g = path(4)
    bad = ResultRow(trial=0, seed=1, n=4, edges=3, energy=99.0, report=bound_report(g))
    with pytest.raises(SoundnessError, match="exceeds"):
        _check_soundness(bad)


def test_asymptotic_cli(tmp_path, capsys):
    assert main(["asymptotic", "--model", "ba", "--terms", "100001"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["value"] == pytest.approx(0.95999, abs=1e-4)
    assert payload["truncation_bound"] == pytest.approx(1.46059e-7, rel=1e-3)

    assert main(["asymptotic", "--model", "er", "--lambda", "1", "--terms", "20"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["value"] == pytest.approx(0.8585, abs=1e-4)
    assert payload["hypoenergetic"] is True


def test_asymptotic_validation(capsys):
    assert main(["asymptotic", "--model", "ba", "--terms", "5"]) == 2
    assert main(["asymptotic", "--model", "er"]) == 2


def test_sachs_check_cli(capsys):
    assert main(["sachs-check", "--n", "6", "--trials", "10", "--seed", "3"]) == 0
    assert "PASS" in capsys.readouterr().out
    assert main(["sachs-check", "--n", "1", "--trials", "1"]) == 0
    assert main(["sachs-check", "--n", "13", "--trials", "1"]) == 2


def test_plot_cli(tmp_path, capsys):
    out = tmp_path / "exp.csv"
    assert main(["experiment", "--model", "ba", "--n", "30", "--trials", "6",
                 "--seed", "1", "--out", str(out), "--json", str(tmp_path / "s.json")]) == 0
    svg = tmp_path / "exp.svg"
    assert main(["plot", str(out), "--out", str(svg)]) == 0
    text = svg.read_text()
    assert text.count("<circle") == 6


def test_plot_schema_errors(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b\n1,2\n")
    assert main(["plot", str(bad), "--out", str(tmp_path / "o.svg")]) == 1
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    assert main(["plot", str(empty), "--out", str(tmp_path / "o.svg")]) == 1
