import json
from pathlib import Path

import pytest
from conftest import esprima_json

from coderep.errors import NotApplicable, StageError
from coderep.pipeline import (
    MINI_CORPUS, ExperimentConfig, default_matrix, load_config, load_matrix, parse_corpus, run, run_matrix,
)

DATA_FILES = ("train.src", "train.tgt", "val.src", "val.tgt", "test.src", "test.tgt", "vocab.src", "vocab.tgt")


def test_e1_run_on_mini_corpus(tmp_path):
    res = run(ExperimentConfig(), out=tmp_path)
    m = json.loads((tmp_path / "manifest.json").read_text())
    for name in ("records.jsonl", "pairs.jsonl", "split.json", "predictions.jsonl", "report.json",
                 "stats.json", *(f"data/{f}" for f in DATA_FILES)):
        assert name in m["artifacts"], name
    assert res.report.n == m["counts"]["pairs_test"] > 0
    assert res.report.accuracy == 0.0
    assert json.loads((tmp_path / "report.json").read_text())["accuracy"] == res.report.accuracy
    assert m["config"]["eid"] == "E1" and "corpus" in m["config"] and m["config"]["corpus"] is None


def test_not_applicable_fails_before_any_work(tmp_path):
    out = tmp_path / "never"
    with pytest.raises(StageError) as err:
        run(ExperimentConfig(bug_type="wrong_binop", src_rep="FS2", tgt_rep="FS2"), out=out)
    assert err.value.stage == "config" and isinstance(err.value.cause, NotApplicable)
    assert not out.exists()


def _bytes(d):
    return {p.relative_to(d).as_posix(): p.read_bytes() for p in sorted(Path(d).rglob("*")) if p.is_file()}


def test_runs_are_byte_identical(tmp_path):
    cfg = ExperimentConfig(eid="E10", src_rep="TF1", tgt_rep="TF1", seed=5)
    run(cfg, out=tmp_path / "a")
    run(cfg, out=tmp_path / "b")
    assert _bytes(tmp_path / "a") == _bytes(tmp_path / "b")


def test_seed_changes_output(tmp_path):
    run(ExperimentConfig(seed=1), out=tmp_path / "a")
    run(ExperimentConfig(seed=2), out=tmp_path / "b")
    assert (tmp_path / "a/data/train.src").read_bytes() != (tmp_path / "b/data/train.src").read_bytes()


def test_config_json(tmp_path):
    cfg = ExperimentConfig(eid="E16", src_rep="FS2", tgt_rep="TF1", seed=3)
    path = tmp_path / "c.json"
    path.write_text(json.dumps(cfg.to_json()))
    assert load_config(path) == cfg
    from coderep.errors import ConfigError

    for bad in ({"schema_version": 2}, {"colour": "red"}, [1]):
        path.write_text(json.dumps(bad))
        with pytest.raises(ConfigError):
            load_config(path)
    with pytest.raises(ConfigError):
        ExperimentConfig(val_fraction=0).validate()


def test_default_matrix_rows():
    swapped = default_matrix("swapped_args")
    assert [r.eid for r in swapped] == [f"E{i}" for i in range(1, 19)]
    assert (swapped[14].src_rep, swapped[14].tgt_rep) == ("TF1", "FS2")
    assert (swapped[15].src_rep, swapped[15].tgt_rep) == ("FS2", "TF1")
    binop = [r.eid for r in default_matrix("wrong_binop")]
    assert not {"E6", "E7", "E8", "E9", "E12", "E13"} & set(binop)
    assert len(binop) == 12
    shipped = load_matrix(MINI_CORPUS.parent / "matrix" / "default.json")
    assert len(shipped) == 18 + 12 + 12


def test_matrix_two_rows_and_consistency(tmp_path):
    rows = [ExperimentConfig("E1"), ExperimentConfig("E5", "wrong_binop", "DB3", "DB3")]
    summary = run_matrix(rows, out=tmp_path)
    assert len(summary["rows"]) == 2 and summary["failures"] == []
    for row in summary["rows"]:
        report = json.loads((tmp_path / f"{row['eid']}_{row['bug_type']}" / "report.json").read_text())
        for k in ("accuracy", "bleu", "avg_position"):
            assert row[k] == report[k]
    assert (tmp_path / "summary.txt").read_text().split("\n")[0].split() == ["EID", "RID", "Accuracy", "BLEU", "Position"]


def test_empty_matrix(tmp_path):
    summary = run_matrix([], out=tmp_path)
    assert summary == {"schema_version": 1, "rows": [], "failures": []}


def test_failing_row_is_isolated(tmp_path):
    rows = [ExperimentConfig("E1", train_files=1000, test_files=5), ExperimentConfig("E3", src_rep="DB1", tgt_rep="DB1")]
    summary = run_matrix(rows, out=tmp_path)
    assert [r["eid"] for r in summary["rows"]] == ["E3"]
    (fail,) = summary["failures"]
    assert fail["eid"] == "E1" and fail["stage"] == "split"


def test_estree_json_files_and_fallback(tmp_path):
    (tmp_path / "a.js").write_text("f(x, y);")
    (tmp_path / "b.json").write_text(esprima_json("g(p, q);"))
    (tmp_path / "c.js").write_text("try { h(m, n); } catch (e) {}")
    (tmp_path / "c.json").write_text(esprima_json("try { h(m, n); } catch (e) {}"))
    (tmp_path / "d.js").write_text("switch (x) {}")
    asts, failures = parse_corpus(tmp_path)
    assert sorted(asts) == ["a.js", "b.json", "c.json"]
    assert [f["file"] for f in failures] == ["d"]
    res = run(ExperimentConfig(train_files=2, test_files=1), corpus=tmp_path, out=tmp_path / "out")
    assert res.manifest["counts"]["records"] == 3
    assert res.manifest["parse_failures"][0]["file"] == "d"
