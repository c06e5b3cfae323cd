import random
from collections import Counter

import pytest

from coderep.errors import AlignmentError
from coderep.evaluation import PredictionSet, accuracy
from coderep.golden import EXPECTED
from coderep.model_adapter import (
    MemorizerBaseline, predict, read_parallel, read_predictions, train_memorizer, write_predictions,
)


def test_count_order():
    idx = train_memorizer(["a", "a", "a"], ["b", "b", "c"])
    assert [t for t, _ in idx.lookup("a")] == [("b",), ("c",)]
    assert len(train_memorizer([], [])) == 0


def test_rank_matches_sorting_oracle():
    r = random.Random(0)
    src = [r.choice("pqrs") for _ in range(1000)]
    tgt = [r.choice(["x", "y", "z", "w"]) for _ in range(1000)]
    idx = train_memorizer(src, tgt)
    for s in "pqrs":
        counts = Counter(t for a, t in zip(src, tgt) if a == s)
        oracle = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
        assert [(" ".join(t), n) for t, n in idx.lookup(s)] == oracle


def test_memorizes_reference_pair():
    buggy, fixed = "setTimeout ( delay , fn )", "setTimeout ( fn , delay )"
    idx = train_memorizer([buggy, EXPECTED["DB1"]], [fixed, EXPECTED["WT1"]])
    assert predict(idx, buggy).candidates[0] == tuple(fixed.split())
    assert predict(idx, "unseen").candidates == ()


def test_self_evaluation_is_perfect(pairs):
    from coderep.representation import make_pair

    first = {}
    for p in pairs["wrong_binop"]:
        ex = make_pair(p, "WT1", "WT1")
        first.setdefault(" ".join(ex.src), " ".join(ex.tgt))
    src, tgt = list(first), list(first.values())
    assert len(src) > 500
    model = MemorizerBaseline(k=1).fit(src, tgt)
    assert accuracy(tgt, model.predict(src)) == 100.0


def test_top_k_truncation_and_validation():
    idx = train_memorizer(["a"] * 5, list("vwxyz"))
    assert len(predict(idx, "a", k=2).candidates) == 2
    with pytest.raises(Exception):
        predict(idx, "a", k=0)
    with pytest.raises(AlignmentError):
        train_memorizer(["a"], [])


def test_estimator_shape():
    from sklearn.exceptions import NotFittedError

    with pytest.raises(NotFittedError):
        MemorizerBaseline().predict(["a"])
    assert MemorizerBaseline(k=3).get_params() == {"k": 3}


def test_file_contract(tmp_path):
    (tmp_path / "train.src").write_text("a b\nc\n")
    (tmp_path / "train.tgt").write_text("x\ny\n")
    src, tgt = read_parallel(tmp_path, "train")
    preds = MemorizerBaseline().fit(src, tgt).predict(src)
    write_predictions(tmp_path / "p.jsonl", preds)
    assert read_predictions(tmp_path / "p.jsonl") == preds
    assert preds[0] == PredictionSet(0, ("x",))
    (tmp_path / "bad.src").write_text("a\n")
    (tmp_path / "bad.tgt").write_text("")
    with pytest.raises(AlignmentError):
        read_parallel(tmp_path, "bad")
