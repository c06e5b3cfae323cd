"""File contract with external sequence models plus an exact-match memorizer baseline."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from pathlib import Path

from sklearn.base import BaseEstimator

from .errors import AlignmentError
from .evaluation import PredictionSet, as_tokens
from .jsonl import read_jsonl, write_jsonl
from .validation import check_is_fitted, check_positive_int


@dataclass(frozen=True)
class MemorizerIndex:
    """Source sequence -> targets ranked by count (descending), then lexicographically."""

    table: dict

    def lookup(self, src) -> list[tuple[tuple, int]]:
        return list(self.table.get(as_tokens(src), ()))

    def __len__(self):
        return len(self.table)


def train_memorizer(src_lines, tgt_lines) -> MemorizerIndex:
    src_lines, tgt_lines = list(src_lines), list(tgt_lines)
    if len(src_lines) != len(tgt_lines):
        raise AlignmentError(f"{len(src_lines)} source lines but {len(tgt_lines)} target lines")
    counts: dict = defaultdict(Counter)
    for s, t in zip(src_lines, tgt_lines):
        counts[as_tokens(s)][as_tokens(t)] += 1
    table = {s: tuple(sorted(c.items(), key=lambda kv: (-kv[1], kv[0]))) for s, c in counts.items()}
    return MemorizerIndex(table)


def predict(index: MemorizerIndex, src, k: int = 25, id=None) -> PredictionSet:
    check_positive_int(k, "k")
    return PredictionSet(id, tuple(t for t, _ in index.lookup(src)[:k]))


class MemorizerBaseline(BaseEstimator):
    """Deterministic stand-in for a trained model: recalls targets seen for an exact source."""

    def __init__(self, k=25):
        self.k = k

    def fit(self, X, y):
        self.index_ = train_memorizer(X, y)
        return self

    def predict(self, X) -> list[PredictionSet]:
        check_is_fitted(self, "index_")
        return [predict(self.index_, src, self.k, id=i) for i, src in enumerate(X)]


# -- files -------------------------------------------------------------------

def read_lines(path) -> list[str]:
    text = Path(path).read_text(encoding="utf-8")
    return text.split("\n")[:-1] if text else []


def read_parallel(data_dir, split) -> tuple[list[str], list[str]]:
    d = Path(data_dir)
    src, tgt = read_lines(d / f"{split}.src"), read_lines(d / f"{split}.tgt")
    if len(src) != len(tgt):
        raise AlignmentError(f"{split}.src has {len(src)} lines but {split}.tgt has {len(tgt)}")
    return src, tgt


def write_predictions(path, prediction_sets) -> int:
    return write_jsonl(path, (p.to_json() for p in prediction_sets))


def read_predictions(path) -> list[PredictionSet]:
    return [PredictionSet.from_json(obj) for obj in read_jsonl(path)]
