"""Deduplication, file-level splitting, vocabularies and parallel-file emission."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from sklearn.base import BaseEstimator, TransformerMixin

from .errors import SplitError
from .jsonl import sha256_file, write_json, write_jsonl
from .validation import check_is_fitted, check_seed

UNK, BOS, EOS = "<unk>", "<s>", "</s>"
SPECIALS = (UNK, BOS, EOS)
SPLITS = ("train", "val", "test")
DEDUP_SCOPES = ("within_test", "test_vs_train", "train")


# -- dedup -------------------------------------------------------------------

def dedup_key(item) -> tuple:
    """Extracted-field tuple of a record, pair, or encoded example."""
    origin = getattr(item, "origin", None)
    if origin is not None:
        item = origin
    record = getattr(item, "record", item)
    return record.fields()


def dedup(records, scope: str, train=None, key=dedup_key) -> list:
    """Remove duplicates according to ``scope``.

    ``within_test`` keeps the first of each key; ``test_vs_train`` drops items
    whose key occurs in ``train``; ``train`` is the optional train-internal pass
    (same rule as ``within_test``).
    """
    if scope not in DEDUP_SCOPES:
        raise ValueError(f"unknown dedup scope {scope!r}")
    if scope == "test_vs_train":
        if train is None:
            raise ValueError("test_vs_train dedup needs the training records")
        seen = {key(r) for r in train}
        return [r for r in records if key(r) not in seen]
    seen, out = set(), []
    for r in records:
        k = key(r)
        if k not in seen:
            seen.add(k)
            out.append(r)
    return out


# -- split -------------------------------------------------------------------

@dataclass(frozen=True)
class SplitSpec:
    train_files: int
    test_files: int
    val_fraction: float = 0.1
    seed: int = 0

    def __post_init__(self):
        for name in ("train_files", "test_files"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise SplitError(f"{name} must be a non-negative integer, got {v!r}")
        if not 0 < self.val_fraction < 1:
            raise SplitError(f"val_fraction must be in (0, 1), got {self.val_fraction!r}")
        check_seed(self.seed)

    def to_json(self) -> dict:
        return {"train_files": self.train_files, "test_files": self.test_files,
                "val_fraction": self.val_fraction, "seed": self.seed}


def split(files, spec: SplitSpec) -> dict:
    """Seeded file-level partition into train/val/test; val is carved out of train.

    >>> s = split([f"f{i}" for i in range(10)], SplitSpec(6, 4, 0.5, 0))
    >>> [len(s[k]) for k in ("train", "val", "test")]
    [3, 3, 4]
    """
    files = sorted(set(files))
    if spec.train_files + spec.test_files > len(files):
        raise SplitError(
            f"requested {spec.train_files} train + {spec.test_files} test files but the corpus has {len(files)}"
        )
    order = list(files)
    random.Random(spec.seed).shuffle(order)
    test = order[: spec.test_files]
    train = order[spec.test_files: spec.test_files + spec.train_files]
    n_val = int(spec.val_fraction * len(train) + 0.5)
    return {"train": sorted(train[n_val:]), "val": sorted(train[:n_val]), "test": sorted(test)}


# -- vocabulary --------------------------------------------------------------

@dataclass(frozen=True)
class Vocabulary:
    tokens: tuple
    cap: int

    def __post_init__(self):
        object.__setattr__(self, "_index", frozenset(self.tokens))

    def __contains__(self, tok):
        return tok in self._index or tok in SPECIALS

    def __len__(self):
        return len(self.tokens)

    def map(self, seq) -> list[str]:
        return [t if t in self else UNK for t in seq]

    def lines(self) -> list[str]:
        """Vocabulary file content: specials first, then tokens by frequency."""
        return list(SPECIALS) + list(self.tokens)


def build_vocab(token_stream, cap: int = 30000) -> Vocabulary:
    """Top-``cap`` tokens, frequency descending with lexicographic ties.

    >>> build_vocab("a a b".split(), 1).tokens
    ('a',)
    """
    counts = Counter(str(t) for t in token_stream if str(t) not in SPECIALS)
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return Vocabulary(tuple(t for t, _ in ranked[:cap]), cap)


class VocabularyBuilder(BaseEstimator, TransformerMixin):
    """``fit`` on token sequences, ``transform`` maps out-of-vocabulary tokens to ``<unk>``."""

    def __init__(self, max_size=30000):
        self.max_size = max_size

    def fit(self, X, y=None):
        self.vocabulary_ = build_vocab((t for seq in X for t in seq), self.max_size)
        return self

    def transform(self, X):
        check_is_fitted(self, "vocabulary_")
        return [self.vocabulary_.map(seq) for seq in X]


# -- emission ----------------------------------------------------------------

@dataclass
class Manifest:
    info: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    files: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"schema_version": 1, **self.info, "counts": dict(sorted(self.counts.items())),
                "files": dict(sorted(self.files.items()))}


def _write_lines(path, lines):
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")


def emit_parallel(examples, out_dir, *, vocab_cap: int = 30000, map_unk: bool = True, info=None) -> Manifest:
    """Write line-aligned ``{split}.src``/``{split}.tgt`` files, vocabularies and a manifest.

    ``examples`` maps split name to encoded examples (a bare list is treated
    as the train split). Vocabularies come from train and val only; when
    ``map_unk`` is set, out-of-vocabulary tokens are written as ``<unk>``.
    Each split also gets a JSONL file carrying the raw encodings and decode
    aids.
    """
    if not isinstance(examples, dict):
        examples = {"train": list(examples)}
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    fit_splits = [s for s in ("train", "val") if s in examples]
    src_vocab = build_vocab((t for s in fit_splits for ex in examples[s] for t in ex.src), vocab_cap)
    tgt_vocab = build_vocab((t for s in fit_splits for ex in examples[s] for t in ex.tgt), vocab_cap)
    manifest = Manifest(info=dict(info or {}))
    shapes = {(ex.bug_type, ex.src_rep, ex.tgt_rep) for exs in examples.values() for ex in exs}
    if len(shapes) > 1:
        raise ValueError(f"examples mix experiment shapes: {sorted(shapes)}")
    if shapes:
        bug, src_rep, tgt_rep = shapes.pop()
        manifest.info.setdefault("bug_type", bug)
        manifest.info.setdefault("src_rep", src_rep)
        manifest.info.setdefault("tgt_rep", tgt_rep)
    written = []
    for name in sorted(examples):
        exs = examples[name]
        src_lines = [" ".join(src_vocab.map(ex.src) if map_unk else ex.src) for ex in exs]
        tgt_lines = [" ".join(tgt_vocab.map(ex.tgt) if map_unk else ex.tgt) for ex in exs]
        _write_lines(out / f"{name}.src", src_lines)
        _write_lines(out / f"{name}.tgt", tgt_lines)
        write_jsonl(out / f"{name}.jsonl", (dict(ex.to_json(), id=i) for i, ex in enumerate(exs)))
        manifest.counts[name] = len(exs)
        written += [f"{name}.src", f"{name}.tgt", f"{name}.jsonl"]
    _write_lines(out / "vocab.src", src_vocab.lines())
    _write_lines(out / "vocab.tgt", tgt_vocab.lines())
    written += ["vocab.src", "vocab.tgt"]
    manifest.info["vocab_cap"] = vocab_cap
    manifest.files = {rel: sha256_file(out / rel) for rel in written}
    write_json(out / "manifest.json", manifest.to_json())
    return manifest


# -- statistics --------------------------------------------------------------

STATS_COLUMNS = ("bug_type", "train", "val", "test", "real")


@dataclass
class StatsReport:
    rows: list

    def to_json(self) -> list:
        return [dict(r) for r in self.rows]

    def to_text(self) -> str:
        cells = [list(STATS_COLUMNS)] + [["-" if r[c] is None else str(r[c]) for c in STATS_COLUMNS]
                                         for r in self.rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(STATS_COLUMNS))]
        lines = ["  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(row, widths)))
                 for row in cells]
        return "\n".join(lines) + "\n"


def corpus_stats(splits) -> StatsReport:
    """Per-bug-type example counts.

    ``splits`` maps bug type to ``{"train": ..., "val": ..., "test": ..., "real": ...}``
    where values are counts or sequences.
    """
    rows = []
    for bug_type in sorted(splits):
        parts = splits[bug_type]
        row = {"bug_type": bug_type}
        for col in STATS_COLUMNS[1:]:
            v = parts.get(col)
            row[col] = v if v is None or isinstance(v, int) else len(v)
        rows.append(row)
    return StatsReport(rows)
