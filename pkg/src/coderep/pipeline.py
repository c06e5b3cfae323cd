"""Experiment pipeline: corpus -> pairs -> encodings -> parallel files -> baseline -> report."""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

from .ast_core.estree import ingest_estree
from .ast_core.parser import parse_js
from .dataset import SplitSpec, corpus_stats, dedup, emit_parallel, split
from .errors import CodeRepError, ConfigError, IngestError, ParseError, StageError
from .evaluation import evaluate
from .extraction import TypeSynthesizer, extract_binops, extract_call_sites
from .jsonl import read_jsonl, sha256_file, write_json, write_jsonl
from .model_adapter import MemorizerBaseline, read_parallel, write_predictions
from .mutation import BugSeeder
from .representation.pairs import EncodedExample, RepresentationEncoder
from .validation import BUG_TYPES, check_applicable, check_bug_type, check_positive_int, check_rep, check_seed

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
MINI_CORPUS = Path(__file__).parent / "data" / "mini_corpus"

HOMOGENEOUS = ("WT1", "WT2", "DB1", "DB2", "DB3", "FS1", "FS2", "FS3", "FS4", "TF1", "AST1", "AST2", "AST3", "AST4")
# Mixed rows: the two most accurate representations per bug type resolved up front.
BEST_TWO = {"swapped_args": ("TF1", "FS2"), "wrong_binop": ("DB3", "TF1"), "wrong_operands": ("DB3", "TF1")}


@dataclass(frozen=True)
class ExperimentConfig:
    eid: str = "E1"
    bug_type: str = "swapped_args"
    src_rep: str = "WT1"
    tgt_rep: str = "WT1"
    seed: int = 0
    train_files: int | None = None
    test_files: int | None = None
    val_fraction: float = 0.1
    vocab_cap: int = 30000
    k: int = 25
    idiom_size: int = 300
    exclude_commutative: bool = False
    dedup_train: bool = False
    memorizer: bool = True
    corpus: str | None = None
    out: str | None = None

    def validate(self) -> ExperimentConfig:
        check_bug_type(self.bug_type)
        check_rep(self.src_rep)
        check_rep(self.tgt_rep)
        check_applicable(self.src_rep, self.bug_type)
        check_applicable(self.tgt_rep, self.bug_type)
        check_seed(self.seed)
        check_positive_int(self.vocab_cap, "vocab_cap")
        check_positive_int(self.k, "k")
        check_positive_int(self.idiom_size, "idiom_size")
        if not 0 < self.val_fraction < 1:
            raise ConfigError(f"val_fraction must be in (0, 1), got {self.val_fraction!r}")
        return self

    def to_json(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, **asdict(self)}

    @classmethod
    def from_json(cls, obj) -> ExperimentConfig:
        if not isinstance(obj, dict):
            raise ConfigError("experiment config must be a JSON object")
        obj = dict(obj)
        version = obj.pop("schema_version", SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise ConfigError(f"unsupported config schema_version {version!r}")
        known = set(cls.__dataclass_fields__)
        unknown = set(obj) - known
        if unknown:
            raise ConfigError(f"unknown config field(s): {sorted(unknown)}")
        return cls(**obj)


def load_config(path) -> ExperimentConfig:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from exc
    return ExperimentConfig.from_json(obj)


def default_matrix(bug_type: str) -> list[ExperimentConfig]:
    """Rows E1-E18 that apply to ``bug_type``."""
    check_bug_type(bug_type)
    rows = [ExperimentConfig(f"E{i}", bug_type, r, r) for i, r in enumerate(HOMOGENEOUS, 1)]
    first, second = BEST_TWO[bug_type]
    rows += [
        ExperimentConfig("E15", bug_type, first, second),
        ExperimentConfig("E16", bug_type, second, first),
        ExperimentConfig("E17", bug_type, "WT1", "AST1"),
        ExperimentConfig("E18", bug_type, "AST1", "WT1"),
    ]
    out = []
    for row in rows:
        try:
            out.append(row.validate())
        except CodeRepError:
            continue
    return out


# -- stages ------------------------------------------------------------------

def _stage(name):
    def wrap(fn):
        def inner(*args, **kwargs):
            try:
                return fn(*args, **kwargs)
            except StageError:
                raise
            except (CodeRepError, OSError, ValueError) as exc:
                raise StageError(name, exc) from exc
        inner.__name__ = fn.__name__
        inner.__doc__ = fn.__doc__
        return inner
    return wrap


def collect(corpus) -> list[str]:
    """Relative stems of every ``.js`` or ESTree ``.json`` file, sorted."""
    root = Path(corpus)
    if not root.is_dir():
        raise FileNotFoundError(f"corpus directory not found: {root}")
    stems = {p.relative_to(root).with_suffix("").as_posix() for p in root.rglob("*")
             if p.suffix in (".js", ".json") and p.is_file()}
    return sorted(stems)


def load_ast(root, stem):
    """Parse ``stem.js``; fall back to a sibling ``stem.json`` ESTree document."""
    root = Path(root)
    js, est = root / f"{stem}.js", root / f"{stem}.json"
    if js.exists():
        try:
            return parse_js(js.read_text(encoding="utf-8")), f"{stem}.js"
        except ParseError:
            if not est.exists():
                raise
    return ingest_estree(est.read_bytes()), f"{stem}.json"


@_stage("parse")
def parse_corpus(corpus):
    asts, failures = {}, []
    for stem in collect(corpus):
        try:
            ast, name = load_ast(corpus, stem)
        except (ParseError, IngestError) as exc:
            failures.append({"file": stem, "error": str(exc)})
            continue
        asts[name] = ast
    return asts, failures


def _family(bug_type):
    return extract_call_sites if bug_type == "swapped_args" else extract_binops


@_stage("extract")
def extract_records(asts, bug_type, seed):
    extractor = _family(bug_type)
    records = [r for name in sorted(asts) for r in extractor(asts[name], name)]
    if bug_type == "swapped_args":
        records = TypeSynthesizer(seed=seed).fit_transform(records)
    return records


@_stage("split")
def split_files(files, cfg):
    n = len(files)
    test_files = cfg.test_files if cfg.test_files is not None else int(0.3 * n + 0.5)
    train_files = cfg.train_files if cfg.train_files is not None else n - test_files
    return split(files, SplitSpec(train_files, test_files, cfg.val_fraction, cfg.seed))


@_stage("mutate")
def mutate_splits(records, parts, cfg):
    seeder = BugSeeder(cfg.bug_type, cfg.seed, cfg.exclude_commutative).fit()
    where = {f: s for s, files in parts.items() for f in files}
    out = {}
    for s in ("train", "val", "test"):
        out[s] = seeder.transform([r for r in records if where.get(r.file) == s])
    return out


@_stage("dedup")
def dedup_splits(pairs, cfg):
    train = dedup(pairs["train"], "train") if cfg.dedup_train else pairs["train"]
    test = dedup(pairs["test"], "within_test")
    test = dedup(test, "test_vs_train", train=list(train) + list(pairs["val"]))
    return {"train": train, "val": pairs["val"], "test": test}


@_stage("represent")
def encode_splits(pairs, cfg):
    encoder = RepresentationEncoder(cfg.src_rep, cfg.tgt_rep, cfg.idiom_size).fit(pairs["train"])
    return {s: encoder.transform(p) for s, p in pairs.items()}


@_stage("emit")
def emit(examples, out_dir, cfg):
    return emit_parallel(examples, out_dir, vocab_cap=cfg.vocab_cap,
                         info={"seed": cfg.seed, "eid": cfg.eid})


@_stage("baseline")
def run_memorizer(data_dir, k, split_name="test"):
    src_train, tgt_train = read_parallel(data_dir, "train")
    src_eval, _ = read_parallel(data_dir, split_name)
    model = MemorizerBaseline(k=k).fit(src_train, tgt_train)
    return model.predict(src_eval)


def load_examples(data_dir, split_name) -> list[EncodedExample]:
    return [EncodedExample.from_json(obj) for obj in read_jsonl(Path(data_dir) / f"{split_name}.jsonl")]


@_stage("evaluate")
def evaluate_split(data_dir, preds, rep, split_name="test"):
    _, expected = read_parallel(data_dir, split_name)
    aux = [ex.decode_aux("tgt") for ex in load_examples(data_dir, split_name)]
    return evaluate(expected, preds, rep, aux)


def _report_text(rows) -> str:
    header = ("EID", "RID", "Accuracy", "BLEU", "Position")
    cells = [header] + [
        (r["eid"], r["rid"], f"{r['accuracy']:.2f}", f"{r['bleu']:.2f}",
         "-" if r["avg_position"] is None else f"{r['avg_position']:.2f}")
        for r in rows
    ]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    return "\n".join("  ".join(v.ljust(w) for v, w in zip(c, widths)) for c in cells) + "\n"


def rid(cfg) -> str:
    return cfg.src_rep if cfg.src_rep == cfg.tgt_rep else f"{cfg.src_rep}->{cfg.tgt_rep}"


@dataclass
class RunResult:
    config: ExperimentConfig
    out_dir: Path
    report: object = None
    stats: object = None
    manifest: dict = field(default_factory=dict)


def run(cfg: ExperimentConfig, corpus=None, out=None) -> RunResult:
    """Execute every stage for one experiment row; every byte written is a function of (corpus, cfg)."""
    try:
        cfg = cfg.validate()
    except CodeRepError as exc:
        raise StageError("config", exc) from exc
    corpus = Path(corpus or cfg.corpus or MINI_CORPUS)
    out_dir = Path(out or cfg.out or "out")
    out_dir.mkdir(parents=True, exist_ok=True)
    data_dir = out_dir / "data"

    asts, failures = parse_corpus(corpus)
    records = extract_records(asts, cfg.bug_type, cfg.seed)
    write_jsonl(out_dir / "records.jsonl", (r.to_json() for r in records))
    parts = split_files(sorted(asts), cfg)
    write_json(out_dir / "split.json", parts)
    pairs = mutate_splits(records, parts, cfg)
    pairs = dedup_splits(pairs, cfg)
    write_jsonl(out_dir / "pairs.jsonl",
                (dict(p.to_json(), split=s) for s in ("train", "val", "test") for p in pairs[s]))
    examples = encode_splits(pairs, cfg)
    emit(examples, data_dir, cfg)

    result = RunResult(replace(cfg, corpus=None, out=None), out_dir)
    if cfg.memorizer:
        preds = run_memorizer(data_dir, cfg.k)
        write_predictions(out_dir / "predictions.jsonl", preds)
        report = evaluate_split(data_dir, preds, cfg.tgt_rep)
        result.report = report
        row = {"eid": cfg.eid, "rid": rid(cfg), **report.to_json()}
        write_json(out_dir / "report.json", row)
        (out_dir / "report.txt").write_text(_report_text([row]), encoding="utf-8")

    stats = corpus_stats({cfg.bug_type: {s: len(examples[s]) for s in ("train", "val", "test")} | {"real": None}})
    result.stats = stats
    write_json(out_dir / "stats.json", stats.to_json())
    (out_dir / "stats.txt").write_text(stats.to_text(), encoding="utf-8")

    artifacts = sorted(p.relative_to(out_dir).as_posix() for p in out_dir.rglob("*")
                       if p.is_file() and p != out_dir / "manifest.json")
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "config": result.config.to_json(),
        "parse_failures": failures,
        "counts": {
            "files": len(asts), "records": len(records),
            **{f"pairs_{s}": len(pairs[s]) for s in ("train", "val", "test")},
        },
        "artifacts": {a: sha256_file(out_dir / a) for a in artifacts},
    }
    write_json(out_dir / "manifest.json", manifest)
    result.manifest = manifest
    log.info("%s %s done: %d test examples", cfg.eid, rid(cfg), len(examples["test"]))
    return result


def load_matrix(path) -> list[ExperimentConfig]:
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(obj, dict):
        version = obj.get("schema_version", SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise ConfigError(f"unsupported matrix schema_version {version!r}")
        rows = obj.get("rows", [])
    else:
        rows = obj
    return [ExperimentConfig.from_json(r) for r in rows]


def run_matrix(rows, corpus=None, out="out") -> dict:
    """Run each row in its own directory; a failing row is reported, not fatal."""
    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    summary_rows, failures = [], []
    for cfg in rows:
        row_dir = out_dir / f"{cfg.eid}_{cfg.bug_type}"
        try:
            res = run(cfg, corpus=corpus, out=row_dir)
        except StageError as exc:
            failures.append({"eid": cfg.eid, "bug_type": cfg.bug_type, "stage": exc.stage, "error": str(exc.cause)})
            continue
        if res.report is not None:
            summary_rows.append({"eid": cfg.eid, "bug_type": cfg.bug_type, "rid": rid(cfg), **res.report.to_json()})
    summary = {"schema_version": SCHEMA_VERSION, "rows": summary_rows, "failures": failures}
    write_json(out_dir / "summary.json", summary)
    (out_dir / "summary.txt").write_text(_report_text(summary_rows), encoding="utf-8")
    return summary


def write_default_matrix(path, bug_types=BUG_TYPES):
    rows = [{k: v for k, v in r.to_json().items() if k in ("eid", "bug_type", "src_rep", "tgt_rep")}
            for b in bug_types for r in default_matrix(b)]
    write_json(path, {"schema_version": SCHEMA_VERSION, "rows": rows})
