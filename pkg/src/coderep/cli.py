"""Command-line entry point: ``coderep <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path

from . import pipeline
from .dataset import SplitSpec, corpus_stats, emit_parallel, split
from .errors import (
    AlignmentError, CodeRepError, ConfigError, IngestError, NotApplicable, ParseError, SplitError, StageError,
)
from .evaluation import evaluate
from .extraction import record_from_json
from .golden import golden_check
from .jsonl import read_jsonl, write_json, write_jsonl
from .model_adapter import MemorizerBaseline, read_lines, read_parallel, read_predictions, write_predictions
from .mutation import BugSeeder, pair_from_json
from .representation.pairs import EncodedExample, RepresentationEncoder
from .validation import BUG_TYPES, REPRESENTATIONS

log = logging.getLogger("coderep")

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_PARSE, EXIT_IO, EXIT_ALIGN = 0, 1, 2, 3, 4, 5


def exit_code(exc: BaseException) -> int:
    if isinstance(exc, StageError):
        return exit_code(exc.cause)
    if isinstance(exc, (ConfigError, NotApplicable, SplitError)):
        return EXIT_CONFIG
    if isinstance(exc, (ParseError, IngestError)):
        return EXIT_PARSE
    if isinstance(exc, AlignmentError):
        return EXIT_ALIGN
    if isinstance(exc, (OSError, json.JSONDecodeError)):
        return EXIT_IO
    return EXIT_FAIL


def _out_path(args, default):
    return Path(args.out) if args.out else Path(default)


def _pairs_with_splits(path):
    rows = list(read_jsonl(path))
    return [(row.get("split"), pair_from_json(row)) for row in rows]


# -- subcommands -------------------------------------------------------------

def cmd_extract(args):
    asts, failures = pipeline.parse_corpus(args.corpus or pipeline.MINI_CORPUS)
    records = pipeline.extract_records(asts, args.bug_type, args.seed)
    n = write_jsonl(_out_path(args, "records.jsonl"), (r.to_json() for r in records))
    for f in failures:
        log.warning("skipped %s: %s", f["file"], f["error"])
    print(f"{n} records from {len(asts)} files")


def cmd_mutate(args):
    records = [record_from_json(obj) for obj in read_jsonl(args.input)]
    seeder = BugSeeder(args.bug_type, args.seed, args.exclude_commutative).fit()
    pairs = seeder.transform(records)
    n = write_jsonl(_out_path(args, "pairs.jsonl"), (p.to_json() for p in pairs))
    print(f"{n} pairs ({seeder.skipped_} degenerate sites skipped)")


def cmd_split(args):
    if args.input:
        files = sorted({obj["file"] for obj in read_jsonl(args.input)})
    else:
        files = sorted(pipeline.parse_corpus(args.corpus or pipeline.MINI_CORPUS)[0])
    n = len(files)
    test = args.test_files if args.test_files is not None else int(0.3 * n + 0.5)
    train = args.train_files if args.train_files is not None else n - test
    parts = split(files, SplitSpec(train, test, args.val_fraction, args.seed))
    write_json(_out_path(args, "split.json"), parts)
    print(" ".join(f"{k}={len(v)}" for k, v in parts.items()))


def cmd_dedup(args):
    parts = json.loads(Path(args.split).read_text(encoding="utf-8"))
    where = {f: s for s, files in parts.items() for f in files}
    by_split = {"train": [], "val": [], "test": []}
    for _, pair in _pairs_with_splits(args.input):
        s = where.get(pair.file)
        if s is not None:
            by_split[s].append(pair)
    cfg = pipeline.ExperimentConfig(dedup_train=args.dedup_train)
    kept = pipeline.dedup_splits(by_split, cfg)
    n = write_jsonl(_out_path(args, "pairs.dedup.jsonl"),
                    (dict(p.to_json(), split=s) for s in ("train", "val", "test") for p in kept[s]))
    print(f"{n} pairs kept: " + " ".join(f"{s}={len(kept[s])}" for s in kept))


def cmd_represent(args):
    rows = _pairs_with_splits(args.input)
    train = [p for s, p in rows if s == "train"] or [p for _, p in rows]
    encoder = RepresentationEncoder(args.src_rep, args.tgt_rep, args.idiom_size).fit(train)
    examples = encoder.transform([p for _, p in rows])
    n = write_jsonl(_out_path(args, "examples.jsonl"),
                    (dict(ex.to_json(), split=s or "train") for (s, _), ex in zip(rows, examples)))
    print(f"{n} examples ({args.src_rep} -> {args.tgt_rep})")


def cmd_emit(args):
    grouped: dict = {}
    for obj in read_jsonl(args.input):
        grouped.setdefault(obj.get("split", "train"), []).append(EncodedExample.from_json(obj))
    manifest = emit_parallel(grouped, _out_path(args, "data"), vocab_cap=args.vocab, info={"seed": args.seed})
    print(json.dumps(manifest.counts, sort_keys=True))


def cmd_train_baseline(args):
    src, tgt = read_parallel(args.input, "train")
    model = MemorizerBaseline(k=args.k).fit(src, tgt)
    preds = model.predict(read_lines(Path(args.input) / f"{args.split}.src"))
    n = write_predictions(_out_path(args, "predictions.jsonl"), preds)
    print(f"{n} prediction sets from {len(model.index_)} memorized sources")


def cmd_evaluate(args):
    data = Path(args.input)
    rep = args.tgt_rep or json.loads((data / "manifest.json").read_text(encoding="utf-8"))["tgt_rep"]
    _, expected = read_parallel(data, args.split)
    preds = read_predictions(args.predictions)
    aux = None
    if (data / f"{args.split}.jsonl").exists():
        aux = [ex.decode_aux("tgt") for ex in pipeline.load_examples(data, args.split)]
    report = evaluate(expected, preds, rep, aux, k=args.k)
    if args.out:
        write_json(args.out, report.to_json())
    print(json.dumps(report.to_json(), sort_keys=True))


def cmd_stats(args):
    data = Path(args.input)
    manifest = json.loads((data / "manifest.json").read_text(encoding="utf-8"))
    counts = {s: len(read_lines(data / f"{s}.src")) for s in ("train", "val", "test") if (data / f"{s}.src").exists()}
    real = len(read_lines(data / "real.src")) if (data / "real.src").exists() else None
    report = corpus_stats({manifest.get("bug_type", "unknown"): {**counts, "real": real}})
    if args.out:
        write_json(args.out, report.to_json())
    print(report.to_text(), end="")


def cmd_golden_check(args):
    ok = True
    for rep, expected, got, good in golden_check():
        ok &= good
        print(f"{'PASS' if good else 'FAIL'} {rep:<5} {got}" + ("" if good else f"  (expected: {expected})"))
    return EXIT_OK if ok else EXIT_FAIL


def _config_from_args(args):
    cfg = pipeline.load_config(args.config) if args.config else pipeline.ExperimentConfig()
    overrides = {k: getattr(args, k) for k in ("bug_type", "src_rep", "tgt_rep", "seed", "k", "eid")
                 if getattr(args, k, None) is not None}
    if args.src_rep is not None and args.tgt_rep is None:
        overrides["tgt_rep"] = args.src_rep
    if getattr(args, "vocab", None) is not None:
        overrides["vocab_cap"] = args.vocab
    return replace(cfg, **overrides)


def cmd_run(args):
    cfg = _config_from_args(args)
    res = pipeline.run(cfg, corpus=args.corpus, out=args.out or cfg.out or "out")
    if res.report is not None:
        print((res.out_dir / "report.txt").read_text(encoding="utf-8"), end="")


def cmd_run_matrix(args):
    if args.config:
        rows = pipeline.load_matrix(args.config)
    else:
        rows = pipeline.default_matrix(args.bug_type or "swapped_args")
    if args.seed is not None:
        rows = [replace(r, seed=args.seed) for r in rows]
    summary = pipeline.run_matrix(rows, corpus=args.corpus, out=args.out or "out")
    print((Path(args.out or "out") / "summary.txt").read_text(encoding="utf-8"), end="")
    for f in summary["failures"]:
        log.error("row %s (%s) failed in stage %s: %s", f["eid"], f["bug_type"], f["stage"], f["error"])


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="coderep", description="Code representations for learned repair of name-based bugs.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help, *flags):
        p = sub.add_parser(name, help=help)
        p.set_defaults(fn=fn)
        p.add_argument("--out", help="output file or directory")
        for flag in flags:
            flag(p)
        return p

    def corpus(p):
        p.add_argument("--corpus", help="directory of .js / ESTree .json files (default: bundled mini corpus)")

    def seed(default=0):
        return lambda p: p.add_argument("--seed", type=int, default=default)

    def bug(required=False, default="swapped_args"):
        return lambda p: p.add_argument("--bug-type", choices=BUG_TYPES, default=None if required else default)

    def reps(p):
        p.add_argument("--src-rep", choices=REPRESENTATIONS, default=None)
        p.add_argument("--tgt-rep", choices=REPRESENTATIONS, default=None)

    def inp(help):
        return lambda p: p.add_argument("--input", required=True, help=help)

    def k(p):
        p.add_argument("--k", type=int, default=25)

    def split_name(p):
        p.add_argument("--split", default="test", help="split to predict/evaluate")

    add("extract", cmd_extract, "extract call sites or binary operations", corpus, seed(), bug())
    p = add("mutate", cmd_mutate, "seed bugs into extracted records", inp("records JSONL"), seed(), bug())
    p.add_argument("--exclude-commutative", action="store_true")
    p = add("split", cmd_split, "file-level train/val/test split", corpus, seed())
    p.add_argument("--input", help="records or pairs JSONL (file names are taken from it)")
    p.add_argument("--train-files", type=int)
    p.add_argument("--test-files", type=int)
    p.add_argument("--val-fraction", type=float, default=0.1)
    p = add("dedup", cmd_dedup, "deduplicate pairs against a split", inp("pairs JSONL"))
    p.add_argument("--split", required=True, help="split JSON written by `coderep split`")
    p.add_argument("--dedup-train", action="store_true")
    p = add("represent", cmd_represent, "encode pairs under a representation", inp("pairs JSONL"))
    p.add_argument("--src-rep", choices=REPRESENTATIONS, default="WT1")
    p.add_argument("--tgt-rep", choices=REPRESENTATIONS, default="WT1")
    p.add_argument("--idiom-size", type=int, default=300)
    p = add("emit", cmd_emit, "write parallel .src/.tgt files and vocabularies", inp("examples JSONL"), seed())
    p.add_argument("--vocab", type=int, default=30000, help="vocabulary cap per side")
    add("train-baseline", cmd_train_baseline, "memorizer predictions for an emitted data directory",
        inp("data directory"), k, split_name)
    p = add("evaluate", cmd_evaluate, "score predictions", inp("data directory"), split_name)
    p.add_argument("--predictions", required=True)
    p.add_argument("--tgt-rep", choices=REPRESENTATIONS, default=None)
    p.add_argument("--k", type=int, default=None)
    add("stats", cmd_stats, "per-split example counts", inp("data directory"))
    p = add("run", cmd_run, "run one experiment end to end", corpus, reps, k)
    p.add_argument("--config", help="experiment config JSON")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--bug-type", choices=BUG_TYPES, default=None)
    p.add_argument("--eid", default=None)
    p.add_argument("--vocab", type=int, default=None)
    p.set_defaults(k=None)
    p = add("run-matrix", cmd_run_matrix, "run every row of an experiment matrix", corpus)
    p.add_argument("--config", help="matrix JSON (default: the E1-E18 rows for --bug-type)")
    p.add_argument("--bug-type", choices=BUG_TYPES, default=None)
    p.add_argument("--seed", type=int, default=None)
    add("golden-check", cmd_golden_check, "encode the reference statement under all representations")
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        rc = args.fn(args)
    except (CodeRepError, OSError, ValueError) as exc:
        stage = f"[{exc.stage}] " if isinstance(exc, StageError) else ""
        cause = exc.cause if isinstance(exc, StageError) else exc
        print(f"coderep {args.command}: {stage}{type(cause).__name__}: {cause}", file=sys.stderr)
        return exit_code(exc)
    return EXIT_OK if rc is None else rc


if __name__ == "__main__":
    sys.exit(main())
