"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is printed in the summary.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import math
import random
import time
from collections import Counter
from contextlib import contextmanager
from dataclasses import replace
from pathlib import Path

import pytest
from jsgen import programs

from coderep.ast_core import parse_js, print_tokens
from coderep.cli import main
from coderep.dataset import STATS_COLUMNS
from coderep.errors import DegenerateMutation, NotApplicable
from coderep.evaluation import accuracy, bleu4_smooth, edit_distance
from coderep.extraction import TypeSynthesizer, extract_binops, extract_call_sites
from coderep.golden import golden_check
from coderep.model_adapter import MemorizerBaseline, read_lines, read_parallel
from coderep.mutation import GROUP_OF, mutate, mutate_swap_args, mutate_swap_operands
from coderep.pipeline import ExperimentConfig, run
from coderep.representation import (
    LOSSLESS, AbstractionMap, EncodeContext, decode, encode, is_automatically_patchable, wt2_literals,
)
from coderep.validation import REPRESENTATIONS

RESULTS = {}


@contextmanager
def criterion(n, title):
    try:
        yield
    except BaseException as exc:
        RESULTS[n] = (False, f"{title}: {type(exc).__name__}: {exc}".splitlines()[0][:200])
        raise
    RESULTS[n] = (True, title)


def without_terminator(stmt, toks):
    toks = [str(t) for t in toks]
    return toks[:-1] if stmt.kind == "ExpressionStatement" else toks


def test_criterion_1_golden_suite():
    with criterion(1, "all 14 reference encodings reproduced token-for-token in < 1 s"):
        start = time.perf_counter()
        rows = golden_check()
        elapsed = time.perf_counter() - start
        assert len(rows) == 14
        bad = [(rep, got) for rep, _, got, ok in rows if not ok]
        assert not bad, bad
        assert elapsed < 1.0, elapsed


def test_criterion_2_patchability_partition():
    with criterion(2, "automatic patchability partitions the 14 representations"):
        yes = {"WT1", "WT2", "DB1", "DB2", "TF1", "AST1", "AST2"}
        no = {"DB3", "FS1", "FS2", "FS3", "FS4", "AST3", "AST4"}
        assert yes | no == set(REPRESENTATIONS)
        assert all(is_automatically_patchable(r) for r in yes)
        assert not any(is_automatically_patchable(r) for r in no)


def _generated_statements(n, seed):
    out = []
    for p in programs(n, seed=seed):
        out += [s.strip() for s in parse_js(p).children]
    return out


def _site_statements(n, seed):
    """Fixed statements with a two-argument call site and synthesized types."""
    recs = []
    for i, p in enumerate(programs(n, seed=seed)):
        recs += extract_call_sites(parse_js("function w() {" + p + "}"), f"g{i}.js")
    recs = [replace(r, statement=r.statement.strip()) for r in TypeSynthesizer(0).fit_transform(recs)]
    return recs


def test_criterion_3_lossless_round_trip():
    with criterion(3, "decode(encode(s)) == printed s for every lossless rep on >= 1,000 statements, 0 failures"):
        stmts = _generated_statements(600, seed=101)
        assert len(stmts) >= 1000
        failures, checked = [], Counter()
        for stmt in stmts:
            expected = without_terminator(stmt, print_tokens(stmt))
            for rep in ("WT1", "WT2", "DB1", "TF1", "AST1"):
                amap = AbstractionMap(idioms=frozenset({"a", "fn"}))
                toks = encode(rep, stmt, EncodeContext(), amap)
                aux = amap if rep == "TF1" else wt2_literals(print_tokens(stmt)) if rep == "WT2" else None
                if decode(rep, toks, aux) != expected:
                    failures.append((rep, " ".join(expected)))
                checked[rep] += 1
        recs = _site_statements(1100, seed=102)
        assert len(recs) >= 1000
        for rec in recs:
            expected = without_terminator(rec.statement, print_tokens(rec.statement))
            ctx = EncodeContext("swapped_args", rec.path, rec.synth_types)
            for rep in ("DB2", "AST2"):
                if decode(rep, encode(rep, rec.statement, ctx)) != expected:
                    failures.append((rep, " ".join(expected)))
                checked[rep] += 1
        assert set(checked) == LOSSLESS
        assert min(checked.values()) >= 1000
        assert not failures, failures[:5]


def _random_records(seed):
    calls, ops = [], []
    for i, p in enumerate(programs(2200, seed=seed)):
        ast = parse_js("function w() {" + p + "}")
        calls += extract_call_sites(ast, f"g{i}.js")
        ops += extract_binops(ast, f"g{i}.js")
    return calls, ops


def test_criterion_4_mutation_properties():
    with criterion(4, "swaps are involutions on 2,000 records; wrong-operator is single-token, in-group, uniform"):
        calls, ops = _random_records(seed=103)
        for mutator, recs in ((mutate_swap_args, calls), (mutate_swap_operands, ops)):
            done = 0
            for rec in recs:
                try:
                    once = mutator(rec)
                except DegenerateMutation:
                    continue
                twice = mutator(replace(rec, statement=once.buggy_stmt))
                assert twice.buggy_stmt == rec.statement
                done += 1
                if done == 2000:
                    break
            assert done == 2000, (mutator.__name__, done)
        checked = 0
        for i, rec in enumerate(ops):
            try:
                pair = mutate(rec, "wrong_binop", 0, i)
            except DegenerateMutation:
                continue
            a, b = print_tokens(pair.fixed_stmt), print_tokens(pair.buggy_stmt)
            assert len(a) == len(b) and sum(x != y for x, y in zip(a, b)) == 1
            assert pair.record.buggy_op in GROUP_OF[pair.record.correct_op] and pair.record.buggy_op != pair.record.correct_op
            checked += 1
        assert checked >= 2000
        (rec,) = extract_binops(parse_js("a < b;"), "u.js")
        counts = Counter(mutate(rec, "wrong_binop", 0, i).record.buggy_op for i in range(10_000))
        group = sorted(set(GROUP_OF["<"]) - {"<"})
        assert sorted(counts) == group
        expected = 10_000 / len(group)
        chi2 = sum((counts[g] - expected) ** 2 / expected for g in group)
        stats = pytest.importorskip("scipy.stats")
        p = stats.chi2.sf(chi2, len(group) - 1)
        assert p > 0.01, (chi2, p)
        sigma = math.sqrt(10_000 * (1 / len(group)) * (1 - 1 / len(group)))
        assert all(abs(counts[g] - expected) <= 3 * sigma for g in group)


@pytest.mark.parametrize("bug", ["swapped_args", "wrong_binop", "wrong_operands"])
def test_criterion_5_dedup_pinned_by_memorizer(tmp_path, bug):
    with criterion(5, "memorizer: 100% held-in, exactly 0% on deduplicated test, each run < 30 s"):
        start = time.perf_counter()
        res = run(ExperimentConfig(bug_type=bug), out=tmp_path)
        assert res.report.n > 0
        assert res.report.accuracy == 0.0
        assert time.perf_counter() - start < 30
        start = time.perf_counter()
        src, tgt = read_parallel(tmp_path / "data", "train")
        model = MemorizerBaseline(k=25).fit(src, tgt)
        assert accuracy(tgt, model.predict(src)) == 100.0
        assert time.perf_counter() - start < 30


def _restricted_growth(n):
    """All sequences of length n up to relabeling of symbols."""
    if n == 0:
        yield ()
        return
    for prefix in _restricted_growth(n - 1):
        for sym in range((max(prefix) + 2) if prefix else 1):
            yield prefix + (sym,)


def _edit_script_oracle(a, b):
    """Minimum over every edit script, enumerated recursively without a table."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    return min(_edit_script_oracle(a[1:], b) + 1, _edit_script_oracle(a, b[1:]) + 1,
               _edit_script_oracle(a[1:], b[1:]) + (a[0] != b[0]))


def test_criterion_6_metric_oracles():
    with criterion(6, "BLEU identity and reference agreement within 1e-6; edit distance equals brute force (len <= 8)"):
        r = random.Random(104)
        for _ in range(50):
            x = r.choices("abcdef", k=r.randint(1, 12))
            assert abs(bleu4_smooth(x, x) - 100) <= 1e-9
        nltk_bleu = pytest.importorskip("nltk.translate.bleu_score")
        smooth = nltk_bleu.SmoothingFunction().method2
        for _ in range(20):
            ref = r.choices("abcdefg", k=r.randint(4, 14))
            cand = r.choices("abcdefg", k=r.randint(4, 14))
            ref_score = 100 * nltk_bleu.sentence_bleu([ref], cand, smoothing_function=smooth)
            assert abs(bleu4_smooth(cand, ref) - ref_score) <= 1e-6
        n = 0
        for total in range(9):
            for joint in _restricted_growth(total):
                for cut in range(total + 1):
                    a, b = joint[:cut], joint[cut:]
                    assert edit_distance(a, b) == _edit_script_oracle(a, b), (a, b)
                    n += 1
        assert n > 40_000


def _tree_bytes(d):
    return {p.relative_to(d).as_posix(): p.read_bytes() for p in sorted(Path(d).rglob("*")) if p.is_file()}


def test_criterion_7_determinism(tmp_path):
    with criterion(7, "two identical runs give byte-identical manifests and data files"):
        cfg = ExperimentConfig(eid="E15", src_rep="TF1", tgt_rep="FS2", seed=11)
        a = run(cfg, out=tmp_path / "a")
        b = run(cfg, out=tmp_path / "b")
        assert a.manifest == b.manifest
        assert (tmp_path / "a/manifest.json").read_bytes() == (tmp_path / "b/manifest.json").read_bytes()
        assert _tree_bytes(tmp_path / "a") == _tree_bytes(tmp_path / "b")


def test_criterion_8_stats_report(tmp_path):
    with criterion(8, "stats columns are bug_type/Train/Val/Test/Real and counts equal emitted line counts"):
        res = run(ExperimentConfig(bug_type="wrong_binop", src_rep="DB3", tgt_rep="DB3"), out=tmp_path)
        assert STATS_COLUMNS == ("bug_type", "train", "val", "test", "real")
        (row,) = res.stats.to_json()
        assert tuple(row) == STATS_COLUMNS
        for s in ("train", "val", "test"):
            src = read_lines(tmp_path / "data" / f"{s}.src")
            tgt = read_lines(tmp_path / "data" / f"{s}.tgt")
            assert row[s] == len(src) == len(tgt)
        assert row["real"] is None
        header = (tmp_path / "stats.txt").read_text().splitlines()[0].split()
        assert header == list(STATS_COLUMNS)


def test_criterion_9_applicability(tmp_path):
    with criterion(9, "FS1-FS4 and AST2-AST3 are rejected for both binary-operator bug types"):
        for bug in ("wrong_binop", "wrong_operands"):
            for rep in ("FS1", "FS2", "FS3", "FS4", "AST2", "AST3"):
                for src, tgt in ((rep, rep), ("WT1", rep), (rep, "WT1")):
                    with pytest.raises(NotApplicable):
                        ExperimentConfig(bug_type=bug, src_rep=src, tgt_rep=tgt).validate()
                out = tmp_path / f"{bug}-{rep}"
                assert main(["run", "--bug-type", bug, "--src-rep", rep, "--out", str(out)]) == 2
                assert not out.exists()
            for rep in ("WT1", "DB3", "TF1", "AST4"):
                ExperimentConfig(bug_type=bug, src_rep=rep, tgt_rep=rep).validate()
        for rep in ("FS1", "FS2", "FS3", "FS4", "AST2", "AST3"):
            ExperimentConfig(bug_type="swapped_args", src_rep=rep, tgt_rep=rep).validate()
