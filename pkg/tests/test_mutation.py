import json
import math
import random
from collections import Counter
from dataclasses import replace

import pytest
from jsgen import programs

from coderep.ast_core import parse_js, print_tokens
from coderep.errors import ConfigError, DegenerateMutation
from coderep.extraction import extract_binops, extract_call_sites
from coderep.mutation import (
    GROUP_OF, BugSeeder, derive_seed, mutate, mutate_swap_args, mutate_swap_operands, mutate_wrong_operator,
    operator_candidates, pair_from_json,
)


def text(node):
    return " ".join(print_tokens(node))


def call(src):
    return extract_call_sites(parse_js(src), "t.js")[0]


def binop(src):
    return extract_binops(parse_js(src), "t.js")[-1]


class Stub:
    def __init__(self, pick):
        self.pick = pick

    def choice(self, seq):
        return self.pick


@pytest.fixture(scope="module")
def random_records():
    calls, ops = [], []
    for i, p in enumerate(programs(600, seed=21)):
        ast = parse_js("function w() {" + p + "}")
        calls += extract_call_sites(ast, f"g{i}.js")
        ops += extract_binops(ast, f"g{i}.js")
    return calls, ops


def test_reference_swap():
    pair = mutate_swap_args(call("setTimeout(fn, delay);"))
    assert text(pair.buggy_stmt) == "setTimeout ( delay , fn ) ;"
    assert text(pair.fixed_stmt) == "setTimeout ( fn , delay ) ;"


def test_identical_arguments_are_degenerate():
    with pytest.raises(DegenerateMutation):
        mutate_swap_args(call("f(x, x);"))
    with pytest.raises(DegenerateMutation):
        mutate_swap_operands(binop("x == x;"))


def test_swap_operands_example():
    assert text(mutate_swap_operands(binop("i <= len;")).buggy_stmt) == "len <= i ;"


def test_swap_keeps_needed_parens():
    pair = mutate_swap_operands(binop("x = (a + b) * c;"))
    assert text(pair.buggy_stmt) == "x = c * ( a + b ) ;"


def test_swap_that_would_add_parens_is_degenerate():
    # a - b - c parses as (a - b) - c; swapping the outer operands needs new parens
    with pytest.raises(DegenerateMutation):
        mutate_swap_operands(binop("x = a - b - c;"))


def test_exclude_commutative():
    rec = binop("a + b;")
    mutate_swap_operands(rec)
    with pytest.raises(DegenerateMutation):
        mutate_swap_operands(rec, exclude_commutative=True)


def _twice(mutator, rec):
    once = mutator(rec)
    return once, mutator(replace(rec, statement=once.buggy_stmt))


def test_swaps_are_involutions(random_records):
    calls, ops = random_records
    checked = 0
    for mutator, recs in ((mutate_swap_args, calls), (mutate_swap_operands, ops)):
        for rec in recs[:1000]:
            try:
                once, twice = _twice(mutator, rec)
            except DegenerateMutation:
                continue
            assert once.buggy_stmt != once.fixed_stmt
            assert twice.buggy_stmt == rec.statement
            assert print_tokens(twice.buggy_stmt) == print_tokens(rec.statement)
            checked += 1
    assert checked >= 1000


def test_stubbed_draw():
    pair = mutate_wrong_operator(binop("a < b;"), Stub("<="))
    assert text(pair.buggy_stmt) == "a <= b ;"
    assert (pair.record.correct_op, pair.record.buggy_op) == ("<", "<=")
    with pytest.raises(DegenerateMutation):
        mutate_wrong_operator(binop("a < b;"), Stub("+"))


def test_wrong_operator_single_token_and_group(random_records):
    _, ops = random_records
    n = 0
    for i, rec in enumerate(ops[:2000]):
        try:
            pair = mutate(rec, "wrong_binop", 0, i)
        except DegenerateMutation:
            continue
        a, b = print_tokens(pair.fixed_stmt), print_tokens(pair.buggy_stmt)
        assert len(a) == len(b) and sum(x != y for x, y in zip(a, b)) == 1
        assert pair.record.buggy_op in GROUP_OF[pair.record.correct_op]
        assert pair.record.buggy_op != pair.record.correct_op
        n += 1
    assert n > 500


def test_candidates_skip_replacements_that_need_new_parens():
    inner, outer = extract_binops(parse_js("x = a + b * c;"))
    assert operator_candidates(inner) == ["/", "%"]
    assert operator_candidates(outer) == ["-"]
    assert sorted(operator_candidates(binop("x = a < b;"))) == sorted(set(GROUP_OF["<"]) - {"<"})


def test_draws_are_uniform_within_group():
    rec = binop("a < b;")
    counts = Counter(mutate(rec, "wrong_binop", 0, i).record.buggy_op for i in range(10_000))
    others = sorted(set(GROUP_OF["<"]) - {"<"})
    assert sorted(counts) == others
    expected = 10_000 / len(others)
    p = 1 / len(others)
    sigma = math.sqrt(10_000 * p * (1 - p))
    assert all(abs(counts[o] - expected) <= 3 * sigma for o in others)
    chi2 = sum((counts[o] - expected) ** 2 / expected for o in others)
    stats = pytest.importorskip("scipy.stats")
    assert stats.chi2.sf(chi2, len(others) - 1) > 0.01


def test_determinism():
    rec = binop("a < b;")
    assert mutate(rec, "wrong_binop", 7, 3).record.buggy_op == mutate(rec, "wrong_binop", 7, 3).record.buggy_op
    assert derive_seed(1, "a.js", 0) == derive_seed(1, "a.js", 0)
    assert derive_seed(1, "a.js", 0) != derive_seed(1, "a.js", 1)


def test_seeder_independent_of_file_order(records):
    recs = records["wrong_binop"]
    by_file = {}
    for r in recs:
        by_file.setdefault(r.file, []).append(r)
    files = sorted(by_file)
    random.Random(3).shuffle(files)
    shuffled = [r for f in files for r in by_file[f]]
    a = {(p.record.file, p.record.path, p.record.buggy_op, p.seed_draw) for p in BugSeeder("wrong_binop", 9).fit().transform(recs)}
    b = {(p.record.file, p.record.path, p.record.buggy_op, p.seed_draw) for p in BugSeeder("wrong_binop", 9).fit().transform(shuffled)}
    assert a == b


def test_seeder_params_and_validation():
    est = BugSeeder("wrong_operands", seed=4)
    assert est.get_params() == {"bug_type": "wrong_operands", "seed": 4, "exclude_commutative": False}
    with pytest.raises(ConfigError):
        BugSeeder("nope").fit()
    with pytest.raises(ConfigError):
        BugSeeder(seed=-1).fit()


def test_seeder_skips_degenerate():
    recs = extract_call_sites(parse_js("f(x, x); g(a, b);"), "t.js")
    est = BugSeeder("swapped_args").fit()
    out = est.transform(recs)
    assert len(out) == 1 and est.skipped_ == 1


def test_pairs_rebuild_from_json(pairs):
    for bug in pairs:
        for p in pairs[bug][:150]:
            obj = json.loads(json.dumps(p.to_json()))
            back = pair_from_json(obj)
            assert back.to_json() == obj
            assert back.buggy_stmt == p.buggy_stmt
