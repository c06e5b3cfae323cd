"""Hypothesis properties for the invariants that hold over all inputs."""

from collections import Counter
from dataclasses import replace

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from coderep.ast_core import parse_js, print_tokens
from coderep.dataset import SplitSpec, build_vocab, dedup, dedup_key, split
from coderep.evaluation import PredictionSet, accuracy, bleu4_smooth, edit_distance
from coderep.extraction import CallSiteRecord, extract_binops, extract_call_sites
from coderep.mutation import mutate_swap_args, mutate_swap_operands
from coderep.errors import DegenerateMutation
from coderep.representation import (
    AbstractionMap, EncodeContext, decode, encode, join_subwords, split_identifier, substitute,
)

KEYWORDS = {"if", "in", "do", "for", "new", "var", "let", "try", "this", "else", "case", "void", "with", "enum",
            "null", "true", "false", "while", "break", "catch", "throw", "const", "class", "super", "return",
            "typeof", "delete", "switch", "export", "import", "default", "finally", "extends", "function",
            "continue", "debugger", "instanceof", "yield", "static", "of", "get", "set", "async", "await",
            "undefined", "NaN", "Infinity", "arguments", "eval"}

names = st.from_regex(r"\A[A-Za-z_$][A-Za-z0-9_$]{0,10}\Z").filter(lambda s: s not in KEYWORDS)
numbers = st.sampled_from(["0", "1", "2", "42", "3.5", "0x1F", "1e3"])
strings = st.sampled_from(['"a"', "'b c'", '""', '"x\\"y"'])
ops = st.sampled_from(["+", "-", "*", "/", "%", "<", "<=", ">", ">=", "==", "===", "!=", "&&", "||", "&", "|",
                       "^", "<<", ">>", "instanceof", "in"])

atoms = st.one_of(names, numbers, strings)


def _compound(inner):
    return st.one_of(
        st.tuples(inner, ops, inner).map(lambda t: f"{t[0]} {t[1]} {t[2]}"),
        inner.map(lambda e: f"({e})"),
        st.tuples(names, st.lists(inner, max_size=3)).map(lambda t: f"{t[0]}({', '.join(t[1])})"),
        st.tuples(inner, names).map(lambda t: f"({t[0]}).{t[1]}"),
        st.tuples(inner, inner, inner).map(lambda t: f"{t[0]} ? {t[1]} : {t[2]}"),
        inner.map(lambda e: f"!{e}"),
        st.lists(inner, max_size=3).map(lambda xs: f"[{', '.join(xs)}]"),
    )


exprs = st.recursive(atoms, _compound, max_leaves=12)
statements = st.one_of(
    exprs.map(lambda e: f"({e});"),
    st.tuples(names, exprs).map(lambda t: f"var {t[0]} = {t[1]};"),
    st.tuples(names, exprs).map(lambda t: f"{t[0]} = {t[1]};"),
    st.tuples(exprs, exprs).map(lambda t: f"if ({t[0]}) {{ x = {t[1]}; }}"),
    st.tuples(names, exprs, exprs).map(lambda t: f"{t[0]}({t[1]}, {t[2]});"),
)
programs = st.lists(statements, min_size=1, max_size=4).map("\n".join)

FAST = settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@FAST
@given(programs)
def test_print_parse_fixed_point(src):
    ast = parse_js(src)
    again = parse_js(" ".join(print_tokens(ast)))
    assert again == ast
    assert print_tokens(again) == print_tokens(ast)


@FAST
@given(names)
def test_subword_split_round_trip(name):
    parts = split_identifier(name)
    assert join_subwords(parts) == [name]
    assert all(p for p in parts)


@FAST
@given(programs)
def test_tf1_substitute_inverts_abstraction(src):
    for stmt in parse_js(src).children:
        amap = AbstractionMap(idioms=frozenset({"x"}))
        toks = encode("TF1", stmt, EncodeContext(), amap)
        expected = [str(t) for t in print_tokens(stmt)]
        if stmt.kind == "ExpressionStatement":
            expected = expected[:-1]
        assert substitute(toks, amap) == expected
        assert substitute(toks, AbstractionMap.from_json(amap.to_json())) == expected


@FAST
@given(programs)
def test_untyped_lossless_decoders(src):
    for stmt in parse_js(src).children:
        stmt = stmt.strip()
        expected = [str(t) for t in print_tokens(stmt)]
        if stmt.kind == "ExpressionStatement":
            expected = expected[:-1]
        for rep in ("WT1", "DB1", "AST1"):
            assert decode(rep, encode(rep, stmt, EncodeContext())) == expected, rep


@FAST
@given(programs)
def test_swaps_are_involutions(src):
    ast = parse_js(src)
    for rec, mutator in [(r, mutate_swap_args) for r in extract_call_sites(ast)] + \
                        [(r, mutate_swap_operands) for r in extract_binops(ast)]:
        try:
            once = mutator(rec)
        except DegenerateMutation:
            continue
        twice = mutator(replace(rec, statement=once.buggy_stmt))
        assert twice.buggy_stmt == rec.statement
        assert Counter(print_tokens(once.buggy_stmt)) == Counter(print_tokens(rec.statement))


tokens = st.lists(st.sampled_from("abcde"), max_size=8)


@FAST
@given(tokens, tokens, tokens)
def test_edit_distance_metric(a, b, c):
    d = edit_distance(a, b)
    assert d == edit_distance(b, a)
    assert abs(len(a) - len(b)) <= d <= max(len(a), len(b))
    assert (d == 0) == (a == b)
    assert edit_distance(a, c) <= d + edit_distance(b, c)


@FAST
@given(st.lists(st.sampled_from("abcde"), min_size=1, max_size=20))
def test_bleu_identity(x):
    assert abs(bleu4_smooth(x, x) - 100) < 1e-9


@FAST
@given(st.lists(st.tuples(st.sampled_from("xyz"), st.lists(st.sampled_from("xyz"), max_size=6)), max_size=30))
def test_accuracy_monotone_in_k(rows):
    expected = [e for e, _ in rows]
    preds = [PredictionSet(i, tuple(c)) for i, (_, c) in enumerate(rows)]
    accs = [accuracy(expected, preds, k) for k in range(1, 8)]
    assert accs == sorted(accs)
    assert accs[-1] == accuracy(expected, preds)


@FAST
@given(st.integers(0, 40), st.data())
def test_split_partitions_files(n, data):
    files = [f"f{i}.js" for i in range(n)]
    test = data.draw(st.integers(0, n))
    train = data.draw(st.integers(0, n - test))
    frac = data.draw(st.floats(0.01, 0.99))
    seed = data.draw(st.integers(0, 2**64 - 1))
    s = split(files, SplitSpec(train, test, frac, seed))
    assert len(s["test"]) == test and len(s["train"]) + len(s["val"]) == train
    assert len(set(s["train"]) | set(s["val"]) | set(s["test"])) == train + test
    assert s == split(list(reversed(files)), SplitSpec(train, test, frac, seed))


record = st.builds(
    lambda c, a, b: CallSiteRecord(c, "", (a,), (b,), (f"ID:{a}", f"ID:{b}"), ("unknown",) * 2, ("number",) * 2),
    st.sampled_from("fgh"), st.sampled_from("abc"), st.sampled_from("abc"),
)


@FAST
@given(st.lists(record, max_size=30), st.lists(record, max_size=30))
def test_dedup_disjoint_and_idempotent(test, train):
    out = dedup(dedup(test, "within_test"), "test_vs_train", train=train)
    assert not {dedup_key(r) for r in out} & {dedup_key(r) for r in train}
    assert len({dedup_key(r) for r in out}) == len(out)
    assert dedup(out, "within_test") == out


@FAST
@given(st.lists(st.sampled_from("abcdefgh"), max_size=60), st.integers(1, 10))
def test_vocab_cap_and_mapping(toks, cap):
    v = build_vocab(toks, cap)
    assert len(v) <= cap and len(v) == min(cap, len(set(toks)))
    assert len(v.map(toks)) == len(toks)
    counts = Counter(toks)
    if v.tokens:
        worst = min(counts[t] for t in v.tokens)
        assert all(counts[t] <= worst for t in set(toks) - set(v.tokens))
