import itertools
import random

import pytest

from coderep.errors import AlignmentError, EmptyReference
from coderep.evaluation import (
    PredictionSet, accuracy, align, bleu4_smooth, corpus_bleu, edit_distance, evaluate, first_hit_position, is_patch,
)
from coderep.golden import EXPECTED
from coderep.validation import REPRESENTATIONS


def ps(i, *cands):
    return PredictionSet(i, cands)


def test_accuracy_examples():
    assert accuracy(["x"], [ps(0, "y", "x")]) == 100.0
    assert accuracy(["x", "y"], [ps(0), ps(1)]) == 0.0
    assert accuracy(["x"], [ps(0, "y", "x")], k=1) == 0.0
    assert accuracy([], []) == 0.0


def _fixture(n=200, seed=0):
    r = random.Random(seed)
    vocab = ["a", "b", "c", "d"]
    expected = [" ".join(r.choices(vocab, k=r.randint(1, 3))) for _ in range(n)]
    preds = [ps(i, *[" ".join(r.choices(vocab, k=r.randint(1, 3))) for _ in range(r.randint(0, 6))])
             for i in range(n)]
    return expected, preds


def test_accuracy_and_position_match_linear_scan():
    expected, preds = _fixture()
    for k in (1, 3, None):
        hits, ranks = 0, []
        for e, p in zip(expected, preds):
            cands = [" ".join(c) for c in p.candidates][: k or None]
            if e in set(cands):
                hits += 1
                ranks.append(cands.index(e) + 1)
        assert accuracy(expected, preds, k) == pytest.approx(100 * hits / len(expected))
        assert first_hit_position(expected, preds, k) == pytest.approx(sum(ranks) / len(ranks))


def test_accuracy_monotone_in_k():
    expected, preds = _fixture(seed=4)
    accs = [accuracy(expected, preds, k) for k in range(1, 8)]
    assert accs == sorted(accs)


def test_position_examples():
    assert first_hit_position(["x"], [ps(0, "x")]) == 1
    assert first_hit_position(["x", "y"], [ps(0, "x"), ps(1, "a", "b", "y")]) == 2.0
    assert first_hit_position(["x"], [ps(0, "y")]) is None


def test_alignment_errors():
    with pytest.raises(AlignmentError):
        align(["x", "y"], [ps(0, "x")])
    with pytest.raises(AlignmentError):
        align(["x"], [ps(0), ps(0)])
    rows = align({"b": "x", "a": "y"}, [ps("b", "x"), ps("a")])
    assert [r[0] for r in rows] == ["a", "b"]


def test_bleu_examples():
    assert bleu4_smooth("a b c d e", "a b c d e") == pytest.approx(100, abs=1e-9)
    assert bleu4_smooth("a b", "a b") == pytest.approx(100, abs=1e-9)
    assert bleu4_smooth("", "a") == 0.0
    assert bleu4_smooth("x y", "a b") == 0.0
    with pytest.raises(EmptyReference):
        bleu4_smooth("a", "")


def test_bleu_matches_reference_implementation():
    nltk_bleu = pytest.importorskip("nltk.translate.bleu_score")
    smooth = nltk_bleu.SmoothingFunction().method2
    r = random.Random(7)
    vocab = list("abcdefg")
    for _ in range(20):
        ref = r.choices(vocab, k=r.randint(4, 15))
        cand = r.choices(vocab, k=r.randint(4, 15))
        ours = bleu4_smooth(cand, ref)
        theirs = 100 * nltk_bleu.sentence_bleu([ref], cand, smoothing_function=smooth)
        assert ours == pytest.approx(theirs, abs=1e-6)


def test_corpus_bleu_is_mean():
    assert corpus_bleu(["a b c d", "x"], ["a b c d", "y"]) == pytest.approx(50)
    assert corpus_bleu([], []) == 0.0


def _brute_force_distance(a, b):
    """Shortest edit script found by breadth-first search over all edit sequences."""
    a, b = tuple(a), tuple(b)
    alphabet = set(a) | set(b)
    frontier, seen, depth = {a}, {a}, 0
    while b not in frontier:
        nxt = set()
        for s in frontier:
            for i in range(len(s) + 1):
                for ch in alphabet:
                    nxt.add(s[:i] + (ch,) + s[i:])
                if i < len(s):
                    nxt.add(s[:i] + s[i + 1:])
                    for ch in alphabet:
                        nxt.add(s[:i] + (ch,) + s[i + 1:])
        frontier = nxt - seen
        seen |= frontier
        depth += 1
    return depth


def test_edit_distance_examples():
    assert edit_distance(["a", "b", "c"], ["a", "c"]) == 1
    assert edit_distance("a b", "a b") == 0
    assert edit_distance("ab", "ba", mode="char") == 2
    with pytest.raises(ValueError):
        edit_distance("a", "b", mode="bits")


def test_edit_distance_matches_brute_force():
    alphabet = ["a", "b", "c"]
    seqs = [s for n in range(5) for s in itertools.product(alphabet[: 2 if n > 3 else 3], repeat=n)]
    r = random.Random(3)
    pairs = [(a, b) for a in seqs for b in seqs if len(a) + len(b) <= 8]
    for a, b in r.sample(pairs, 400) + [((), ()), (("a",) * 4, ("b",) * 4)]:
        assert edit_distance(a, b) == _brute_force_distance(a, b), (a, b)


def test_edit_distance_metric_axioms():
    r = random.Random(5)
    words = "abcd"
    rand = lambda: r.choices(words, k=r.randint(0, 7))  # noqa: E731
    for _ in range(500):
        a, b, c = rand(), rand(), rand()
        assert edit_distance(a, b) == edit_distance(b, a)
        assert edit_distance(a, c) <= edit_distance(a, b) + edit_distance(b, c)


def test_evaluate_perfect_wt1():
    exp = ["f ( a , b )", "g ( x )"]
    rep = evaluate(exp, [ps(0, exp[0]), ps(1, exp[1])], "WT1")
    assert (rep.accuracy, rep.bleu, rep.avg_position, rep.avg_edit_distance, rep.patchability_rate) == \
        (100.0, pytest.approx(100.0), 1.0, 0.0, 1.0)


def test_evaluate_ast4_not_patchable():
    exp = [EXPECTED["AST4"]]
    rep = evaluate(exp, [ps(0, exp[0])], "AST4")
    assert rep.accuracy == 100.0 and rep.patchability_rate == 0.0
    assert not is_patch("AST4", exp[0].split())


@pytest.mark.parametrize("rep", REPRESENTATIONS)
def test_evaluate_golden_sole_candidate(rep):
    assert evaluate([EXPECTED[rep]], [ps(0, EXPECTED[rep])], rep).accuracy == 100.0


def test_evaluate_fields_match_standalone_operations():
    expected, preds = _fixture(60, seed=9)
    rep = evaluate(expected, preds, "WT1", k=5)
    assert rep.accuracy == accuracy(expected, preds, 5)
    assert rep.avg_position == first_hit_position(expected, preds, 5)
    tops = [p.candidates[0] if p.candidates else () for p in preds]
    assert rep.bleu == pytest.approx(corpus_bleu(tops, expected))
    assert rep.avg_edit_distance == pytest.approx(sum(edit_distance(t, e) for t, e in zip(tops, expected)) / 60)
    assert rep.n == 60


def test_patchability_uses_decode():
    assert is_patch("WT1", "f ( a , b )".split())
    assert not is_patch("WT1", "f ( a , ".split())
    assert is_patch("DB1", EXPECTED["DB1"].split())
    rep = evaluate(["f ( a"], [ps(0, "f ( a")], "WT1")
    assert rep.accuracy == 100.0 and rep.patchability_rate == 0.0


def test_prediction_set_json():
    p = ps(3, "a b", ["c"])
    assert PredictionSet.from_json(p.to_json()) == p
    assert p.to_json() == {"id": 3, "candidates": ["a b", "c"]}
