"""Scoring of ranked fix candidates against expected encodings."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import asdict, dataclass

from .ast_core.parser import parse_js
from .errors import AlignmentError, CodeRepError, EmptyReference
from .representation.decoders import decode
from .representation.ids import is_automatically_patchable


def as_tokens(seq) -> tuple[str, ...]:
    """Token tuple from a space-joined string or a token sequence."""
    if isinstance(seq, str):
        return tuple(seq.split())
    return tuple(str(t) for t in seq)


@dataclass(frozen=True)
class PredictionSet:
    id: object
    candidates: tuple

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(as_tokens(c) for c in self.candidates))

    def top(self, k=None):
        return self.candidates if k is None else self.candidates[:k]

    def to_json(self) -> dict:
        return {"id": self.id, "candidates": [" ".join(c) for c in self.candidates]}

    @classmethod
    def from_json(cls, obj) -> PredictionSet:
        return cls(obj["id"], tuple(obj.get("candidates", ())))


def align(expected, preds):
    """Pair expected outputs with prediction sets by id.

    ``expected`` is a sequence (ids are positions) or a mapping id -> tokens.
    """
    if not isinstance(expected, dict):
        expected = dict(enumerate(expected))
    preds = list(preds)
    ids = [p.id for p in preds]
    if len(set(ids)) != len(ids):
        raise AlignmentError("duplicate prediction ids")
    if set(ids) != set(expected):
        missing = sorted(set(expected) - set(ids), key=str)[:5]
        extra = sorted(set(ids) - set(expected), key=str)[:5]
        raise AlignmentError(f"prediction ids do not match expected ids (missing {missing}, unexpected {extra})")
    return [(p.id, as_tokens(expected[p.id]), p) for p in sorted(preds, key=lambda p: _sort_key(p.id))]


def _sort_key(i):
    return (0, i, "") if isinstance(i, int) else (1, 0, str(i))


def _rank(exp, pset, k=None):
    for r, cand in enumerate(pset.top(k), 1):
        if cand == exp:
            return r
    return None


def accuracy(expected, preds, k=None) -> float:
    """Percentage of examples where any of the top-``k`` candidates matches exactly."""
    rows = align(expected, preds)
    if not rows:
        return 0.0
    return 100.0 * sum(_rank(e, p, k) is not None for _, e, p in rows) / len(rows)


def first_hit_position(expected, preds, k=None) -> float | None:
    """Mean 1-based rank of the first exact match, over examples that have one."""
    ranks = [r for _, e, p in align(expected, preds) if (r := _rank(e, p, k)) is not None]
    return sum(ranks) / len(ranks) if ranks else None


def _ngrams(seq, n):
    return Counter(tuple(seq[i:i + n]) for i in range(len(seq) - n + 1))


def bleu4_smooth(candidate, reference) -> float:
    """Sentence BLEU-4 in [0, 100] with add-one smoothing for orders two and up.

    Orders are capped at the candidate length, so short exact matches score 100.

    >>> bleu4_smooth("a b c", "a b c")
    100.0
    """
    cand, ref = as_tokens(candidate), as_tokens(reference)
    if not ref:
        raise EmptyReference("BLEU needs a non-empty reference")
    if not cand:
        return 0.0
    orders = min(4, len(cand))
    log_sum = 0.0
    for n in range(1, orders + 1):
        c, r = _ngrams(cand, n), _ngrams(ref, n)
        matches = sum(min(cnt, r[g]) for g, cnt in c.items())
        total = max(len(cand) - n + 1, 0)
        if n > 1:
            matches, total = matches + 1, total + 1
        if matches == 0:
            return 0.0
        log_sum += math.log(matches / total) / orders
    bp = 1.0 if len(cand) > len(ref) else math.exp(1 - len(ref) / len(cand))
    return 100.0 * bp * math.exp(log_sum)


def corpus_bleu(candidates, references) -> float:
    """Average of sentence scores."""
    pairs = list(zip(candidates, references, strict=True))
    if not pairs:
        return 0.0
    return sum(bleu4_smooth(c, r) for c, r in pairs) / len(pairs)


def edit_distance(a, b, mode: str = "token") -> int:
    """Levenshtein distance over tokens (default) or characters of the joined text.

    >>> edit_distance(["a", "b", "c"], ["a", "c"])
    1
    """
    if mode == "char":
        a = " ".join(as_tokens(a))
        b = " ".join(as_tokens(b))
    elif mode == "token":
        a, b = as_tokens(a), as_tokens(b)
    else:
        raise ValueError(f"unknown edit-distance mode {mode!r}")
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, 1):
        cur = [i]
        for j, y in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x != y)))
        prev = cur
    return prev[-1]


def source_parses(tokens) -> bool:
    try:
        parse_js(" ".join(tokens) + " ;")
    except CodeRepError:
        return False
    return True


def is_patch(rep, candidate, aux=None) -> bool:
    """Whether a candidate decodes to source that parses."""
    if not is_automatically_patchable(rep):
        return False
    try:
        return source_parses(decode(rep, candidate, aux))
    except CodeRepError:
        return False


@dataclass(frozen=True)
class EvalReport:
    accuracy: float
    bleu: float
    avg_position: float | None
    avg_edit_distance: float
    patchability_rate: float
    n: int

    def to_json(self) -> dict:
        return asdict(self)

    def row(self) -> dict:
        return {
            "Accuracy": round(self.accuracy, 2),
            "BLEU": round(self.bleu, 2),
            "Position": None if self.avg_position is None else round(self.avg_position, 2),
        }


def evaluate(expected, preds, rep: str, aux=None, k=None, edit_mode="token") -> EvalReport:
    """All metrics for one experiment.

    ``aux`` maps example id to the decode aid of the expected side (the TF1
    map, or WT2 literal originals); a sequence is indexed by position.
    """
    rows = align(expected, preds)
    n = len(rows)
    if not n:
        return EvalReport(0.0, 0.0, None, 0.0, 0.0, 0)
    if aux is not None and not isinstance(aux, dict):
        aux = dict(enumerate(aux))
    aux = aux or {}
    hits, ranks, bleu, edits, top_hits, patches = 0, [], 0.0, 0, 0, 0
    for eid, exp, pset in rows:
        rank = _rank(exp, pset, k)
        if rank is not None:
            hits += 1
            ranks.append(rank)
        top = pset.candidates[0] if pset.candidates else ()
        bleu += bleu4_smooth(top, exp)
        edits += edit_distance(top, exp, edit_mode)
        if top and top == exp:
            top_hits += 1
            patches += is_patch(rep, top, aux.get(eid))
    return EvalReport(
        accuracy=100.0 * hits / n,
        bleu=bleu / n,
        avg_position=sum(ranks) / len(ranks) if ranks else None,
        avg_edit_distance=edits / n,
        patchability_rate=patches / top_hits if top_hits else 0.0,
        n=n,
    )
