"""Assemble buggy/fixed pairs under homogeneous or mixed representations."""

from __future__ import annotations

from dataclasses import dataclass, field

from sklearn.base import BaseEstimator, TransformerMixin

from ..ast_core.printer import print_tokens
from ..errors import MissingContext
from ..validation import check_applicable, check_is_fitted, check_positive_int, check_rep
from .abstraction import AbstractionMap, build_idiom_set
from .encoders import EncodeContext, encode, wt2_literals
from .ids import TYPED


@dataclass(frozen=True)
class EncodedExample:
    bug_type: str
    src_rep: str
    tgt_rep: str
    src: tuple
    tgt: tuple
    abstraction: AbstractionMap | None = field(default=None, compare=False)
    literals: dict | None = None
    file: str = ""
    origin: object = field(default=None, compare=False, repr=False)

    def decode_aux(self, side="tgt"):
        """What :func:`decode` needs for one side of this example."""
        rep = self.tgt_rep if side == "tgt" else self.src_rep
        if rep == "TF1":
            return self.abstraction
        if rep == "WT2" and self.literals is not None:
            return self.literals.get(side)
        return None

    def to_json(self) -> dict:
        return {
            "bug_type": self.bug_type,
            "src_rep": self.src_rep,
            "tgt_rep": self.tgt_rep,
            "src": " ".join(self.src),
            "tgt": " ".join(self.tgt),
            "map": self.abstraction.to_json() if self.abstraction is not None else None,
            "literals": self.literals,
            "file": self.file,
        }

    @classmethod
    def from_json(cls, obj) -> EncodedExample:
        amap = AbstractionMap.from_json(obj["map"]) if obj.get("map") is not None else None
        return cls(
            bug_type=obj["bug_type"], src_rep=obj["src_rep"], tgt_rep=obj["tgt_rep"],
            src=tuple(obj["src"].split()), tgt=tuple(obj["tgt"].split()),
            abstraction=amap, literals=obj.get("literals"), file=obj.get("file", ""),
        )


def side_types(pair, side):
    """Site types for one side; types travel with the subtrees they describe."""
    rec = pair.record
    bug = pair.bug_type
    if bug == "swapped_args":
        types = rec.synth_types
    else:
        types = rec.operand_types
    if types is None:
        return None
    types = tuple(types)
    if side == "buggy" and bug in ("swapped_args", "wrong_operands"):
        types = types[::-1]
    return types


def make_pair(pair, src_rep: str, tgt_rep: str, idioms=frozenset()) -> EncodedExample:
    """Encode the buggy statement as ``src_rep`` and the fixed one as ``tgt_rep``.

    When TF1 is on either side one placeholder map is shared, filled from the
    buggy side first.
    """
    for rep in (src_rep, tgt_rep):
        check_applicable(check_rep(rep), pair.bug_type)
    buggy_types, fixed_types = side_types(pair, "buggy"), side_types(pair, "fixed")
    for rep, types in ((src_rep, buggy_types), (tgt_rep, fixed_types)):
        if rep in TYPED and types is None:
            raise MissingContext(f"{rep} needs synthesized types; run type synthesis first")
    amap = AbstractionMap(idioms=frozenset(idioms)) if "TF1" in (src_rep, tgt_rep) else None
    path = tuple(pair.record.path)
    src_ctx = EncodeContext(pair.bug_type, path, buggy_types, frozenset(idioms))
    tgt_ctx = EncodeContext(pair.bug_type, path, fixed_types, frozenset(idioms))
    src = encode(src_rep, pair.buggy_stmt, src_ctx, amap)
    tgt = encode(tgt_rep, pair.fixed_stmt, tgt_ctx, amap)
    literals = None
    if "WT2" in (src_rep, tgt_rep):
        literals = {}
        for side, rep, stmt in (("src", src_rep, pair.buggy_stmt), ("tgt", tgt_rep, pair.fixed_stmt)):
            if rep == "WT2":
                literals[side] = wt2_literals(print_tokens(stmt))
    return EncodedExample(
        bug_type=pair.bug_type,
        src_rep=src_rep,
        tgt_rep=tgt_rep,
        src=tuple(str(t) for t in src),
        tgt=tuple(str(t) for t in tgt),
        abstraction=amap,
        literals=literals,
        file=pair.record.file,
        origin=pair,
    )


def pair_tokens(pairs):
    """Word tokens of both sides of every pair (the idiom-set input)."""
    for pair in pairs:
        yield from print_tokens(pair.buggy_stmt)
        yield from print_tokens(pair.fixed_stmt)


class RepresentationEncoder(BaseEstimator, TransformerMixin):
    """Fit the idiom set on training pairs, then encode pairs as (src, tgt) examples."""

    def __init__(self, src_rep="WT1", tgt_rep="WT1", idiom_size=300):
        self.src_rep = src_rep
        self.tgt_rep = tgt_rep
        self.idiom_size = idiom_size

    def _validate(self):
        check_rep(self.src_rep)
        check_rep(self.tgt_rep)
        check_positive_int(self.idiom_size, "idiom_size")

    def fit(self, X, y=None):
        self._validate()
        if "TF1" in (self.src_rep, self.tgt_rep):
            self.idioms_ = build_idiom_set(pair_tokens(X), self.idiom_size)
        else:
            self.idioms_ = frozenset()
        return self

    def transform(self, X) -> list[EncodedExample]:
        check_is_fitted(self, "idioms_")
        return [make_pair(p, self.src_rep, self.tgt_rep, self.idioms_) for p in X]
