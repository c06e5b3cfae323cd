"""Seed name-based bugs into correct statements."""

from __future__ import annotations

import hashlib
import random
from collections import Counter
from dataclasses import dataclass, replace

from sklearn.base import BaseEstimator, TransformerMixin

from .ast_core.nodes import AstNode, node_at, replace_at
from .ast_core.printer import paren_required, print_tokens
from .errors import DegenerateMutation
from .extraction import BinOpRecord, CallSiteRecord, record_from_json
from .validation import check_bug_type, check_seed

OPERATOR_GROUPS = (
    ("+", "-", "*", "/", "%"),
    ("<", "<=", ">", ">=", "==", "!=", "===", "!=="),
    ("&&", "||"),
    ("&", "|", "^", "<<", ">>", ">>>"),
)
GROUP_OF = {op: group for group in OPERATOR_GROUPS for op in group}
COMMUTATIVE = frozenset({"+", "*", "==", "!=", "===", "!==", "&", "|", "^", "&&", "||"})


@dataclass(frozen=True)
class MutationPair:
    bug_type: str
    fixed_stmt: AstNode
    buggy_stmt: AstNode
    record: CallSiteRecord | BinOpRecord
    seed_draw: int = 0

    @property
    def file(self):
        return self.record.file

    @property
    def site_path(self):
        return self.record.path

    def to_json(self) -> dict:
        return {
            "bug_type": self.bug_type,
            "file": self.record.file,
            "fixed_tokens": " ".join(print_tokens(self.fixed_stmt)),
            "buggy_tokens": " ".join(print_tokens(self.buggy_stmt)),
            "record": self.record.to_json(),
            "seed_draw": self.seed_draw,
        }


def derive_seed(global_seed: int, file: str, ordinal: int) -> int:
    """Per-record seed, independent of processing order."""
    digest = hashlib.blake2b(f"{global_seed}\0{file}\0{ordinal}".encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def pin_parens(node: AstNode, parent=None, index=None) -> AstNode:
    """Mark every node that prints parenthesized so its parentheses survive a move."""
    kids = tuple(pin_parens(c, node, i) for i, c in enumerate(node.children))
    parens = node.parens or (parent is not None and paren_required(parent, index, node))
    return replace(node, children=kids, parens=parens)


def _swap_children(stmt, path, i, j):
    pinned = pin_parens(stmt)
    site = node_at(pinned, path)
    kids = list(site.children)
    kids[i], kids[j] = kids[j], kids[i]
    return replace_at(pinned, path, replace(site, children=tuple(kids)))


def _check_swap(fixed, buggy):
    a, b = print_tokens(fixed), print_tokens(buggy)
    if a == b or fixed == buggy:
        raise DegenerateMutation("swap does not change the statement")
    if Counter(a) != Counter(b):
        raise DegenerateMutation("swap would need extra parentheses")


def _statement(record):
    if record.statement is None:
        raise DegenerateMutation("record carries no statement")
    return record.statement


def mutate_swap_args(record: CallSiteRecord, seed_draw: int = 0) -> MutationPair:
    """Exchange the two call arguments.

    Raises :class:`DegenerateMutation` when both arguments print identically.
    """
    stmt = _statement(record)
    site = node_at(stmt, record.path)
    if site.kind != "CallExpression" or len(site.arguments) != 2:
        raise DegenerateMutation("record path does not point at a two-argument call")
    i, j = site.slot_indices("arguments")
    if site.children[i] == site.children[j] or print_tokens(site.children[i]) == print_tokens(site.children[j]):
        raise DegenerateMutation("arguments are identical")
    buggy = _swap_children(stmt, record.path, i, j)
    _check_swap(stmt, buggy)
    return MutationPair("swapped_args", stmt, buggy, record, seed_draw)


def mutate_swap_operands(record: BinOpRecord, seed_draw: int = 0, exclude_commutative: bool = False) -> MutationPair:
    stmt = _statement(record)
    site = node_at(stmt, record.path)
    if site.kind not in ("BinaryExpression", "LogicalExpression"):
        raise DegenerateMutation("record path does not point at a binary expression")
    if exclude_commutative and site.operator in COMMUTATIVE:
        raise DegenerateMutation(f"operator {site.operator!r} is commutative")
    if site.children[0] == site.children[1] or print_tokens(site.children[0]) == print_tokens(site.children[1]):
        raise DegenerateMutation("operands are identical")
    buggy = _swap_children(stmt, record.path, 0, 1)
    _check_swap(stmt, buggy)
    return MutationPair("wrong_operands", stmt, buggy, record, seed_draw)


def _with_operator(pinned, path, op):
    site = node_at(pinned, path)
    return replace_at(pinned, path, replace(site, operator=op))


def _single_token_change(a, b):
    return len(a) == len(b) and sum(x != y for x, y in zip(a, b)) == 1


def operator_candidates(record: BinOpRecord) -> list[str]:
    """Same-group replacements that change exactly one printed token."""
    stmt = _statement(record)
    site = node_at(stmt, record.path)
    group = GROUP_OF.get(site.operator, ())
    pinned = pin_parens(stmt)
    before = print_tokens(pinned)
    out = []
    for op in group:
        if op == site.operator:
            continue
        if _single_token_change(before, print_tokens(_with_operator(pinned, record.path, op))):
            out.append(op)
    return out


def mutate_wrong_operator(record: BinOpRecord, rng: random.Random, seed_draw: int = 0) -> MutationPair:
    """Replace the operator with a uniformly drawn member of its group.

    ``rng`` only needs a ``choice`` method, so tests can stub the draw.
    """
    candidates = operator_candidates(record)
    if not candidates:
        raise DegenerateMutation(f"no same-group replacement for {record.operator!r}")
    bo = rng.choice(candidates)
    if bo not in candidates:
        raise DegenerateMutation(f"drawn operator {bo!r} is not a valid replacement")
    stmt = _statement(record)
    buggy = _with_operator(pin_parens(stmt), record.path, bo)
    rec = replace(record, correct_op=record.operator, buggy_op=bo)
    return MutationPair("wrong_binop", stmt, buggy, rec, seed_draw)


def mutate(record, bug_type, global_seed=0, ordinal=0, exclude_commutative=False) -> MutationPair:
    check_bug_type(bug_type)
    seed_draw = derive_seed(global_seed, record.file, ordinal)
    if bug_type == "swapped_args":
        return mutate_swap_args(record, seed_draw)
    if bug_type == "wrong_operands":
        return mutate_swap_operands(record, seed_draw, exclude_commutative)
    return mutate_wrong_operator(record, random.Random(seed_draw), seed_draw)


class BugSeeder(BaseEstimator, TransformerMixin):
    """Turn extracted records into buggy/fixed pairs; degenerate sites are skipped.

    Ordinals count records per file, so the output does not depend on the
    order in which files are processed.
    """

    def __init__(self, bug_type="swapped_args", seed=0, exclude_commutative=False):
        self.bug_type = bug_type
        self.seed = seed
        self.exclude_commutative = exclude_commutative

    def fit(self, X=None, y=None):
        check_bug_type(self.bug_type)
        check_seed(self.seed)
        return self

    def transform(self, X) -> list[MutationPair]:
        check_bug_type(self.bug_type)
        ordinals: Counter = Counter()
        self.skipped_ = 0
        out = []
        for record in X:
            ordinal = ordinals[record.file]
            ordinals[record.file] += 1
            try:
                out.append(mutate(record, self.bug_type, self.seed, ordinal, self.exclude_commutative))
            except DegenerateMutation:
                self.skipped_ += 1
        return out


def pair_from_json(obj) -> MutationPair:
    """Rebuild a pair from its JSON form by re-applying the recorded mutation."""
    record = record_from_json(obj["record"])
    bug_type, seed_draw = obj["bug_type"], obj.get("seed_draw", 0)
    check_bug_type(bug_type)
    if bug_type == "swapped_args":
        return mutate_swap_args(record, seed_draw)
    if bug_type == "wrong_operands":
        return mutate_swap_operands(record, seed_draw)
    if record.buggy_op is None:
        raise DegenerateMutation("wrong_binop pair has no buggy operator")
    stmt = _statement(record)
    return MutationPair(bug_type, stmt, _with_operator(pin_parens(stmt), record.path, record.buggy_op), record, seed_draw)
