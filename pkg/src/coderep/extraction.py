"""Bug-site fact extraction: call sites with two arguments and binary operations."""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field, replace

from sklearn.base import BaseEstimator, TransformerMixin

from .ast_core.estree import ingest_estree, to_estree
from .ast_core.nodes import SIMPLE_STATEMENT_KINDS, STATEMENT_KINDS, AstNode, make
from .ast_core.printer import print_tokens
from .errors import PrintError
from .validation import check_is_fitted, check_seed

TYPE_TAGS = frozenset(
    {"number", "string", "boolean", "function", "object", "array", "regex", "null", "undefined", "unknown"}
)
PALETTE = ("number", "string", "boolean", "function", "object", "array")


@dataclass(frozen=True)
class CallSiteRecord:
    callee: str
    base: str
    arg1: tuple[str, ...]
    arg2: tuple[str, ...]
    args: tuple[str, str]
    arg_types: tuple[str, str]
    synth_types: tuple[str, str] | None = None
    file: str = ""
    statement: AstNode | None = field(default=None, compare=False, repr=False)
    path: tuple[int, ...] = field(default=(), compare=False)

    bug_family = "call"

    @property
    def key(self) -> str:
        return f"{self.base}.{self.callee}" if self.base else self.callee

    def fields(self) -> tuple:
        """The extracted facts only; this is the deduplication key."""
        return ("call", self.callee, self.base, self.arg1, self.arg2, self.args, self.arg_types, self.synth_types)

    def to_json(self) -> dict:
        return {
            "C": self.callee, "B": self.base, "A1": list(self.arg1), "A2": list(self.arg2),
            "A": list(self.args), "AT": list(self.arg_types),
            "SAT": list(self.synth_types) if self.synth_types else None,
            "file": self.file, "path": list(self.path),
            "statement": to_estree(self.statement) if self.statement is not None else None,
        }

    @classmethod
    def from_json(cls, obj) -> CallSiteRecord:
        stmt = obj.get("statement")
        return cls(
            callee=obj["C"], base=obj["B"], arg1=tuple(obj["A1"]), arg2=tuple(obj["A2"]),
            args=tuple(obj["A"]), arg_types=tuple(obj["AT"]),
            synth_types=tuple(obj["SAT"]) if obj.get("SAT") else None,
            file=obj.get("file", ""), path=tuple(obj.get("path", ())),
            statement=ingest_estree(stmt) if stmt is not None else None,
        )


@dataclass(frozen=True)
class BinOpRecord:
    left: tuple[str, ...]
    right: tuple[str, ...]
    operator: str
    correct_op: str
    buggy_op: str | None
    operands: tuple[str, str]
    operand_types: tuple[str, str]
    file: str = ""
    statement: AstNode | None = field(default=None, compare=False, repr=False)
    path: tuple[int, ...] = field(default=(), compare=False)

    bug_family = "binop"

    def fields(self) -> tuple:
        return (
            "binop", self.left, self.right, self.operator, self.correct_op, self.buggy_op,
            self.operands, self.operand_types,
        )

    def to_json(self) -> dict:
        return {
            "LO": list(self.left), "RO": list(self.right), "O": self.operator, "CO": self.correct_op,
            "BO": self.buggy_op, "OPS": list(self.operands), "OT": list(self.operand_types),
            "file": self.file, "path": list(self.path),
            "statement": to_estree(self.statement) if self.statement is not None else None,
        }

    @classmethod
    def from_json(cls, obj) -> BinOpRecord:
        stmt = obj.get("statement")
        return cls(
            left=tuple(obj["LO"]), right=tuple(obj["RO"]), operator=obj["O"], correct_op=obj["CO"],
            buggy_op=obj.get("BO"), operands=tuple(obj["OPS"]), operand_types=tuple(obj["OT"]),
            file=obj.get("file", ""), path=tuple(obj.get("path", ())),
            statement=ingest_estree(stmt) if stmt is not None else None,
        )


def record_from_json(obj):
    return CallSiteRecord.from_json(obj) if "C" in obj else BinOpRecord.from_json(obj)


@dataclass(frozen=True)
class TypeMap:
    types: dict
    seed: int = 0

    def __getitem__(self, key):
        return self.types[key]

    def __contains__(self, key):
        return key in self.types

    def __len__(self):
        return len(self.types)

    def to_json(self) -> dict:
        return {"seed": self.seed, "types": {k: list(v) for k, v in sorted(self.types.items())}}

    @classmethod
    def from_json(cls, obj) -> TypeMap:
        return cls({k: tuple(v) for k, v in obj["types"].items()}, obj.get("seed", 0))


# -- traversal with statement context ----------------------------------------

def _sites(node, ctx, postorder):
    """Yield ``(node, statement, path_in_statement)``.

    The statement of a node is its nearest enclosing simple statement. Nodes in
    the header of a compound statement (an ``if`` test, a ``for`` update, ...)
    get a synthetic ``ExpressionStatement`` around the header expression.
    """
    if node.kind in SIMPLE_STATEMENT_KINDS:
        ctx = (node, ())
    elif node.kind in STATEMENT_KINDS or node.kind == "Program":
        ctx = None
    if not postorder and ctx is not None:
        yield node, ctx[0], ctx[1]
    for i, child in enumerate(node.children):
        if ctx is not None:
            sub = (ctx[0], ctx[1] + (i,))
        elif child.kind in STATEMENT_KINDS or child.opaque:
            sub = None
        else:
            sub = (make("ExpressionStatement", expression=child), (0,))
        yield from _sites(child, sub, postorder)
    if postorder and ctx is not None:
        yield node, ctx[0], ctx[1]


def deepbugs_form(expr: AstNode) -> str:
    """Name-based summary of an expression: rightmost identifier or literal token."""
    for tok in reversed(print_tokens(expr)):
        if tok.category == "identifier":
            return f"ID:{tok}"
        if tok.category.startswith("literal"):
            return f"LIT:{tok}"
    return ""


def infer_type(expr: AstNode) -> str:
    """Syntactic type tag of an expression; ``unknown`` when nothing is evident.

    >>> from coderep.ast_core.nodes import literal
    >>> infer_type(literal("100", "number"))
    'number'
    """
    if expr.kind == "Literal":
        return expr.literal_type
    return {
        "FunctionExpression": "function",
        "ArrayExpression": "array",
        "ObjectExpression": "object",
    }.get(expr.kind, "unknown")


def _callee_parts(callee):
    if callee.kind == "Identifier":
        return callee.name, ""
    if callee.kind == "MemberExpression" and "computed" not in callee.flags:
        return callee.children[1].name, "".join(print_tokens(callee.children[0]))
    return "".join(print_tokens(callee)), ""


def _printable(stmt):
    try:
        print_tokens(stmt)
    except PrintError:
        return False
    return True


def extract_call_sites(ast: AstNode, file: str = "") -> list[CallSiteRecord]:
    """One record per two-argument call, in source order."""
    out = []
    for node, stmt, path in _sites(ast, None, postorder=False):
        if node.kind != "CallExpression" or node.opaque:
            continue
        args = node.arguments
        if len(args) != 2 or not _printable(stmt):
            continue
        callee, base = _callee_parts(node.callee)
        out.append(
            CallSiteRecord(
                callee=callee,
                base=base,
                arg1=tuple(print_tokens(args[0])),
                arg2=tuple(print_tokens(args[1])),
                args=(deepbugs_form(args[0]), deepbugs_form(args[1])),
                arg_types=(infer_type(args[0]), infer_type(args[1])),
                file=file,
                statement=stmt,
                path=path,
            )
        )
    return out


def extract_binops(ast: AstNode, file: str = "") -> list[BinOpRecord]:
    """One record per binary or logical expression, children before parents."""
    out = []
    for node, stmt, path in _sites(ast, None, postorder=True):
        if node.kind not in ("BinaryExpression", "LogicalExpression") or node.opaque:
            continue
        if not _printable(stmt):
            continue
        lo, ro = node.children
        out.append(
            BinOpRecord(
                left=tuple(print_tokens(lo)),
                right=tuple(print_tokens(ro)),
                operator=node.operator,
                correct_op=node.operator,
                buggy_op=None,
                operands=(deepbugs_form(lo), deepbugs_form(ro)),
                operand_types=(infer_type(lo), infer_type(ro)),
                file=file,
                statement=stmt,
                path=path,
            )
        )
    return out


# -- corpus-wide type synthesis ---------------------------------------------

def _draw(seed, key):
    digest = hashlib.blake2b(f"{seed}\0{key}".encode("utf-8"), digest_size=8).digest()
    h = int.from_bytes(digest, "big")
    return PALETTE[h % len(PALETTE)], PALETTE[(h // len(PALETTE)) % len(PALETTE)]


def synthesize_types(records, seed: int = 0) -> TypeMap:
    """Assign every callee key one consistent pair of argument types.

    Observed (non-unknown) argument types win by majority, ties going to the
    first occurrence; positions with no evidence get a seeded hash draw.
    """
    check_seed(seed)
    observed: dict[str, tuple[Counter, Counter]] = {}
    first_seen: dict[tuple[str, int, str], int] = {}
    for n, rec in enumerate(records):
        counters = observed.setdefault(rec.key, (Counter(), Counter()))
        for pos, tag in enumerate(rec.arg_types):
            if tag != "unknown":
                counters[pos][tag] += 1
                first_seen.setdefault((rec.key, pos, tag), n)
    types = {}
    for key, counters in observed.items():
        drawn = _draw(seed, key)
        pair = []
        for pos in (0, 1):
            if counters[pos]:
                best = min(counters[pos].items(), key=lambda kv: (-kv[1], first_seen[(key, pos, kv[0])]))
                pair.append(best[0])
            else:
                pair.append(drawn[pos])
        types[key] = tuple(pair)
    return TypeMap(types, seed)


def apply_types(records, type_map: TypeMap) -> list[CallSiteRecord]:
    return [replace(r, synth_types=type_map[r.key]) for r in records]


class TypeSynthesizer(BaseEstimator, TransformerMixin):
    """Estimator wrapper: ``fit`` builds the corpus-wide :class:`TypeMap`, ``transform`` fills SAT."""

    def __init__(self, seed=0):
        self.seed = seed

    def fit(self, X, y=None):
        self.type_map_ = synthesize_types(list(X), self.seed)
        return self

    def transform(self, X):
        check_is_fitted(self, "type_map_")
        return apply_types(X, self.type_map_)
