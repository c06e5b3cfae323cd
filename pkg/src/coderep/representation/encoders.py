"""Encoders for the fourteen statement representations."""

from __future__ import annotations

from dataclasses import dataclass

from ..ast_core.nodes import SCHEMA, AstNode, Token, make, node_at, walk
from ..ast_core.printer import Printed, print_annotated
from ..errors import MissingContext
from ..validation import check_applicable, check_rep
from .abstraction import AbstractionMap, abstract_tf1
from .ids import ANCHORS, END, TYPED
from .wordsplit import split_identifier

KEPT_NUMBERS = frozenset({"0", "1"})


@dataclass(frozen=True)
class EncodeContext:
    """What an encoder may know besides the statement itself.

    ``site`` is the path (child indices) of the bug-site node inside the
    statement; ``types`` are the type tags of its two slots in the order they
    appear in this statement.
    """

    bug_type: str | None = None
    site: tuple | None = None
    types: tuple | None = None
    idioms: frozenset = frozenset()


def marker(text) -> Token:
    return Token(text, "marker")


# -- shared plumbing ---------------------------------------------------------

@dataclass
class _Unit:
    printed: Printed
    tokens: list
    slot_paths: list


def _site_node(stmt, ctx):
    if ctx.site is None:
        raise MissingContext("this representation needs the bug-site path")
    site = node_at(stmt, ctx.site)
    if site.kind == "CallExpression":
        idx = site.slot_indices("arguments")
        if len(idx) != 2:
            raise MissingContext("bug site call must have exactly two arguments")
    elif site.kind in ("BinaryExpression", "LogicalExpression"):
        idx = [0, 1]
    else:
        raise MissingContext(f"bug site is a {site.kind}, not a call or binary expression")
    return site, [tuple(ctx.site) + (i,) for i in idx]


def _unit(stmt, ctx, need_site):
    printed = print_annotated(stmt)
    tokens = list(printed.tokens)
    if stmt.kind == "ExpressionStatement":
        tokens = tokens[:-1]
    slot_paths = _site_node(stmt, ctx)[1] if need_site else []
    return _Unit(printed, tokens, slot_paths)


def _types(ctx):
    if ctx.types is None or len(ctx.types) != 2:
        raise MissingContext("typed representation needs the two site types")
    return tuple(ctx.types)


def _prefix(tok):
    if tok.category == "identifier":
        return "ID"
    if tok.category.startswith("literal"):
        return "LIT"
    return None


# -- token based -------------------------------------------------------------

def _wt1(stmt, ctx):
    return _unit(stmt, ctx, False).tokens


def _wt2(stmt, ctx):
    out = []
    for tok in _unit(stmt, ctx, False).tokens:
        if tok.category == "identifier":
            out.extend(Token(p, "marker" if p.startswith("<") else "identifier") for p in split_identifier(tok))
        elif tok.category == "literal-string":
            out.append(marker("<STRING>"))
        elif tok.category == "literal-number" and tok not in KEPT_NUMBERS:
            out.append(marker("<NUMBER>"))
        else:
            out.append(tok)
    return out


def wt2_literals(tokens) -> list[str]:
    """Original lexemes behind the ``<STRING>``/``<NUMBER>`` markers, in order."""
    return [
        str(t) for t in tokens
        if t.category == "literal-string" or (t.category == "literal-number" and t not in KEPT_NUMBERS)
    ]


def _db(stmt, ctx, level):
    unit = _unit(stmt, ctx, level > 1)
    tokens = unit.tokens
    slots = {}
    if level > 1:
        types = _types(ctx)
        for path, tag in zip(unit.slot_paths, types):
            start, end = unit.printed.ranges[path]
            slots[start] = (end, tag)
    out, i = [], 0
    while i < len(tokens):
        tok = tokens[i]
        pre = _prefix(tok)
        if i in slots:
            end, tag = slots[i]
            if pre:
                out.append(marker(pre))
            out.append(marker(tag))
            if level == 3:
                i = end
                continue
            out.append(tok)
            i += 1
            continue
        if pre:
            out.append(marker(pre))
        out.append(tok)
        i += 1
    return out


def _fs(stmt, ctx, anchors, prefixes):
    unit = _unit(stmt, ctx, True)
    types = _types(ctx)
    site, slot_paths = _site_node(stmt, ctx)
    if site.kind != "CallExpression":
        raise MissingContext("function-signature representations need a call site")
    start, end = unit.printed.ranges[tuple(ctx.site) + (site.slot_indices("callee")[0],)]
    out = list(unit.printed.tokens[start:end])
    out.append(Token("(", "punctuation"))
    for n, (path, tag) in enumerate(zip(slot_paths, types)):
        if n:
            out.append(Token(",", "punctuation"))
        if anchors:
            out.append(marker(ANCHORS[n]))
        if prefixes:
            pre = _prefix(unit.printed.tokens[unit.printed.ranges[path][0]])
            if pre:
                out.append(marker(pre))
        out.append(marker(tag))
    out.append(Token(")", "punctuation"))
    return out


def tf1_encode(stmt, ctx, amap: AbstractionMap) -> list[Token]:
    unit = _unit(stmt, ctx, ctx.site is not None)
    slot_types = {}
    if ctx.site is not None and ctx.types is not None:
        for path, tag in zip(unit.slot_paths, ctx.types):
            start, end = unit.printed.ranges[path]
            if end - start == 1 and unit.tokens[start].category == "identifier":
                slot_types[start] = tag
    return abstract_tf1(unit.tokens, amap, unit.printed.roles, slot_types)


# -- AST based ---------------------------------------------------------------

def _scalars(node):
    k = node.kind
    if k == "Identifier":
        return [Token(node.name, "identifier")]
    if k == "Literal":
        cat = {"number": "literal-number", "string": "literal-string"}.get(node.literal_type, "literal-other")
        return [Token(node.value, cat)]
    out = []
    if node.operator is not None:
        out.append(Token(node.operator, "operator"))
    if k == "UpdateExpression":
        out.append(marker("prefix" if "prefix" in node.flags else "postfix"))
    if k == "MemberExpression" and "computed" in node.flags:
        out.append(marker("computed"))
    if k == "VariableDeclaration":
        out.append(Token(next(iter(node.flags & {"var", "let", "const"}), "var"), "keyword"))
    return out


def _listing(node, path, out, site_types, drop_slot):
    out.append(marker(node.kind))
    tag = site_types.get(path)
    if tag is not None:
        out.append(marker(tag))
        if drop_slot:
            return
    if node.opaque:
        if node.name:
            out.append(Token(node.name, "identifier"))
        for i, child in enumerate(node.children):
            _listing(child, path + (i,), out, site_types, drop_slot)
        out.append(marker(END))
        return
    out.extend(_scalars(node))
    for slot, card in SCHEMA[node.kind]:
        idx = node.slot_indices(slot)
        for i in idx:
            _listing(node.children[i], path + (i,), out, site_types, drop_slot)
        if card == "many" or (card == "opt" and not idx):
            out.append(marker(END))


def _ast(stmt, ctx, level):
    root = make("Program", body=[stmt])
    site_types = {}
    if level > 1:
        _, slot_paths = _site_node(stmt, ctx)
        site_types = {(0,) + p: t for p, t in zip(slot_paths, _types(ctx))}
    out = []
    _listing(root, (), out, site_types, drop_slot=level == 3)
    while out and out[-1] == END:
        out.pop()
    return out


def _ast4(stmt, ctx):
    unit = stmt.children[0] if stmt.kind == "ExpressionStatement" else stmt
    return [marker(n.kind) for _, n in walk(unit)]


_ENCODERS = {
    "WT1": _wt1,
    "WT2": _wt2,
    "DB1": lambda s, c: _db(s, c, 1),
    "DB2": lambda s, c: _db(s, c, 2),
    "DB3": lambda s, c: _db(s, c, 3),
    "FS1": lambda s, c: _fs(s, c, False, False),
    "FS2": lambda s, c: _fs(s, c, True, False),
    "FS3": lambda s, c: _fs(s, c, False, True),
    "FS4": lambda s, c: _fs(s, c, True, True),
    "AST1": lambda s, c: _ast(s, c, 1),
    "AST2": lambda s, c: _ast(s, c, 2),
    "AST3": lambda s, c: _ast(s, c, 3),
    "AST4": _ast4,
}


def encode(rep: str, stmt: AstNode, ctx: EncodeContext | None = None, amap: AbstractionMap | None = None):
    """Encode ``stmt`` under representation ``rep``.

    For TF1 the placeholder map ``amap`` is extended in place when given (so
    two sides of a pair can share it); otherwise a fresh one is used.
    """
    ctx = ctx or EncodeContext()
    check_rep(rep)
    if ctx.bug_type is not None:
        check_applicable(rep, ctx.bug_type)
    if rep in TYPED and ctx.types is None:
        raise MissingContext(f"{rep} needs synthesized types for the bug site")
    if rep == "TF1":
        return tf1_encode(stmt, ctx, amap if amap is not None else AbstractionMap(idioms=ctx.idioms))
    return _ENCODERS[rep](stmt, ctx)
