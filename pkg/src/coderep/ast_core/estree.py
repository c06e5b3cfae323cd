"""Conversion between ESTree JSON documents and :class:`AstNode`."""

from __future__ import annotations

import json
import math

from ..errors import IngestError, PrintError
from .lexer import canonical_lexeme
from .nodes import SCHEMA, AstNode, make

_SKIP_KEYS = frozenset({"type", "loc", "range", "start", "end", "raw", "comments", "tokens", "sourceType"})
_UPDATE_AND_UNARY = ("UnaryExpression", "UpdateExpression")


def _lexeme_for(value):
    if value is None:
        return "null", "null"
    if isinstance(value, bool):
        return ("true" if value else "false"), "boolean"
    if isinstance(value, (int, float)):
        if isinstance(value, float) and value.is_integer() and math.isfinite(value):
            return str(int(value)), "number"
        return repr(value), "number"
    if isinstance(value, str):
        return canonical_lexeme(json.dumps(value, ensure_ascii=False)), "string"
    raise IngestError(f"unsupported literal value {value!r}")


def _span(obj):
    rng = obj.get("range")
    if isinstance(rng, list) and len(rng) == 2:
        return (int(rng[0]), int(rng[1]))
    if isinstance(obj.get("start"), int) and isinstance(obj.get("end"), int):
        return (obj["start"], obj["end"])
    return None


def _is_node(value):
    return isinstance(value, dict) and "type" in value


def _opaque(obj):
    children, slots = [], []
    for key, value in obj.items():
        if key in _SKIP_KEYS:
            continue
        items = value if isinstance(value, list) else [value]
        for item in items:
            if _is_node(item):
                children.append(_convert(item))
                slots.append(key)
    name = obj.get("name") if isinstance(obj.get("name"), str) else None
    op = obj.get("operator") if isinstance(obj.get("operator"), str) else None
    return AstNode(
        obj["type"], tuple(children), tuple(slots), name=name, operator=op, opaque=True, span=_span(obj)
    )


def _convert(obj):
    if not isinstance(obj, dict):
        raise IngestError(f"expected an ESTree node object, got {type(obj).__name__}")
    kind = obj.get("type")
    if not isinstance(kind, str):
        raise IngestError("ESTree node is missing its 'type' field")
    span = _span(obj)
    if kind not in SCHEMA:
        return _opaque(obj)
    if kind == "Literal":
        if "regex" in obj:
            raw = obj.get("raw") or f"/{obj['regex']['pattern']}/{obj['regex'].get('flags', '')}"
            return AstNode("Literal", value=canonical_lexeme(raw), literal_type="regex", span=span)
        lexeme, ltype = _lexeme_for(obj.get("value"))
        raw = obj.get("raw")
        if isinstance(raw, str) and raw:
            lexeme = canonical_lexeme(raw)
        return AstNode("Literal", value=lexeme, literal_type=ltype, span=span)
    if kind == "Identifier":
        name = obj.get("name")
        if not isinstance(name, str) or not name:
            raise IngestError("Identifier without a name")
        return AstNode("Identifier", name=name, span=span)
    if kind == "Property" and (obj.get("kind", "init") != "init" or obj.get("method") or obj.get("shorthand")
                               or obj.get("computed")):
        return _opaque(obj)
    if kind in ("FunctionDeclaration", "FunctionExpression") and (obj.get("generator") or obj.get("async")):
        return _opaque(obj)
    fields = {}
    for slot, card in SCHEMA[kind]:
        raw = obj.get(slot)
        if card == "many":
            if raw is None:
                raw = []
            if not isinstance(raw, list):
                raise IngestError(f"{kind}.{slot} must be a list")
            if any(item is None for item in raw):
                return _opaque(obj)
            fields[slot] = [_convert(item) for item in raw]
        elif raw is None:
            if card == "one":
                raise IngestError(f"{kind}.{slot} is required")
        else:
            fields[slot] = _convert(raw)
    flags = []
    if kind == "MemberExpression" and obj.get("computed"):
        flags.append("computed")
    if kind in _UPDATE_AND_UNARY and obj.get("prefix", kind == "UnaryExpression"):
        flags.append("prefix")
    if kind == "VariableDeclaration":
        flags.append(obj.get("kind", "var"))
    operator = obj.get("operator")
    try:
        return make(kind, operator=operator, flags=flags, span=span, **fields)
    except ValueError as exc:
        raise IngestError(str(exc)) from exc


def ingest_estree(document) -> AstNode:
    """Build an :class:`AstNode` from ESTree JSON (bytes, text, or parsed dict).

    Unsupported node types become opaque nodes that keep their kind verbatim.

    >>> ingest_estree(b'{"type":"Program","body":[]}').kind
    'Program'
    """
    if isinstance(document, (bytes, bytearray)):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise IngestError(f"ESTree document is not UTF-8: {exc}") from exc
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise IngestError(f"malformed ESTree JSON: {exc}") from exc
    return _convert(document)


def _literal_value(node):
    ltype, lex = node.literal_type, node.value
    if ltype == "null":
        return None
    if ltype == "boolean":
        return lex == "true"
    if ltype == "number":
        try:
            val = int(lex, 16) if lex.lower().startswith("0x") else float(lex)
        except ValueError:
            return lex
        return int(val) if isinstance(val, float) and val.is_integer() else val
    if ltype == "string":
        try:
            return json.loads('"' + lex[1:-1].replace('\\\'', "'").replace('"', '\\"') + '"')
        except json.JSONDecodeError:
            return lex[1:-1]
    return None


def to_estree(node: AstNode) -> dict:
    """Export a node as an ESTree-shaped dict (spans become ``range``)."""
    if node.opaque:
        raise PrintError(f"opaque node {node.kind!r} cannot be exported faithfully")
    out = {"type": node.kind}
    if node.kind == "Identifier":
        out["name"] = node.name
    elif node.kind == "Literal":
        out["value"] = _literal_value(node)
        out["raw"] = node.value
        if node.literal_type == "regex":
            body, _, flags = node.value[1:].rpartition("/")
            out["regex"] = {"pattern": body, "flags": flags}
    if node.operator is not None:
        out["operator"] = node.operator
    if node.kind == "MemberExpression":
        out["computed"] = "computed" in node.flags
    if node.kind in _UPDATE_AND_UNARY:
        out["prefix"] = "prefix" in node.flags
    if node.kind == "VariableDeclaration":
        out["kind"] = next(iter(node.flags & {"var", "let", "const"}), "var")
    if node.kind == "Property":
        out["kind"] = "init"
    for slot, card in SCHEMA[node.kind]:
        kids = [to_estree(c) for c in node.get(slot)]
        out[slot] = kids if card == "many" else (kids[0] if kids else None)
    if node.span is not None:
        out["range"] = list(node.span)
    return out
