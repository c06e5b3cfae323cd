"""ESTree-flavoured syntax tree nodes and the token unit used by all encoders."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator

# Child layout per supported kind, in ESTree field order.
# "one": exactly one child, "opt": zero or one, "many": any number.
SCHEMA: dict[str, tuple[tuple[str, str], ...]] = {
    "Program": (("body", "many"),),
    "ExpressionStatement": (("expression", "one"),),
    "VariableDeclaration": (("declarations", "many"),),
    "VariableDeclarator": (("id", "one"), ("init", "opt")),
    "FunctionDeclaration": (("id", "one"), ("params", "many"), ("body", "one")),
    "ReturnStatement": (("argument", "opt"),),
    "BlockStatement": (("body", "many"),),
    "IfStatement": (("test", "one"), ("consequent", "one"), ("alternate", "opt")),
    "WhileStatement": (("test", "one"), ("body", "one")),
    "ForStatement": (("init", "opt"), ("test", "opt"), ("update", "opt"), ("body", "one")),
    "BreakStatement": (),
    "ContinueStatement": (),
    "ThrowStatement": (("argument", "one"),),
    "EmptyStatement": (),
    "Identifier": (),
    "Literal": (),
    "ThisExpression": (),
    "ArrayExpression": (("elements", "many"),),
    "ObjectExpression": (("properties", "many"),),
    "Property": (("key", "one"), ("value", "one")),
    "FunctionExpression": (("id", "opt"), ("params", "many"), ("body", "one")),
    "MemberExpression": (("object", "one"), ("property", "one")),
    "CallExpression": (("callee", "one"), ("arguments", "many")),
    "NewExpression": (("callee", "one"), ("arguments", "many")),
    "UnaryExpression": (("argument", "one"),),
    "UpdateExpression": (("argument", "one"),),
    "BinaryExpression": (("left", "one"), ("right", "one")),
    "LogicalExpression": (("left", "one"), ("right", "one")),
    "ConditionalExpression": (("test", "one"), ("consequent", "one"), ("alternate", "one")),
    "AssignmentExpression": (("left", "one"), ("right", "one")),
}

KINDS = frozenset(SCHEMA)
LEAF_KINDS = frozenset({"Identifier", "Literal", "ThisExpression"})
OPERATOR_KINDS = frozenset(
    {"BinaryExpression", "LogicalExpression", "UnaryExpression", "AssignmentExpression", "UpdateExpression"}
)
STATEMENT_KINDS = frozenset(
    {
        "ExpressionStatement", "VariableDeclaration", "FunctionDeclaration", "ReturnStatement",
        "BlockStatement", "IfStatement", "WhileStatement", "ForStatement", "BreakStatement",
        "ContinueStatement", "ThrowStatement", "EmptyStatement",
    }
)
SIMPLE_STATEMENT_KINDS = frozenset(
    {
        "ExpressionStatement", "VariableDeclaration", "ReturnStatement", "BreakStatement",
        "ContinueStatement", "ThrowStatement", "EmptyStatement",
    }
)
LITERAL_TYPES = frozenset({"number", "string", "boolean", "null", "regex"})

BINARY_OPERATORS = (
    "+", "-", "*", "/", "%", "==", "!=", "===", "!==", "<", "<=", ">", ">=",
    "<<", ">>", ">>>", "&", "|", "^", "instanceof", "in",
)
LOGICAL_OPERATORS = ("&&", "||")

TOKEN_CATEGORIES = frozenset(
    {
        "identifier", "literal-number", "literal-string", "literal-other",
        "punctuation", "keyword", "operator", "marker",
    }
)


class Token(str):
    """A token is its text plus a lexical category; it compares equal to plain strings."""

    def __new__(cls, text, category="marker"):
        if not text or any(ch.isspace() for ch in text):
            raise ValueError(f"token text must be non-empty and whitespace-free: {text!r}")
        if category not in TOKEN_CATEGORIES:
            raise ValueError(f"unknown token category {category!r}")
        obj = super().__new__(cls, text)
        obj.category = category
        return obj

    @property
    def text(self):
        return str(self)

    def __repr__(self):
        return f"Token({str(self)!r}, {self.category!r})"

    def __reduce__(self):
        return (Token, (str(self), self.category))


@dataclass(frozen=True)
class AstNode:
    """Immutable syntax tree node.

    ``children`` is the flat, ordered child list and ``slots`` names the ESTree
    field each child belongs to (repeated for list-valued fields), so optional
    fields need no placeholder. ``parens`` records redundant source parentheses
    and ``span`` source offsets; neither takes part in equality.
    """

    kind: str
    children: tuple[AstNode, ...] = ()
    slots: tuple[str, ...] = ()
    name: str | None = None
    value: str | None = None
    literal_type: str | None = None
    operator: str | None = None
    flags: frozenset = frozenset()
    opaque: bool = False
    parens: bool = field(default=False, compare=False)
    span: tuple[int, int] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.children) != len(self.slots):
            raise ValueError(f"{self.kind}: children/slots length mismatch")
        if self.span is not None and self.span[0] > self.span[1]:
            raise ValueError(f"{self.kind}: span start after end {self.span}")
        if self.opaque:
            return
        if self.kind not in SCHEMA:
            raise ValueError(f"unsupported node kind {self.kind!r} (use opaque=True)")
        if self.kind in LEAF_KINDS and self.children:
            raise ValueError(f"{self.kind} is a leaf")
        if (self.operator is not None) != (self.kind in OPERATOR_KINDS):
            raise ValueError(f"{self.kind}: operator presence mismatch")
        if self.kind == "Identifier" and not self.name:
            raise ValueError("Identifier needs a name")
        if self.kind == "Literal" and (not self.value or self.literal_type not in LITERAL_TYPES):
            raise ValueError("Literal needs a lexeme and a literal type")
        if self.kind in ("BinaryExpression", "LogicalExpression") and len(self.children) != 2:
            raise ValueError(f"{self.kind} needs exactly two operands")

    # -- structural access -------------------------------------------------
    def get(self, slot) -> list[AstNode]:
        return [c for c, s in zip(self.children, self.slots) if s == slot]

    def first(self, slot) -> AstNode | None:
        for c, s in zip(self.children, self.slots):
            if s == slot:
                return c
        return None

    def slot_indices(self, slot) -> list[int]:
        return [i for i, s in enumerate(self.slots) if s == slot]

    @property
    def callee(self):
        return self.first("callee")

    @property
    def arguments(self):
        return self.get("arguments")

    @property
    def left(self):
        return self.first("left")

    @property
    def right(self):
        return self.first("right")

    def strip(self) -> AstNode:
        """Copy without spans or paren marks (useful for stable reprs)."""
        return replace(
            self,
            children=tuple(c.strip() for c in self.children),
            parens=False,
            span=None,
        )


def make(kind, *, name=None, lexeme=None, literal_type=None, operator=None, flags=(), span=None, **fields):
    """Build a supported node from ESTree-style keyword fields.

    >>> make("CallExpression", callee=ident("f"), arguments=[ident("a")]).slots
    ('callee', 'arguments')
    """
    layout = SCHEMA[kind]
    unknown = set(fields) - {slot for slot, _ in layout}
    if unknown:
        raise ValueError(f"{kind} has no field(s) {sorted(unknown)}")
    children, slots = [], []
    for slot, card in layout:
        val = fields.get(slot)
        if card == "many":
            items = list(val or ())
        elif val is None:
            if card == "one":
                raise ValueError(f"{kind}.{slot} is required")
            items = []
        else:
            items = [val]
        children.extend(items)
        slots.extend([slot] * len(items))
    return AstNode(
        kind,
        tuple(children),
        tuple(slots),
        name=name,
        value=lexeme,
        literal_type=literal_type,
        operator=operator,
        flags=frozenset(flags),
        span=span,
    )


def ident(name, span=None):
    return AstNode("Identifier", name=name, span=span)


def literal(lexeme, literal_type, span=None):
    return AstNode("Literal", value=lexeme, literal_type=literal_type, span=span)


def walk(node, path=()) -> Iterator[tuple[tuple[int, ...], AstNode]]:
    """Pre-order traversal yielding ``(path, node)``; paths index into ``children``."""
    yield path, node
    for i, child in enumerate(node.children):
        yield from walk(child, path + (i,))


def walk_postorder(node, path=()) -> Iterator[tuple[tuple[int, ...], AstNode]]:
    for i, child in enumerate(node.children):
        yield from walk_postorder(child, path + (i,))
    yield path, node


def node_at(node, path) -> AstNode:
    for i in path:
        node = node.children[i]
    return node


def replace_at(node, path, new) -> AstNode:
    if not path:
        return new
    i = path[0]
    kids = list(node.children)
    kids[i] = replace_at(kids[i], path[1:], new)
    return replace(node, children=tuple(kids))
