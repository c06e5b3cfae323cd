"""Print syntax trees as space-separable token streams.

Parentheses are emitted where precedence requires them and where the source
had redundant ones (``AstNode.parens``), which makes parsing and printing
mutually inverse on printer output.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..errors import PrintError
from .nodes import AstNode, Token

BINARY_PRECEDENCE = {
    "||": 4, "&&": 5, "|": 6, "^": 7, "&": 8,
    "==": 9, "!=": 9, "===": 9, "!==": 9,
    "<": 10, ">": 10, "<=": 10, ">=": 10, "instanceof": 10, "in": 10,
    "<<": 11, ">>": 11, ">>>": 11,
    "+": 12, "-": 12,
    "*": 13, "/": 13, "%": 13,
}
ASSIGN_PREC = 2
COND_PREC = 3
UNARY_PREC = 15
POSTFIX_PREC = 16
CALL_PREC = 17
MEMBER_PREC = 18
PRIMARY_PREC = 20

KEYWORD_OPERATORS = frozenset({"typeof", "void", "delete", "instanceof", "in"})
PUNCTUATION = frozenset({"(", ")", "[", "]", "{", "}", ",", ";", ".", ":", "?"})


def precedence(node: AstNode) -> int:
    kind = node.kind
    if kind in ("BinaryExpression", "LogicalExpression"):
        return BINARY_PRECEDENCE[node.operator]
    if kind == "AssignmentExpression":
        return ASSIGN_PREC
    if kind == "ConditionalExpression":
        return COND_PREC
    if kind == "UnaryExpression":
        return UNARY_PREC
    if kind == "UpdateExpression":
        return UNARY_PREC if "prefix" in node.flags else POSTFIX_PREC
    if kind == "CallExpression":
        return CALL_PREC
    if kind in ("MemberExpression", "NewExpression"):
        return MEMBER_PREC
    return PRIMARY_PREC


def _new_callee_ok(node):
    # `new` binds member chains only; any call inside must be parenthesized.
    if node.kind == "MemberExpression":
        return _new_callee_ok(node.children[0]) and not node.children[0].parens
    return precedence(node) >= PRIMARY_PREC


def paren_required(parent: AstNode, index: int, child: AstNode) -> bool:
    """Whether ``child`` at ``parent.children[index]`` needs parentheses by precedence."""
    if child.opaque or parent.opaque:
        return False
    slot = parent.slots[index]
    kind = parent.kind
    cp = precedence(child)
    if kind in ("BinaryExpression", "LogicalExpression"):
        p = BINARY_PRECEDENCE[parent.operator]
        return cp < p if slot == "left" else cp <= p
    if kind == "UnaryExpression":
        return cp < UNARY_PREC
    if kind == "UpdateExpression":
        return cp < CALL_PREC
    if kind == "AssignmentExpression":
        return cp < CALL_PREC if slot == "left" else cp < ASSIGN_PREC
    if kind == "ConditionalExpression":
        return cp <= COND_PREC if slot == "test" else cp < ASSIGN_PREC
    if kind == "MemberExpression":
        return slot == "object" and cp < CALL_PREC
    if kind == "CallExpression":
        return slot == "callee" and cp < CALL_PREC
    if kind == "NewExpression":
        return slot == "callee" and not _new_callee_ok(child)
    if kind == "ExpressionStatement":
        return _leading_token(child) in ("function", "{")
    return False


def _leading_token(node):
    """First token the node would print when not itself parenthesized."""
    while True:
        if node.kind == "FunctionExpression":
            return "function"
        if node.kind == "ObjectExpression":
            return "{"
        if node.kind in ("UnaryExpression", "NewExpression") or (
            node.kind == "UpdateExpression" and "prefix" in node.flags
        ):
            return None
        if not node.children or node.kind in ("ArrayExpression",):
            return None
        first = node.children[0]
        if first.parens or paren_required(node, 0, first):
            return "("
        node = first


@dataclass
class Printed:
    """Token stream plus provenance: every token's node path and each node's token range."""

    tokens: list[Token] = field(default_factory=list)
    owners: list[tuple[int, ...]] = field(default_factory=list)
    ranges: dict[tuple[int, ...], tuple[int, int]] = field(default_factory=dict)
    roles: dict[int, str] = field(default_factory=dict)

    def span_of(self, path):
        return self.ranges[tuple(path)]


class _Printer:
    def __init__(self):
        self.out = Printed()

    def emit(self, text, category, path, role=None):
        if role:
            self.out.roles[len(self.out.tokens)] = role
        self.out.tokens.append(Token(text, category))
        self.out.owners.append(path)

    def punct(self, text, path):
        self.emit(text, "punctuation", path)

    def node(self, node, path, parent=None, index=None, role=None):
        start = len(self.out.tokens)
        wrap = node.parens or (parent is not None and paren_required(parent, index, node))
        if wrap:
            self.punct("(", path)
        self._body(node, path, role)
        if wrap:
            self.punct(")", path)
        self.out.ranges[path] = (start, len(self.out.tokens))

    def _kids(self, node, path, slot):
        return [(i, c) for i, (c, s) in enumerate(zip(node.children, node.slots)) if s == slot]

    def _sub(self, node, path, i, role=None):
        self.node(node.children[i], path + (i,), node, i, role)

    def _list(self, node, path, slot, sep=","):
        for n, (i, _) in enumerate(self._kids(node, path, slot)):
            if n:
                self.punct(sep, path)
            self._sub(node, path, i)

    def _one(self, node, path, slot, role=None):
        for i, _ in self._kids(node, path, slot):
            self._sub(node, path, i, role)

    def _body(self, node, path, role):
        if node.opaque:
            raise PrintError(f"opaque node {node.kind!r} has no lexical form")
        k = node.kind
        method = getattr(self, "p_" + k, None)
        if method is None:
            raise PrintError(f"cannot print node kind {k!r}")
        method(node, path, role)

    # -- statements --------------------------------------------------------
    def p_Program(self, node, path, role):
        for i in range(len(node.children)):
            self._sub(node, path, i)

    def p_BlockStatement(self, node, path, role):
        self.punct("{", path)
        self.p_Program(node, path, role)
        self.punct("}", path)

    def p_ExpressionStatement(self, node, path, role):
        self._sub(node, path, 0)
        self.punct(";", path)

    def p_EmptyStatement(self, node, path, role):
        self.punct(";", path)

    def _declaration(self, node, path):
        decl_kind = next(iter(node.flags & {"var", "let", "const"}), "var")
        self.emit(decl_kind, "keyword", path)
        self._list(node, path, "declarations")

    def p_VariableDeclaration(self, node, path, role):
        self._declaration(node, path)
        self.punct(";", path)

    def p_VariableDeclarator(self, node, path, role):
        self._one(node, path, "id")
        if node.first("init") is not None:
            self.emit("=", "operator", path)
            self._one(node, path, "init")

    def _function(self, node, path):
        self.emit("function", "keyword", path)
        self._one(node, path, "id", role="method")
        self.punct("(", path)
        self._list(node, path, "params")
        self.punct(")", path)
        self._one(node, path, "body")

    def p_FunctionDeclaration(self, node, path, role):
        self._function(node, path)

    def p_FunctionExpression(self, node, path, role):
        self._function(node, path)

    def p_ReturnStatement(self, node, path, role):
        self.emit("return", "keyword", path)
        self._one(node, path, "argument")
        self.punct(";", path)

    def p_ThrowStatement(self, node, path, role):
        self.emit("throw", "keyword", path)
        self._one(node, path, "argument")
        self.punct(";", path)

    def p_BreakStatement(self, node, path, role):
        self.emit("break", "keyword", path)
        self.punct(";", path)

    def p_ContinueStatement(self, node, path, role):
        self.emit("continue", "keyword", path)
        self.punct(";", path)

    def p_IfStatement(self, node, path, role):
        self.emit("if", "keyword", path)
        self.punct("(", path)
        self._one(node, path, "test")
        self.punct(")", path)
        self._one(node, path, "consequent")
        if node.first("alternate") is not None:
            self.emit("else", "keyword", path)
            self._one(node, path, "alternate")

    def p_WhileStatement(self, node, path, role):
        self.emit("while", "keyword", path)
        self.punct("(", path)
        self._one(node, path, "test")
        self.punct(")", path)
        self._one(node, path, "body")

    def p_ForStatement(self, node, path, role):
        self.emit("for", "keyword", path)
        self.punct("(", path)
        for i, c in self._kids(node, path, "init"):
            if c.kind == "VariableDeclaration":
                start = len(self.out.tokens)
                self._declaration(c, path + (i,))
                self.out.ranges[path + (i,)] = (start, len(self.out.tokens))
            else:
                self._sub(node, path, i)
        self.punct(";", path)
        self._one(node, path, "test")
        self.punct(";", path)
        self._one(node, path, "update")
        self.punct(")", path)
        self._one(node, path, "body")

    # -- expressions -------------------------------------------------------
    def p_Identifier(self, node, path, role):
        self.emit(node.name, "identifier", path, role)

    def p_Literal(self, node, path, role):
        cat = {"number": "literal-number", "string": "literal-string"}.get(node.literal_type, "literal-other")
        self.emit(node.value, cat, path)

    def p_ThisExpression(self, node, path, role):
        self.emit("this", "keyword", path)

    def p_ArrayExpression(self, node, path, role):
        self.punct("[", path)
        self._list(node, path, "elements")
        self.punct("]", path)

    def p_ObjectExpression(self, node, path, role):
        self.punct("{", path)
        self._list(node, path, "properties")
        self.punct("}", path)

    def p_Property(self, node, path, role):
        self._one(node, path, "key", role="property")
        self.punct(":", path)
        self._one(node, path, "value")

    def p_MemberExpression(self, node, path, role):
        self._sub(node, path, 0)
        if "computed" in node.flags:
            self.punct("[", path)
            self._sub(node, path, 1)
            self.punct("]", path)
        else:
            self.punct(".", path)
            self._sub(node, path, 1, role=role or "property")

    def p_CallExpression(self, node, path, role):
        self._one(node, path, "callee", role="method")
        self.punct("(", path)
        self._list(node, path, "arguments")
        self.punct(")", path)

    def p_NewExpression(self, node, path, role):
        self.emit("new", "keyword", path)
        self.p_CallExpression(node, path, role)

    def p_UnaryExpression(self, node, path, role):
        op = node.operator
        self.emit(op, "keyword" if op in KEYWORD_OPERATORS else "operator", path)
        self._sub(node, path, 0)

    def p_UpdateExpression(self, node, path, role):
        if "prefix" in node.flags:
            self.emit(node.operator, "operator", path)
            self._sub(node, path, 0)
        else:
            self._sub(node, path, 0)
            self.emit(node.operator, "operator", path)

    def p_BinaryExpression(self, node, path, role):
        self._sub(node, path, 0)
        op = node.operator
        self.emit(op, "keyword" if op in KEYWORD_OPERATORS else "operator", path)
        self._sub(node, path, 1)

    p_LogicalExpression = p_BinaryExpression

    def p_ConditionalExpression(self, node, path, role):
        self._sub(node, path, 0)
        self.punct("?", path)
        self._sub(node, path, 1)
        self.punct(":", path)
        self._sub(node, path, 2)

    def p_AssignmentExpression(self, node, path, role):
        self._sub(node, path, 0)
        self.emit(node.operator, "operator", path)
        self._sub(node, path, 1)


def print_annotated(node: AstNode) -> Printed:
    """Print ``node`` and keep token provenance (used by the encoders)."""
    p = _Printer()
    p.node(node, ())
    return p.out


def print_tokens(node: AstNode) -> list[Token]:
    """Deterministic token stream for ``node``.

    >>> from coderep.ast_core.nodes import ident
    >>> print_tokens(ident("x"))
    [Token('x', 'identifier')]
    """
    return print_annotated(node).tokens


def printed_with_parens(parent: AstNode, index: int) -> bool:
    child = parent.children[index]
    return child.parens or paren_required(parent, index, child)


def normalize_parens(node: AstNode, parent=None, index=None) -> AstNode:
    """Keep ``parens`` only where parentheses are redundant by precedence."""
    kids = tuple(normalize_parens(c, node, i) for i, c in enumerate(node.children))
    parens = node.parens
    if parens and parent is not None:
        bare = replace(node, children=kids, parens=False)
        parens = not paren_required(parent, index, bare)
    if parens == node.parens and all(a is b for a, b in zip(kids, node.children)):
        return node
    return replace(node, children=kids, parens=parens)
