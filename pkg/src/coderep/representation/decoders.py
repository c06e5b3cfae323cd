"""Decoders that turn lossless encodings back into source tokens."""

from __future__ import annotations

from ..ast_core.nodes import KINDS, SCHEMA, AstNode, ident, literal, make
from ..ast_core.printer import BINARY_PRECEDENCE, PUNCTUATION, print_tokens
from ..errors import MalformedEncoding, MissingMap, NotPatchable
from ..validation import check_rep
from .abstraction import substitute
from .ids import END, LITERAL_MARKERS, LOSSLESS, PREFIXES, TYPE_TAGS
from .wordsplit import join_subwords

_OPERATOR_TEXTS = frozenset(BINARY_PRECEDENCE) | frozenset(
    "= += -= *= /= %= <<= >>= >>>= &= |= ^= ! ~ ++ --".split()
)
# Tokens that can follow a complete identifier or literal inside a statement.
_FOLLOWERS = PUNCTUATION | _OPERATOR_TEXTS | {"in", "instanceof"}


def _wt2(tokens, literals):
    out = join_subwords(tokens)
    needed = sum(t in LITERAL_MARKERS for t in out)
    if not needed:
        return out
    if literals is None:
        raise MissingMap("WT2 decoding needs the original literals of the example")
    literals = list(literals)
    if len(literals) != needed:
        raise MalformedEncoding(f"{needed} literal markers but {len(literals)} stored literals")
    it = iter(literals)
    return [next(it) if t in LITERAL_MARKERS else t for t in out]


def _db(tokens, typed):
    toks = [str(t) for t in tokens]
    out, i, n = [], 0, len(toks)
    while i < n:
        t = toks[i]
        if t in PREFIXES:
            if i + 1 >= n:
                raise MalformedEncoding(f"prefix {t} at end of stream")
            t1 = toks[i + 1]
            if typed and t1 in TYPE_TAGS and i + 2 < n and toks[i + 2] not in _FOLLOWERS:
                out.append(toks[i + 2])
                i += 3
            else:
                out.append(t1)
                i += 2
            continue
        if typed and t in TYPE_TAGS:
            # Identifiers and literals are always prefixed, so a bare tag is a
            # type unless it is the keyword starting a function expression.
            if t != "function" or not _function_header(toks, i):
                i += 1
                continue
        out.append(t)
        i += 1
    return out


def _function_header(toks, i):
    """Whether ``toks[i:]`` reads ``function [ID name] ( [ID p {, ID p}] ) {``."""
    j = i + 1
    if toks[j:j + 1] == ["ID"]:
        j += 2
    if toks[j:j + 1] != ["("]:
        return False
    j += 1
    if toks[j:j + 1] != [")"]:
        while True:
            if toks[j:j + 1] != ["ID"] or j + 1 >= len(toks):
                return False
            j += 2
            if toks[j:j + 1] == [","]:
                j += 1
                continue
            break
        if toks[j:j + 1] != [")"]:
            return False
    return toks[j + 1:j + 2] == ["{"]


class _ListingReader:
    def __init__(self, tokens, typed):
        self.toks = [str(t) for t in tokens]
        self.i = 0
        self.typed = typed

    def peek(self, ahead=0):
        j = self.i + ahead
        return self.toks[j] if j < len(self.toks) else None

    def take(self, what="token"):
        tok = self.peek()
        if tok is None:
            raise MalformedEncoding(f"listing ended while reading {what}")
        self.i += 1
        return tok

    def at_end(self):
        tok = self.peek()
        return tok is None or tok == END

    def close(self):
        if self.peek() == END:
            self.i += 1

    def _skip_type(self, kind):
        t1 = self.peek()
        if not self.typed or t1 not in TYPE_TAGS:
            return
        if kind in ("Identifier", "Literal"):
            t2 = self.peek(1)
            if t2 is None or t2 in KINDS or t2 == END:
                return
        self.i += 1

    def node(self) -> AstNode:
        kind = self.take("node kind")
        if kind not in SCHEMA:
            raise MalformedEncoding(f"unknown node kind {kind!r} in listing")
        self._skip_type(kind)
        if kind == "Identifier":
            return ident(self.take("identifier name"))
        if kind == "Literal":
            lex = self.take("literal")
            return literal(lex, _literal_type(lex))
        kw = {}
        flags = []
        if kind in ("BinaryExpression", "LogicalExpression", "UnaryExpression", "AssignmentExpression",
                    "UpdateExpression"):
            kw["operator"] = self.take("operator")
            if kind == "UnaryExpression":
                flags.append("prefix")
        if kind == "UpdateExpression":
            fix = self.take("update form")
            if fix not in ("prefix", "postfix"):
                raise MalformedEncoding(f"expected prefix/postfix, got {fix!r}")
            if fix == "prefix":
                flags.append("prefix")
        if kind == "MemberExpression" and self.peek() == "computed":
            self.i += 1
            flags.append("computed")
        if kind == "VariableDeclaration":
            decl = self.take("declaration kind")
            if decl not in ("var", "let", "const"):
                raise MalformedEncoding(f"bad declaration kind {decl!r}")
            flags.append(decl)
        fields = {}
        for slot, card in SCHEMA[kind]:
            if card == "one":
                fields[slot] = self.node()
            elif card == "opt":
                if self.at_end():
                    self.close()
                else:
                    fields[slot] = self.node()
            else:
                items = []
                while not self.at_end():
                    items.append(self.node())
                self.close()
                fields[slot] = items
        try:
            return make(kind, flags=flags, **kw, **fields)
        except ValueError as exc:
            raise MalformedEncoding(str(exc)) from exc


def _literal_type(lex):
    if lex[0] in "\"'":
        return "string"
    if lex[0] == "/":
        return "regex"
    if lex in ("true", "false"):
        return "boolean"
    if lex == "null":
        return "null"
    return "number"


def listing_to_statement(tokens, typed=False) -> AstNode:
    reader = _ListingReader(tokens, typed)
    root = reader.node()
    while reader.peek() == END:
        reader.i += 1
    if reader.peek() is not None:
        raise MalformedEncoding(f"trailing tokens after listing: {reader.toks[reader.i:]}")
    if root.kind != "Program" or len(root.children) != 1:
        raise MalformedEncoding("listing must be a Program holding exactly one statement")
    return root.children[0]


def _ast(tokens, typed):
    stmt = listing_to_statement(tokens, typed)
    out = [str(t) for t in print_tokens(stmt)]
    return out[:-1] if stmt.kind == "ExpressionStatement" else out


def decode(rep: str, tokens, aux=None) -> list[str]:
    """Recover the word-tokenized source of a lossless encoding.

    ``aux`` is the abstraction map for TF1 and the stored literal lexemes for
    WT2; other representations ignore it.
    """
    check_rep(rep)
    if rep not in LOSSLESS:
        raise NotPatchable(rep)
    if rep == "WT1":
        return [str(t) for t in tokens]
    if rep == "WT2":
        return _wt2(tokens, aux)
    if rep in ("DB1", "DB2"):
        return _db(tokens, typed=rep == "DB2")
    if rep == "TF1":
        return substitute(tokens, aux)
    return _ast(tokens, typed=rep == "AST2")
