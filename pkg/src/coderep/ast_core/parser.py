"""Recursive-descent parser for an ES5-style JavaScript subset producing ESTree-kind nodes."""

from __future__ import annotations

from dataclasses import replace

from ..errors import ParseError
from .lexer import Lexeme, _line_col, canonical_lexeme, tokenize
from .nodes import AstNode, ident, literal, make
from .printer import BINARY_PRECEDENCE, normalize_parens

ASSIGN_OPERATORS = frozenset({"=", "+=", "-=", "*=", "/=", "%=", "<<=", ">>=", ">>>=", "&=", "|=", "^="})
UNARY_OPERATORS = frozenset({"!", "~", "+", "-", "typeof", "void", "delete"})
UNSUPPORTED_STATEMENTS = frozenset(
    {"switch", "try", "do", "with", "class", "import", "export", "debugger", "case", "default"}
)


class _Parser:
    def __init__(self, source):
        self.source = source
        self.toks = tokenize(source)
        self.i = 0

    # -- token helpers -----------------------------------------------------
    @property
    def tok(self) -> Lexeme:
        return self.toks[self.i]

    def peek(self, ahead=1) -> Lexeme:
        return self.toks[min(self.i + ahead, len(self.toks) - 1)]

    def fail(self, message, tok=None):
        tok = tok or self.tok
        line, col = _line_col(self.source, tok.start)
        raise ParseError(message, line, col)

    def at(self, text, type_=None):
        t = self.tok
        return t.text == text and t.type in ((type_,) if type_ else ("punct", "keyword"))

    def eat(self, text):
        if self.at(text):
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.at(text):
            found = self.tok.text or "end of input"
            self.fail(f"expected {text!r} but found {found!r}")
        t = self.tok
        self.i += 1
        return t

    def advance(self):
        t = self.tok
        self.i += 1
        return t

    def span_from(self, start_tok):
        end = self.toks[self.i - 1].end if self.i else start_tok.start
        return (start_tok.start, max(end, start_tok.start))

    def semicolon(self):
        if self.eat(";"):
            return
        if self.at("}") or self.tok.type == "eof" or self.tok.newline_before:
            return
        self.fail(f"expected ';' but found {self.tok.text!r}")

    # -- statements --------------------------------------------------------
    def program(self):
        start = self.tok
        body = []
        while self.tok.type != "eof":
            body.append(self.statement())
        return make("Program", body=body, span=(0, len(self.source)) if body else (start.start, start.start))

    def statement(self):
        t = self.tok
        if t.type == "keyword":
            if t.text in ("var", "let", "const"):
                node = self.var_declaration()
                self.semicolon()
                return replace(node, span=self.span_from(t))
            if t.text == "function":
                return self.function(declaration=True)
            handler = getattr(self, "st_" + t.text, None)
            if handler is not None:
                return handler()
            if t.text in UNSUPPORTED_STATEMENTS:
                self.fail(f"unsupported statement {t.text!r}")
        if t.type == "punct" and t.text == "{":
            return self.block()
        if t.type == "punct" and t.text == ";":
            self.advance()
            return make("EmptyStatement", span=self.span_from(t))
        expr = self.expression()
        self.semicolon()
        return make("ExpressionStatement", expression=expr, span=self.span_from(t))

    def block(self):
        t = self.expect("{")
        body = []
        while not self.at("}"):
            if self.tok.type == "eof":
                self.fail("unterminated block")
            body.append(self.statement())
        self.advance()
        return make("BlockStatement", body=body, span=self.span_from(t))

    def var_declaration(self):
        t = self.advance()
        decls = []
        while True:
            d0 = self.tok
            target = self.identifier()
            init = None
            if self.eat("="):
                init = self.assignment()
            decls.append(make("VariableDeclarator", id=target, init=init, span=self.span_from(d0)))
            if not self.eat(","):
                break
        return make("VariableDeclaration", declarations=decls, flags=(t.text,), span=self.span_from(t))

    def st_return(self):
        t = self.advance()
        arg = None
        if not (self.at(";") or self.at("}") or self.tok.type == "eof" or self.tok.newline_before):
            arg = self.expression()
        self.semicolon()
        return make("ReturnStatement", argument=arg, span=self.span_from(t))

    def st_throw(self):
        t = self.advance()
        arg = self.expression()
        self.semicolon()
        return make("ThrowStatement", argument=arg, span=self.span_from(t))

    def st_break(self):
        t = self.advance()
        if self.tok.type == "ident" and not self.tok.newline_before:
            self.fail("labelled break is not supported")
        self.semicolon()
        return make("BreakStatement", span=self.span_from(t))

    def st_continue(self):
        t = self.advance()
        if self.tok.type == "ident" and not self.tok.newline_before:
            self.fail("labelled continue is not supported")
        self.semicolon()
        return make("ContinueStatement", span=self.span_from(t))

    def st_if(self):
        t = self.advance()
        self.expect("(")
        test = self.expression()
        self.expect(")")
        cons = self.statement()
        alt = self.statement() if self.eat("else") else None
        return make("IfStatement", test=test, consequent=cons, alternate=alt, span=self.span_from(t))

    def st_while(self):
        t = self.advance()
        self.expect("(")
        test = self.expression()
        self.expect(")")
        body = self.statement()
        return make("WhileStatement", test=test, body=body, span=self.span_from(t))

    def st_for(self):
        t = self.advance()
        self.expect("(")
        init = test = update = None
        if not self.at(";"):
            if self.tok.type == "keyword" and self.tok.text in ("var", "let", "const"):
                init = self.var_declaration()
            else:
                init = self.expression()
        if self.at("in") or (self.tok.type == "ident" and self.tok.text == "of"):
            self.fail("for-in/for-of loops are not supported")
        self.expect(";")
        if not self.at(";"):
            test = self.expression()
        self.expect(";")
        if not self.at(")"):
            update = self.expression()
        self.expect(")")
        body = self.statement()
        return make("ForStatement", init=init, test=test, update=update, body=body, span=self.span_from(t))

    def function(self, declaration):
        t = self.expect("function")
        if self.at("*"):
            self.fail("generators are not supported")
        name = None
        if self.tok.type == "ident":
            name = self.identifier()
        elif declaration:
            self.fail("function declaration needs a name")
        self.expect("(")
        params = []
        while not self.at(")"):
            params.append(self.identifier())
            if not self.eat(","):
                break
        self.expect(")")
        body = self.block()
        kind = "FunctionDeclaration" if declaration else "FunctionExpression"
        return make(kind, id=name, params=params, body=body, span=self.span_from(t))

    # -- expressions -------------------------------------------------------
    def identifier(self):
        t = self.tok
        if t.type != "ident":
            self.fail(f"expected identifier but found {t.text or 'end of input'!r}")
        self.advance()
        return ident(t.text, span=(t.start, t.end))

    def expression(self):
        expr = self.assignment()
        if self.at(","):
            self.fail("sequence expressions are not supported")
        return expr

    def assignment(self):
        t = self.tok
        left = self.conditional()
        if self.tok.type == "punct" and self.tok.text in ASSIGN_OPERATORS:
            if left.kind not in ("Identifier", "MemberExpression") or left.parens:
                self.fail("invalid assignment target")
            op = self.advance().text
            right = self.assignment()
            return make("AssignmentExpression", operator=op, left=left, right=right, span=self.span_from(t))
        return left

    def conditional(self):
        t = self.tok
        test = self.binary(0)
        if self.eat("?"):
            cons = self.assignment()
            self.expect(":")
            alt = self.assignment()
            return make("ConditionalExpression", test=test, consequent=cons, alternate=alt, span=self.span_from(t))
        return test

    def binary_operator(self):
        t = self.tok
        if t.type == "punct" and t.text in BINARY_PRECEDENCE:
            return t.text
        if t.type == "keyword" and t.text in ("instanceof", "in"):
            return t.text
        return None

    def binary(self, min_prec):
        t = self.tok
        left = self.unary()
        while True:
            op = self.binary_operator()
            if op is None or BINARY_PRECEDENCE[op] < min_prec:
                return left
            self.advance()
            right = self.binary(BINARY_PRECEDENCE[op] + 1)
            kind = "LogicalExpression" if op in ("&&", "||") else "BinaryExpression"
            left = make(kind, operator=op, left=left, right=right, span=self.span_from(t))

    def unary(self):
        t = self.tok
        if t.text in UNARY_OPERATORS and t.type in ("punct", "keyword"):
            self.advance()
            arg = self.unary()
            return make("UnaryExpression", operator=t.text, argument=arg, flags=("prefix",), span=self.span_from(t))
        if t.type == "punct" and t.text in ("++", "--"):
            self.advance()
            arg = self.unary()
            self._check_update_target(arg)
            return make("UpdateExpression", operator=t.text, argument=arg, flags=("prefix",), span=self.span_from(t))
        expr = self.lhs()
        if self.tok.type == "punct" and self.tok.text in ("++", "--") and not self.tok.newline_before:
            op = self.advance().text
            self._check_update_target(expr)
            return make("UpdateExpression", operator=op, argument=expr, span=self.span_from(t))
        return expr

    def _check_update_target(self, node):
        if node.kind not in ("Identifier", "MemberExpression"):
            self.fail("invalid update target")

    def arguments(self):
        self.expect("(")
        args = []
        while not self.at(")"):
            args.append(self.assignment())
            if not self.eat(","):
                break
        self.expect(")")
        return args

    def lhs(self):
        t = self.tok
        if self.at("new", "keyword"):
            self.advance()
            callee = self.member_chain(self.primary(), t, allow_calls=False)
            args = self.arguments() if self.at("(") else []
            expr = make("NewExpression", callee=callee, arguments=args, span=self.span_from(t))
        else:
            expr = self.primary()
        return self.member_chain(expr, t, allow_calls=True)

    def member_chain(self, expr, t, allow_calls):
        while True:
            if self.eat("."):
                name = self.tok
                if name.type not in ("ident", "keyword"):
                    self.fail("expected property name after '.'")
                self.advance()
                prop = ident(name.text, span=(name.start, name.end))
                expr = make("MemberExpression", object=expr, property=prop, span=self.span_from(t))
            elif self.at("["):
                self.advance()
                prop = self.expression()
                self.expect("]")
                expr = make("MemberExpression", object=expr, property=prop, flags=("computed",), span=self.span_from(t))
            elif allow_calls and self.at("("):
                args = self.arguments()
                expr = make("CallExpression", callee=expr, arguments=args, span=self.span_from(t))
            else:
                return expr

    def primary(self):
        t = self.tok
        if t.type == "ident":
            return self.identifier()
        if t.type == "number":
            self.advance()
            return literal(t.text, "number", span=(t.start, t.end))
        if t.type in ("string", "regex"):
            self.advance()
            kind = "string" if t.type == "string" else "regex"
            return literal(canonical_lexeme(t.text), kind, span=(t.start, t.end))
        if t.type == "keyword":
            if t.text in ("true", "false"):
                self.advance()
                return literal(t.text, "boolean", span=(t.start, t.end))
            if t.text == "null":
                self.advance()
                return literal("null", "null", span=(t.start, t.end))
            if t.text == "this":
                self.advance()
                return make("ThisExpression", span=(t.start, t.end))
            if t.text == "function":
                return self.function(declaration=False)
        if t.type == "punct":
            if t.text == "(":
                self.advance()
                inner = self.expression()
                self.expect(")")
                return replace(inner, parens=True)
            if t.text == "[":
                return self.array()
            if t.text == "{":
                return self.object()
        self.fail(f"unexpected token {t.text or 'end of input'!r}")

    def array(self):
        t = self.expect("[")
        elems = []
        while not self.at("]"):
            if self.at(","):
                self.fail("array holes are not supported")
            elems.append(self.assignment())
            if not self.eat(","):
                break
        self.expect("]")
        return make("ArrayExpression", elements=elems, span=self.span_from(t))

    def object(self):
        t = self.expect("{")
        props = []
        while not self.at("}"):
            k = self.tok
            if k.type in ("ident", "keyword"):
                self.advance()
                key = ident(k.text, span=(k.start, k.end))
            elif k.type == "string":
                self.advance()
                key = literal(canonical_lexeme(k.text), "string", span=(k.start, k.end))
            elif k.type == "number":
                self.advance()
                key = literal(k.text, "number", span=(k.start, k.end))
            else:
                self.fail("expected property key")
            if k.type == "ident" and k.text in ("get", "set") and not self.at(":"):
                self.fail("accessor properties are not supported")
            self.expect(":")
            value = self.assignment()
            props.append(make("Property", key=key, value=value, span=self.span_from(k)))
            if not self.eat(","):
                break
        self.expect("}")
        return make("ObjectExpression", properties=props, span=self.span_from(t))


def parse_js(source: str) -> AstNode:
    """Parse JavaScript source into a ``Program`` node.

    Raises :class:`~coderep.errors.ParseError` for anything outside the subset.

    >>> parse_js("f(a, b);").children[0].kind
    'ExpressionStatement'
    """
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    tree = _Parser(source).program()
    return normalize_parens(tree)
