import json

import pytest
from conftest import esprima_json
from jsgen import programs, statements

from coderep.ast_core import ingest_estree, make, parse_js, print_tokens, to_estree, walk
from coderep.ast_core.lexer import canonical_lexeme, tokenize
from coderep.ast_core.nodes import Token, ident, literal, node_at, replace_at
from coderep.ast_core.printer import normalize_parens
from coderep.errors import IngestError, ParseError

FIXTURE = [
    "i <= j;", "setTimeout(delay, fn);", "a + b * c;", "(a + b) * c;", "a - (b - c);", "x = y = z;",
    "var a = 1, b;", "let q = 'x';", "const k = 0x10;", "f(g(h(1)), [1, 2]);", "obj.m(a)[0].n;",
    "a[b][c] = d;", "new Foo(1, 2);", "new Foo;", "!a && b || c;", "a ? b : c ? d : e;",
    "typeof x === 'undefined';", "void 0;", "delete o.p;", "x++;", "--y;", "-a * -b;", "a instanceof B;",
    "'k' in o;", "a >>> 2;", "a |= 1;", "x = {a: 1, 'b': 2, 3: c};", "x = [];", "x = {};",
    "f(function (a, b) { return a + b; });", "function g(a) { if (a) { return 1; } else return 2; }",
    "while (i < n) { i += 1; }", "for (var i = 0; i < n; i++) { s = s + i; }", "for (;;) { break; }",
    "if (a) b(); else if (c) d();", "throw new Error('x');", "x = /ab+c/gi;", "x = a.b.c(d);",
    "x = true ? null : this;", "f(1.5, .5);", "f(1e3, 2E-2);", "s = \"a\\\"b\";", "x = -(-a);",
    "x = !(a && b);", "x = (a, b);" if False else "x = a;", "y = f()(g);", "z = a.b[c.d];",
    "for (x = 0; x < 3; x++) continue;", ";", "a;\nb;",
]


def body(src):
    return parse_js(src).children


def test_reference_statement_shape():
    (stmt,) = body("setTimeout(delay, fn);")
    assert stmt.kind == "ExpressionStatement"
    call = stmt.children[0]
    assert call.kind == "CallExpression"
    assert call.callee == ident("setTimeout")
    assert call.arguments == [ident("delay"), ident("fn")]


def test_empty_program():
    prog = parse_js("")
    assert prog.kind == "Program" and prog.children == ()


def test_binary_le():
    (stmt,) = body("i<=j")
    e = stmt.children[0]
    assert (e.kind, e.operator, e.left, e.right) == ("BinaryExpression", "<=", ident("i"), ident("j"))


@pytest.mark.parametrize("src", FIXTURE)
def test_matches_reference_parser(src):
    assert len(set(FIXTURE)) == 50
    assert ingest_estree(esprima_json(src)) == parse_js(src)


def test_reference_parser_agrees_on_random_programs():
    for p in programs(150, seed=11):
        src = "function wrap() {\n" + p + "\n}"
        assert ingest_estree(esprima_json(src)) == parse_js(src), p


def test_spans_nest():
    prog = parse_js("f(a + b, c);")
    for path, node in walk(prog):
        assert node.span is not None
        for child in node.children:
            assert node.span[0] <= child.span[0] <= child.span[1] <= node.span[1]


def test_parse_error_location():
    with pytest.raises(ParseError) as err:
        parse_js("a = ;\n")
    assert err.value.line == 1
    with pytest.raises(ParseError) as err:
        parse_js("x;\ny = (1;")
    assert err.value.line == 2


@pytest.mark.parametrize("src", ["switch (a) {}", "try { a(); } catch (e) {}", "do { a(); } while (b);",
                                 "class A {}", "x = (a, b);", "for (k in o) {}", "[a, , b];", "x = `t`;"])
def test_rejects_unsupported(src):
    with pytest.raises(ParseError):
        parse_js(src)


def test_ingest_minimal_and_errors():
    assert ingest_estree('{"type":"Program","body":[]}') == parse_js("")
    with pytest.raises(IngestError):
        ingest_estree({"noType": 1})
    with pytest.raises(IngestError):
        ingest_estree("{not json")


def test_ingest_keeps_unknown_nodes_opaque():
    doc = json.loads(esprima_json("switch (a) { case 1: f(x, y); }"))
    prog = ingest_estree(doc)
    stmt = prog.children[0]
    assert stmt.opaque and stmt.kind == "SwitchStatement"
    assert any(n.kind == "CallExpression" for _, n in walk(stmt))


def test_estree_export_round_trip():
    for p in programs(100, seed=5):
        ast = parse_js(p)
        assert ingest_estree(json.dumps(to_estree(ast))) == ast


def test_print_call_and_leaf():
    (stmt,) = body("setTimeout(delay, fn);")
    assert print_tokens(stmt.children[0]) == ["setTimeout", "(", "delay", ",", "fn", ")"]
    assert print_tokens(ident("x")) == ["x"]


def test_print_round_trip_random_programs():
    for p in programs(200, seed=1):
        ast = parse_js(p)
        assert parse_js(" ".join(print_tokens(ast))) == ast, p


def test_print_is_deterministic():
    ast = parse_js(programs(1, seed=9)[0])
    assert print_tokens(ast) == print_tokens(parse_js(programs(1, seed=9)[0]))


def test_required_parens_are_printed():
    for src, printed in [("(a + b) * c;", "( a + b ) * c ;"), ("a - (b - c);", "a - ( b - c ) ;"),
                         ("a - b - c;", "a - b - c ;"), ("(f || g)(x);", "( f || g ) ( x ) ;"),
                         ("x = (a ? b : c).d;", "x = ( a ? b : c ) . d ;")]:
        assert " ".join(print_tokens(parse_js(src))) == printed


def test_replaced_subtree_gets_parens():
    stmt = body("x = a * b;")[0]
    path = (0, 1, 0)
    new = replace_at(stmt, path, make("BinaryExpression", operator="+", left=ident("c"), right=ident("d")))
    assert " ".join(print_tokens(new)) == "x = ( c + d ) * b ;"
    assert node_at(new, path).operator == "+"


def test_redundant_parens_are_kept_but_ignored_by_equality():
    ast = parse_js("x = (a) + b;")
    assert " ".join(print_tokens(ast)) == "x = ( a ) + b ;"
    assert ast == parse_js("x = a + b;")
    assert " ".join(print_tokens(ast.strip())) == "x = a + b ;"
    assert normalize_parens(ast.strip()) == ast


def test_token_categories():
    toks = print_tokens(parse_js("if (a) f('s', 1);"))
    cats = {t: t.category for t in toks}
    assert cats["if"] == "keyword"
    assert cats["a"] == "identifier"
    assert cats["'s'"] == "literal-string"
    assert cats["1"] == "literal-number"
    assert cats["("] == "punctuation"
    assert isinstance(toks[0], Token) and toks[0] == "if"


def test_literal_lexemes_are_canonical():
    assert canonical_lexeme("'a'") == "'a'"
    assert canonical_lexeme("'a b'") == "'a\\u0020b'"
    assert print_tokens(parse_js("f('a b');"))[2] == "'a\\u0020b'"
    (stmt,) = body("x = 0x1F;")
    assert stmt.children[0].right == literal("0x1F", "number")


def test_lexer_regex_vs_division():
    kinds = [t.type for t in tokenize("a / b / c")]
    assert "regex" not in kinds
    assert any(t.type == "regex" for t in tokenize("x = /a/g"))


def test_node_invariants():
    with pytest.raises(ValueError):
        make("BinaryExpression", operator="+", left=ident("a"))
    with pytest.raises(ValueError):
        make("Identifier")
    with pytest.raises(ValueError):
        make("CallExpression", operator="+", callee=ident("f"))


def test_statements_helper_parse():
    for s in statements(300, seed=2):
        parse_js("function w() {" + s + "}")
