"""Reference encodings of one swapped-argument statement under every representation."""

from __future__ import annotations

from .ast_core.parser import parse_js
from .representation.encoders import EncodeContext, encode
from .validation import REPRESENTATIONS

STATEMENT = "setTimeout(delay, fn);"
TYPES = ("number", "function")
IDIOMS = frozenset({"setTimeout"})

EXPECTED = {
    "WT1": "setTimeout ( delay , fn )",
    "WT2": "set <CAMEL> Timeout ( delay , fn )",
    "DB1": "ID setTimeout ( ID delay , ID fn )",
    "DB2": "ID setTimeout ( ID number delay , ID function fn )",
    "DB3": "ID setTimeout ( ID number , ID function )",
    "FS1": "setTimeout ( number , function )",
    "FS2": "setTimeout ( arg0 number , arg1 function )",
    "FS3": "setTimeout ( ID number , ID function )",
    "FS4": "setTimeout ( arg0 ID number , arg1 ID function )",
    "TF1": "setTimeout ( Number_1 , Method_1 )",
    "AST1": "Program ExpressionStatement CallExpression Identifier setTimeout Identifier delay Identifier fn",
    "AST2": "Program ExpressionStatement CallExpression Identifier setTimeout Identifier number delay Identifier function fn",
    "AST3": "Program ExpressionStatement CallExpression Identifier setTimeout Identifier number Identifier function",
    "AST4": "CallExpression Identifier Identifier Identifier",
}


def golden_statement():
    return parse_js(STATEMENT).children[0]


def golden_check() -> list[tuple[str, str, str, bool]]:
    """``(rep, expected, actual, ok)`` for each of the 14 representations."""
    stmt = golden_statement()
    ctx = EncodeContext("swapped_args", (0,), TYPES, IDIOMS)
    rows = []
    for rep in REPRESENTATIONS:
        got = " ".join(encode(rep, stmt, ctx))
        rows.append((rep, EXPECTED[rep], got, got == EXPECTED[rep]))
    return rows
