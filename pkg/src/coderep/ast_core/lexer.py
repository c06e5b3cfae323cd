"""Tokenizer for the supported JavaScript subset."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError

KEYWORDS = frozenset(
    """break case catch class const continue debugger default delete do else export extends
    finally for function if import in instanceof let new return super switch this throw try
    typeof var void while with yield true false null""".split()
)

# Longest first so the alternation is greedy.
PUNCTUATORS = sorted(
    """>>>= === !== >>> <<= >>= == != <= >= && || ++ -- += -= *= /= %= &= |= ^= << >>
    { } ( ) [ ] ; , < > + - * / % & | ^ ! ~ ? : = .""".split(),
    key=len,
    reverse=True,
)
PUNCT_RE = re.compile("|".join(re.escape(p) for p in PUNCTUATORS))
IDENT_RE = re.compile(r"[A-Za-z_$][\w$]*")
NUMBER_RE = re.compile(r"0[xX][0-9a-fA-F]+|(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
STRING_RE = re.compile(r"\"(?:[^\"\\\n]|\\.)*\"|'(?:[^'\\\n]|\\.)*'", re.S)
REGEX_RE = re.compile(r"/(?![*/])(?:[^/\\\[\n]|\\.|\[(?:[^\]\\\n]|\\.)*\])+/[gimsuy]*")
SPACE_RE = re.compile(r"(?:\s+|//[^\n]*|/\*.*?\*/)+", re.S)

# After these a '/' starts a regex, not a division.
_REGEX_AFTER_KEYWORDS = frozenset(
    {"return", "typeof", "instanceof", "in", "new", "delete", "void", "throw", "case", "do", "else"}
)
_REGEX_NOT_AFTER_PUNCT = frozenset({")", "]", "}"})


@dataclass(frozen=True)
class Lexeme:
    type: str  # ident | keyword | number | string | regex | punct | eof
    text: str
    start: int
    end: int
    newline_before: bool = False


def canonical_lexeme(raw: str) -> str:
    """Escape whitespace inside a string/regex lexeme so it is a single token.

    >>> canonical_lexeme("'a b'")
    "'a\\\\u0020b'"
    """
    if not any(ch.isspace() for ch in raw):
        return raw
    return "".join(f"\\u{ord(ch):04x}" if ch.isspace() else ch for ch in raw)


def _line_col(source, offset):
    line = source.count("\n", 0, offset) + 1
    col = offset - (source.rfind("\n", 0, offset) + 1) + 1
    return line, col


def tokenize(source: str) -> list[Lexeme]:
    out: list[Lexeme] = []
    pos = 0
    n = len(source)
    newline = False
    while True:
        m = SPACE_RE.match(source, pos)
        if m:
            newline = newline or ("\n" in m.group(0))
            pos = m.end()
        if pos >= n:
            out.append(Lexeme("eof", "", n, n, newline))
            return out
        ch = source[pos]
        if source.startswith("/*", pos):
            line, col = _line_col(source, pos)
            raise ParseError("unterminated comment", line, col)
        lex = None
        if ch.isalpha() or ch in "_$":
            m = IDENT_RE.match(source, pos)
            text = m.group(0)
            lex = Lexeme("keyword" if text in KEYWORDS else "ident", text, pos, m.end(), newline)
        elif ch.isdigit() or (ch == "." and pos + 1 < n and source[pos + 1].isdigit()):
            m = NUMBER_RE.match(source, pos)
            lex = Lexeme("number", m.group(0), pos, m.end(), newline)
            if m.end() < n and (source[m.end()].isalnum() or source[m.end()] in "_$"):
                line, col = _line_col(source, m.end())
                raise ParseError("identifier directly after number", line, col)
        elif ch in "\"'":
            m = STRING_RE.match(source, pos)
            if not m:
                line, col = _line_col(source, pos)
                raise ParseError("unterminated string literal", line, col)
            lex = Lexeme("string", m.group(0), pos, m.end(), newline)
        elif ch == "/" and _regex_allowed(out):
            m = REGEX_RE.match(source, pos)
            if not m:
                line, col = _line_col(source, pos)
                raise ParseError("invalid regular expression literal", line, col)
            lex = Lexeme("regex", m.group(0), pos, m.end(), newline)
        else:
            m = PUNCT_RE.match(source, pos)
            if not m:
                line, col = _line_col(source, pos)
                raise ParseError(f"unexpected character {ch!r}", line, col)
            lex = Lexeme("punct", m.group(0), pos, m.end(), newline)
        out.append(lex)
        pos = lex.end
        newline = False


def _regex_allowed(previous):
    if not previous:
        return True
    last = previous[-1]
    if last.type == "punct":
        return last.text not in _REGEX_NOT_AFTER_PUNCT
    if last.type == "keyword":
        return last.text in _REGEX_AFTER_KEYWORDS
    return False
