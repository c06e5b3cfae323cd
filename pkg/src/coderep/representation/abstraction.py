"""Renaming-based abstraction: idiom sets and per-example placeholder maps."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from ..ast_core.lexer import KEYWORDS
from ..ast_core.nodes import Token
from ..ast_core.printer import PUNCTUATION
from ..errors import MalformedEncoding, MissingMap

CATEGORIES = ("Method", "Var", "Number", "String")
ID_PATTERN = re.compile(r"^(method|var|number|string)_([1-9][0-9]*)$", re.I)
_SKIP_CATEGORIES = frozenset({"punctuation", "operator", "keyword", "marker"})


def _countable(tok) -> bool:
    category = getattr(tok, "category", None)
    if category is not None:
        return category not in _SKIP_CATEGORIES
    text = str(tok)
    return text not in KEYWORDS and text not in PUNCTUATION and any(ch.isalnum() or ch in "_$'\"" for ch in text)


def build_idiom_set(corpus_tokens, n: int = 300) -> frozenset:
    """The ``n`` most frequent identifier/literal tokens plus all keywords.

    Ties are broken lexicographically.

    >>> sorted(build_idiom_set("a a b b".split(), 1) - KEYWORDS)
    ['a']
    """
    counts = Counter(str(t) for t in corpus_tokens if _countable(t))
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return frozenset(tok for tok, _ in ranked[:n]) | KEYWORDS


def canonical_id(tok: str) -> str | None:
    """``NUMBER_1`` and ``Number_1`` both canonicalize to ``Number_1``."""
    m = ID_PATTERN.match(tok)
    if not m:
        return None
    return f"{m.group(1).capitalize()}_{int(m.group(2))}"


@dataclass
class AbstractionMap:
    """Placeholder ID -> concrete lexeme, built by first occurrence.

    One map is shared across the buggy and fixed side of a pair so that the
    same identifier gets the same placeholder on both sides.
    """

    mapping: dict = field(default_factory=dict)
    idioms: frozenset = frozenset()
    counters: dict = field(default_factory=lambda: dict.fromkeys(CATEGORIES, 0))

    def __post_init__(self):
        self._inverse = {v: k for k, v in self.mapping.items()}

    def id_for(self, lexeme: str, category: str) -> str:
        known = self._inverse.get(lexeme)
        if known is not None:
            return known
        self.counters[category] = self.counters.get(category, 0) + 1
        ident = f"{category}_{self.counters[category]}"
        self.mapping[ident] = lexeme
        self._inverse[lexeme] = ident
        return ident

    def keeps(self, tok: str) -> bool:
        return tok in self.idioms and canonical_id(tok) is None

    def to_json(self) -> dict:
        return dict(self.mapping)

    @classmethod
    def from_json(cls, mapping, idioms=frozenset()) -> AbstractionMap:
        amap = cls(dict(mapping), frozenset(idioms))
        for ident in mapping:
            cat, _, num = ident.rpartition("_")
            amap.counters[cat] = max(amap.counters.get(cat, 0), int(num))
        return amap


def _category(tok, role, slot_type):
    if role == "method":
        return "Method"
    if slot_type is not None:
        return {"number": "Number", "string": "String", "function": "Method"}.get(slot_type, "Var")
    if tok.category == "identifier":
        return "Var"
    if tok.category == "literal-number":
        return "Number"
    if tok.category == "literal-string" or (tok.category == "literal-other" and tok.startswith("/")):
        return "String"
    return None


def abstract_tf1(tokens, amap: AbstractionMap, roles=None, slot_types=None) -> list[Token]:
    """Replace non-idiom identifiers and literals by ``Category_k`` placeholders.

    ``roles`` maps token index to "method"/"property"; ``slot_types`` maps the
    index of a single-identifier bug-site slot to its type tag.
    """
    roles = roles or {}
    slot_types = slot_types or {}
    out = []
    for i, tok in enumerate(tokens):
        category = _category(tok, roles.get(i), slot_types.get(i))
        if category is None or amap.keeps(tok):
            out.append(tok)
        else:
            out.append(Token(amap.id_for(str(tok), category), tok.category))
    return out


def substitute(tokens, amap) -> list[str]:
    """Invert :func:`abstract_tf1` using the map."""
    if amap is None:
        raise MissingMap("TF1 decoding needs the abstraction map of the example")
    mapping = amap.mapping if isinstance(amap, AbstractionMap) else dict(amap)
    out = []
    for tok in tokens:
        ident = canonical_id(tok)
        if ident is None:
            out.append(str(tok))
        elif ident in mapping:
            out.append(mapping[ident])
        else:
            raise MalformedEncoding(f"placeholder {tok} has no entry in the map")
    return out
