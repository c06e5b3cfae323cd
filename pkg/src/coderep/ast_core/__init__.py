"""Syntax trees: parsing, ESTree interchange and token printing."""

from .estree import ingest_estree, to_estree
from .nodes import KINDS, AstNode, Token, ident, literal, make, node_at, replace_at, walk, walk_postorder
from .parser import parse_js
from .printer import print_annotated, print_tokens

__all__ = [
    "AstNode", "KINDS", "Token", "ident", "ingest_estree", "literal", "make", "node_at",
    "parse_js", "print_annotated", "print_tokens", "replace_at", "to_estree", "walk", "walk_postorder",
]
