"""Representation identifiers and their static properties."""

from __future__ import annotations

from dataclasses import dataclass

from ..ast_core.nodes import KINDS
from ..validation import BUG_TYPES, REPRESENTATIONS, SWAPPED_ARGS_ONLY, check_rep

LOSSLESS = frozenset({"WT1", "WT2", "DB1", "DB2", "TF1", "AST1", "AST2"})
TYPED = frozenset({"DB2", "DB3", "FS1", "FS2", "FS3", "FS4", "AST2", "AST3"})
SITE_SLOT_REPS = TYPED

# Closed marker vocabulary introduced by the encoders.
SPLIT_MARKERS = {"<CAMEL>": "", "<UNDER>": "_", "<NUM>": ""}
LITERAL_MARKERS = frozenset({"<STRING>", "<NUMBER>"})
END = "<END>"
PREFIXES = frozenset({"ID", "LIT"})
ANCHORS = ("arg0", "arg1")
TYPE_TAGS = frozenset(
    {"number", "string", "boolean", "function", "object", "array", "regex", "null", "undefined", "unknown"}
)
AST_FLAGS = frozenset({"computed", "prefix", "postfix"})
MARKERS = frozenset(SPLIT_MARKERS) | LITERAL_MARKERS | PREFIXES | frozenset(ANCHORS) | TYPE_TAGS | {END} | KINDS


@dataclass(frozen=True)
class RepresentationId:
    id: str
    category: str
    lossless: bool
    applicability: frozenset

    def __str__(self):
        return self.id


def representation(rep) -> RepresentationId:
    check_rep(rep)
    bug_types = frozenset({"swapped_args"}) if rep in SWAPPED_ARGS_ONLY else frozenset(BUG_TYPES)
    category = "ast_based" if rep.startswith("AST") else "token_based"
    return RepresentationId(rep, category, rep in LOSSLESS, bug_types)


ALL = tuple(representation(r) for r in REPRESENTATIONS)


def is_automatically_patchable(rep) -> bool:
    """True when encoded output can be mechanically turned back into source.

    >>> is_automatically_patchable("AST2"), is_automatically_patchable("DB3")
    (True, False)
    """
    return representation(str(rep)).lossless
