"""Subword splitting of identifiers with explicit boundary markers."""

from __future__ import annotations

import re

from ..errors import MalformedEncoding
from .ids import SPLIT_MARKERS

_EDGE_UNDERSCORES = re.compile(r"^(_*)(.*?)(_*)$", re.S)


def _boundary(s, k):
    a, b = s[k - 1], s[k]
    if a.islower() and b.isupper():
        return "<CAMEL>"
    if a.isupper() and b.isupper() and k + 1 < len(s) and s[k + 1].islower():
        return "<CAMEL>"
    if (a.isalpha() and b.isdigit()) or (a.isdigit() and b.isalpha()):
        return "<NUM>"
    return None


def _split_part(part):
    out, start = [], 0
    for k in range(1, len(part)):
        marker = _boundary(part, k)
        if marker:
            out += [part[start:k], marker]
            start = k
    out.append(part[start:])
    return out


def split_identifier(name: str) -> list[str]:
    """Split at camel-case, acronym, underscore and letter/digit boundaries.

    Leading and trailing underscores stay attached to the outer pieces.

    >>> split_identifier("setTimeout")
    ['set', '<CAMEL>', 'Timeout']
    >>> split_identifier("max_len2")
    ['max', '<UNDER>', 'len', '<NUM>', '2']
    """
    lead, core, trail = _EDGE_UNDERSCORES.match(name).groups()
    if not core:
        return [name]
    parts = core.split("_")
    out = []
    for n, part in enumerate(parts):
        if n:
            out.append("<UNDER>")
        if part:
            out.extend(_split_part(part))
    out[0] = lead + out[0]
    out[-1] = out[-1] + trail
    return out


def join_subwords(tokens) -> list[str]:
    """Inverse of :func:`split_identifier` applied over a whole stream."""
    out: list[str] = []
    glue = None
    for tok in tokens:
        if tok in SPLIT_MARKERS:
            if not out:
                raise MalformedEncoding(f"split marker {tok} at start of stream")
            glue = (glue or "") + SPLIT_MARKERS[tok]
        elif glue is not None:
            out[-1] = out[-1] + glue + tok
            glue = None
        else:
            out.append(str(tok))
    if glue is not None:
        raise MalformedEncoding("split marker at end of stream")
    return out
