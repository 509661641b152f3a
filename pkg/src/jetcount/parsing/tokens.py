"""Tokenizer for the polynomial expression language."""

from __future__ import annotations

import re
from collections.abc import Iterator
from typing import Final, NamedTuple

from jetcount.errors import ExpressionParseError

TOKEN_PATTERNS: Final[dict[str, str]] = {
    "name": r"[A-Za-z][A-Za-z0-9_]*'*",
    "int": r"\d+",
    "op": r"[-+*/^]",
    "lpar": r"\(",
    "rpar": r"\)",
    "comma": r",",
    "newline": r"\n",
    "skip": r"[ \t\r]+",
    "error": r".",
}

_REGEX: Final = re.compile("|".join(f"(?P<{kind}>{text})" for kind, text in TOKEN_PATTERNS.items()))


class Token(NamedTuple):
    type: str
    value: str
    line: int
    column: int


def tokenize(source: str) -> Iterator[Token]:
    """Split ``source`` into tokens with 1-based line/column positions.

    Raises:
        ExpressionParseError: On a character outside the grammar
    """
    line, line_start = 1, 0
    for match in _REGEX.finditer(source):
        kind = str(match.lastgroup)
        value = match.group()
        column = match.start() - line_start + 1
        if kind == "newline":
            line, line_start = line + 1, match.end()
            continue
        if kind == "skip":
            continue
        if kind == "error":
            raise ExpressionParseError(f"unexpected character {value!r}", line=line, column=column)
        yield Token(kind, value, line, column)
    yield Token("end", "", line, len(source) - line_start + 1)
