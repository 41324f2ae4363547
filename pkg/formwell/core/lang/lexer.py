import re
from enum import Enum
from typing import List, NamedTuple

from formwell.core.errors import ParseError


class TokenKind(str, Enum):
    NUMBER = "number"
    IMAG = "'i'"
    VAR = "variable"
    GEN = "generator"
    PLUS = "'+'"
    MINUS = "'-'"
    STAR = "'*'"
    SLASH = "'/'"
    CARET = "'^'"
    WEDGE = "'/\\'"
    LPAREN = "'('"
    RPAREN = "')'"
    END = "end of input"


class Token(NamedTuple):
    kind: TokenKind
    text: str
    line: int
    col: int


MAX_LITERAL_DIGITS = 1000

VARIABLES = ("z1", "zb1", "z2", "zb2")
GENERATORS = ("dz1", "dz2", "dzb1", "dzb2")

_PUNCTUATION = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "/": TokenKind.SLASH,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
}

_TOKEN_PATTERN = re.compile(r"(?P<space>\s+)|(?P<number>[0-9]+)|(?P<wedge>/\\)|(?P<word>[A-Za-z_][A-Za-z0-9_]*)|(?P<other>.)", re.S)


def tokenize(text: str) -> List[Token]:
    """
    Split `text` into tokens with 1-based line and column positions.

    Raises:
        ParseError: on characters or identifiers outside the grammar.
    """
    tokens: List[Token] = []
    line, line_start = 1, 0
    for match in _TOKEN_PATTERN.finditer(text):
        kind_name = match.lastgroup
        value = match.group()
        col = match.start() - line_start + 1
        if kind_name == "space":
            newlines = value.count("\n")
            if newlines:
                line += newlines
                line_start = match.start() + value.rindex("\n") + 1
            continue
        if kind_name == "number":
            if len(value) > MAX_LITERAL_DIGITS:
                raise ParseError(f"number literal longer than {MAX_LITERAL_DIGITS} digits", line, col)
            tokens.append(Token(TokenKind.NUMBER, value, line, col))
        elif kind_name == "wedge":
            tokens.append(Token(TokenKind.WEDGE, value, line, col))
        elif kind_name == "word":
            if value == "i":
                tokens.append(Token(TokenKind.IMAG, value, line, col))
            elif value in VARIABLES:
                tokens.append(Token(TokenKind.VAR, value, line, col))
            elif value in GENERATORS:
                tokens.append(Token(TokenKind.GEN, value, line, col))
            else:
                raise ParseError(f"unknown identifier {value!r}", line, col)
        elif value in _PUNCTUATION:
            tokens.append(Token(_PUNCTUATION[value], value, line, col))
        else:
            raise ParseError(f"unexpected character {value!r}", line, col)
    tokens.append(Token(TokenKind.END, "", line, len(text) - line_start + 1))
    return tokens
