from formwell.core.lang.lexer import Token, TokenKind, tokenize
from formwell.core.lang.parser import MAX_EXPONENT, parse_expr, parse_form
from formwell.core.lang.problem import ProblemSpec, parse_problem, read_problem

__all__ = [
    "MAX_EXPONENT",
    "ProblemSpec",
    "Token",
    "TokenKind",
    "parse_expr",
    "parse_form",
    "parse_problem",
    "read_problem",
    "tokenize",
]
