"""
Recursive descent parser for scalar and form expressions.

    sum     := wedge (('+' | '-') wedge)*
    wedge   := product ('/\\' product)*
    product := unary ('*' unary)*
    unary   := '-' unary | power
    power   := atom ('^' uint)?
    atom    := '(' sum ')' | uint ('/' uint)? | 'i' | var | gen

Unary minus applies to a whole power, so "-z1^2" is -(z1^2). In scalar
mode generators and wedges are rejected.
"""

from fractions import Fraction
from typing import List, Union

from formwell.core.errors import MixedGeneratorUse, ParseError, ZeroDenominator
from formwell.core.forms.form import Form, Gen
from formwell.core.lang.lexer import GENERATORS, VARIABLES, Token, TokenKind, tokenize
from formwell.core.poly.poly import Poly, Var
from formwell.core.scalar import GaussianRational
from formwell.utils.logger import logger

MAX_EXPONENT = 64
MAX_DEGREE = 64
MAX_COEFFICIENT_BITS = 16384

_VARS = dict(zip(VARIABLES, (Var.Z1, Var.ZB1, Var.Z2, Var.ZB2)))
_GENS = dict(zip(GENERATORS, (Gen.DZ1, Gen.DZ2, Gen.DZB1, Gen.DZB2)))

_ATOM_START = (TokenKind.LPAREN, TokenKind.NUMBER, TokenKind.IMAG, TokenKind.VAR, TokenKind.MINUS)


class _Parser:
    def __init__(self, tokens: List[Token], forms: bool):
        self.tokens = tokens
        self.pos = 0
        self.forms = forms

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind is not TokenKind.END:
            self.pos += 1
        return token

    def error(self, message: str, token: Token, expected=(), cls=ParseError) -> ParseError:
        return cls(message, token.line, token.col, [k.value for k in expected])

    def atom_kinds(self):
        return _ATOM_START + (TokenKind.GEN,) if self.forms else _ATOM_START

    def expect(self, kind: TokenKind) -> Token:
        token = self.current
        if token.kind is not kind:
            raise self.error(f"expected {kind.value}, found {_describe(token)}", token, [kind])
        return self.advance()

    def parse(self) -> Form:
        value = self.sum()
        token = self.current
        if token.kind is not TokenKind.END:
            follow = [TokenKind.PLUS, TokenKind.MINUS, TokenKind.STAR, TokenKind.END]
            if self.forms:
                follow.append(TokenKind.WEDGE)
            raise self.error(f"unexpected {_describe(token)}", token, follow)
        return value

    def sum(self) -> Form:
        value = self.wedge()
        while self.current.kind in (TokenKind.PLUS, TokenKind.MINUS):
            op = self.advance()
            rhs = self.wedge()
            value = value + rhs if op.kind is TokenKind.PLUS else value - rhs
        return value

    def wedge(self) -> Form:
        value = self.product()
        while self.current.kind is TokenKind.WEDGE:
            op = self.advance()
            if not self.forms:
                raise self.error("wedge is not allowed in a scalar expression", op)
            value = value.wedge(self.product())
        return value

    def product(self) -> Form:
        value = self.unary()
        while self.current.kind is TokenKind.STAR:
            op = self.advance()
            rhs = self.unary()
            if not (_is_scalar(value) or _is_scalar(rhs)):
                raise self.error("'*' between two forms; use /\\ for the wedge product", op)
            value = value.wedge(rhs)
        return value

    def unary(self) -> Form:
        if self.current.kind is TokenKind.MINUS:
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> Form:
        base = self.atom()
        if self.current.kind is not TokenKind.CARET:
            return base
        caret = self.advance()
        exponent_token = self.expect(TokenKind.NUMBER)
        exponent = int(exponent_token.text)
        if not _is_scalar(base):
            raise self.error("'^' applied to an expression containing generators", caret, cls=MixedGeneratorUse)
        if exponent > MAX_EXPONENT:
            raise self.error(f"exponent {exponent} exceeds {MAX_EXPONENT}", exponent_token)
        scalar = base.coefficient()
        if max(scalar.degree, 0) * exponent > MAX_DEGREE:
            raise self.error(f"power has degree above {MAX_DEGREE}", caret)
        if (_coefficient_bits(scalar) + len(scalar).bit_length()) * exponent > MAX_COEFFICIENT_BITS:
            raise self.error(f"power has coefficients above {MAX_COEFFICIENT_BITS} bits", caret)
        return Form.scalar(scalar**exponent)

    def atom(self) -> Form:
        token = self.current
        kind = token.kind
        if kind is TokenKind.LPAREN:
            self.advance()
            value = self.sum()
            self.expect(TokenKind.RPAREN)
            return value
        if kind is TokenKind.NUMBER:
            self.advance()
            numerator = int(token.text)
            if self.current.kind is not TokenKind.SLASH:
                return Form.scalar(numerator)
            self.advance()
            denominator_token = self.expect(TokenKind.NUMBER)
            denominator = int(denominator_token.text)
            if denominator == 0:
                raise self.error("zero denominator", denominator_token, cls=ZeroDenominator)
            return Form.scalar(GaussianRational(Fraction(numerator, denominator)))
        if kind is TokenKind.IMAG:
            self.advance()
            return Form.scalar(GaussianRational(0, 1))
        if kind is TokenKind.VAR:
            self.advance()
            return Form.scalar(Poly.var(_VARS[token.text]))
        if kind is TokenKind.GEN:
            if not self.forms:
                raise self.error(f"generator {token.text} in a scalar expression", token, self.atom_kinds())
            self.advance()
            return Form.gen(_GENS[token.text])
        raise self.error(f"expected an operand, found {_describe(token)}", token, self.atom_kinds())


def _is_scalar(f: Form) -> bool:
    return f.is_homogeneous(0)


def _coefficient_bits(p: Poly) -> int:
    parts = [part for _, c in p.terms for part in (c.re, c.im)]
    return max((max(q.numerator.bit_length(), q.denominator.bit_length()) for q in parts), default=0)


def _describe(token: Token) -> str:
    if token.kind is TokenKind.END:
        return "end of input"
    return repr(token.text)


def _run(text: Union[str, bytes], forms: bool) -> Form:
    try:
        if isinstance(text, bytes):
            text = text.decode("utf-8")
        return _Parser(tokenize(text), forms).parse()
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not valid UTF-8: {exc.reason}") from exc
    except RecursionError as exc:
        raise ParseError("expression nested too deeply") from exc
    except ParseError as exc:
        logger.debug("parse failed: %s", exc)
        raise


def parse_expr(text: Union[str, bytes]) -> Poly:
    """Parse a scalar expression into a Poly."""
    return _run(text, forms=False).coefficient()


def parse_form(text: Union[str, bytes]) -> Form:
    """Parse a form expression over dz1, dz2, dzb1, dzb2."""
    return _run(text, forms=True)
