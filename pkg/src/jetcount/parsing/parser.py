"""Pratt parser turning expression text into polynomials on a jet chart.

Grammar: integers, rationals ``p/q``, chart variables, ``+ - * ^``,
parentheses and the builtin ``hessdet(yj)``. Division is only allowed by
nonzero constants and exponents must be non-negative integer constants.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator
from typing import Final, NoReturn

import sympy as sp
from sympy.polys.polyerrors import CoercionFailed

from jetcount.common.enums import Field
from jetcount.errors import ExpressionParseError
from jetcount.jets.chart import JetChart
from jetcount.parsing.tokens import Token, tokenize
from jetcount.poly.polynomial import Polynomial

logger: Final = logging.getLogger(__name__)

# Binding powers
BINARY_POWER: Final[dict[str, int]] = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40}
PREFIX_POWER: Final = 30


def hessian_determinant(chart: JetChart, j: int) -> sp.Expr:
    """``det(d^2 y_j / dx_a dx_b)`` written in the second-order jets of ``chart``."""
    matrix = sp.Matrix(chart.k, chart.k, lambda a, b: chart.y(j, (a + 1, b + 1)))
    return sp.expand(matrix.det(method="berkowitz"))


class ExpressionParser:
    """Parses one source text against a chart."""

    def __init__(self, source: str, chart: JetChart) -> None:
        self.source = source
        self.chart = chart
        self._tokens: Iterator[Token] = tokenize(source)
        self.token: Token = next(self._tokens)
        self._builtins: dict[str, Callable[[Token], sp.Expr]] = {"hessdet": self._hessdet}

    # ── driver ───────────────────────────────────────────────────────────────
    def parse(self) -> sp.Expr:
        expr = self.expression(0)
        if self.token.type != "end":
            self._fail(f"unexpected {self.token.value!r}", self.token)
        return expr

    def advance(self, expected: str | None = None) -> Token:
        current = self.token
        if expected is not None and current.value != expected:
            self._fail(f"expected {expected!r}", current)
        self.token = next(self._tokens, current)
        return current

    def expression(self, rbp: int) -> sp.Expr:
        left = self.nud(self.advance())
        while rbp < self._left_power(self.token):
            left = self.led(self.advance(), left)
        return left

    @staticmethod
    def _left_power(token: Token) -> int:
        return BINARY_POWER.get(token.value, 0) if token.type == "op" else 0

    # ── prefix position ──────────────────────────────────────────────────────
    def nud(self, token: Token) -> sp.Expr:
        if token.type == "int":
            return sp.Integer(int(token.value))
        if token.type == "name":
            if self.token.type == "lpar":
                builtin = self._builtins.get(token.value)
                if builtin is None:
                    self._fail(f"unknown function {token.value!r}", token)
                return builtin(token)
            symbol = self.chart.lookup(token.value)
            if symbol is None:
                self._fail(
                    f"unknown variable {token.value!r} for chart "
                    f"({self.chart.n},{self.chart.k},{self.chart.r})",
                    token,
                )
            return symbol
        if token.type == "op" and token.value in "+-":
            operand = self.expression(PREFIX_POWER)
            return -operand if token.value == "-" else operand
        if token.type == "lpar":
            inner = self.expression(0)
            self.advance(")")
            return inner
        if token.type == "end":
            self._fail("unexpected end of input", token)
        self._fail(f"unexpected {token.value!r}", token)

    # ── infix position ───────────────────────────────────────────────────────
    def led(self, token: Token, left: sp.Expr) -> sp.Expr:
        if token.value == "^":
            exponent = self.expression(BINARY_POWER["^"] - 1)
            if not (exponent.is_Integer and exponent >= 0):
                self._fail("exponent must be a non-negative integer", token)
            return left**exponent
        right = self.expression(BINARY_POWER[token.value])
        if token.value == "+":
            return left + right
        if token.value == "-":
            return left - right
        if token.value == "*":
            return left * right
        if not (right.is_Rational and right != 0):
            self._fail("division is only allowed by a nonzero constant", token)
        return left / right

    # ── builtins ─────────────────────────────────────────────────────────────
    def _hessdet(self, token: Token) -> sp.Expr:
        self.advance("(")
        argument = self.advance()
        self.advance(")")
        symbol = self.chart.lookup(argument.value) if argument.type == "name" else None
        index = self.chart.jet_index(symbol) if symbol is not None else None
        if index is None or index.order != 0:
            self._fail("hessdet expects a dependent coordinate such as y1", argument)
        if self.chart.r < 2:
            self._fail("hessdet needs a chart of order at least 2", token)
        return hessian_determinant(self.chart, index.j)

    def _fail(self, message: str, token: Token) -> NoReturn:
        raise ExpressionParseError(
            message, {"source": self.source}, line=token.line, column=token.column
        )


def parse_expression(source: str, chart: JetChart, field: Field = Field.RATIONALS) -> Polynomial:
    """Parse ``source`` into a polynomial on ``chart``.

    Raises:
        ExpressionParseError: On lexical or syntax errors, unknown variables,
            invalid exponents, or coefficients not representable in ``field``
    """
    expr = sp.expand(ExpressionParser(source, chart).parse())
    try:
        return Polynomial.from_expr(expr, chart.symbols, field)
    except CoercionFailed as exc:
        raise ExpressionParseError(
            f"coefficients of {source!r} are not defined over {field.value}"
        ) from exc
