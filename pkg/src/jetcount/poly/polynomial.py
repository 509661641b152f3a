"""Exact sparse multivariate polynomials over QQ or GF(2).

``Polynomial`` is a thin immutable wrapper around ``sympy.Poly`` that pins
the ambient variable list, checks that operands share it, and owns the
canonical text form used throughout the CLI and reports.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import reduce
from typing import Final

import sympy as sp

from jetcount.common.enums import Field, MonomialOrder
from jetcount.errors import (
    AmbientMismatchError,
    NonDivisibleError,
    PolynomialZeroDivisionError,
    UnknownVariableError,
)

logger: Final = logging.getLogger(__name__)

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Polynomial:
    """A polynomial together with its ordered ambient variable list.

    Equal polynomials compare equal only when their ambient lists and
    coefficient fields agree as well; zero coefficients are never stored.
    """

    poly: sp.Poly

    # ── construction ─────────────────────────────────────────────────────────
    @classmethod
    def from_expr(
        cls, expr: sp.Expr | int, gens: Sequence[sp.Symbol], field: Field = Field.RATIONALS
    ) -> Polynomial:
        """Build a polynomial from a sympy expression.

        Args:
            expr: Polynomial expression in ``gens``
            gens: Ordered ambient variables
            field: Coefficient field

        Returns:
            The polynomial

        Raises:
            UnknownVariableError: If ``expr`` mentions a variable outside ``gens``
        """
        expr = sp.sympify(expr)
        stray = expr.free_symbols - set(gens)
        if stray:
            names = ", ".join(sorted(str(s) for s in stray))
            raise UnknownVariableError(
                f"variables not in ambient list: {names}", {"ambient": [str(g) for g in gens]}
            )
        return cls(sp.Poly(expr, *gens, domain=field.domain))

    @classmethod
    def constant(
        cls, value: int | sp.Rational, gens: Sequence[sp.Symbol], field: Field = Field.RATIONALS
    ) -> Polynomial:
        return cls.from_expr(sp.sympify(value), gens, field)

    # ── basic properties ─────────────────────────────────────────────────────
    @property
    def gens(self) -> tuple[sp.Symbol, ...]:
        return tuple(self.poly.gens)

    @property
    def field(self) -> Field:
        return Field.MOD2 if self.poly.domain.is_FiniteField else Field.RATIONALS

    @property
    def expr(self) -> sp.Expr:
        return self.poly.as_expr()

    @property
    def is_zero(self) -> bool:
        return bool(self.poly.is_zero)

    @property
    def is_constant(self) -> bool:
        return bool(self.poly.is_ground)

    def total_degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if self.is_zero:
            return -1
        return int(self.poly.total_degree())

    def degree(self, var: sp.Symbol) -> int:
        """Degree in ``var``; the zero polynomial reports -1."""
        self._require_var(var)
        if self.is_zero:
            return -1
        return int(self.poly.degree(var))

    def terms(
        self, order: MonomialOrder = MonomialOrder.GREVLEX
    ) -> list[tuple[Monomial, sp.Rational]]:
        """Nonzero terms, leading term first."""
        if self.is_zero:
            return []
        return [(tuple(m), sp.Rational(c)) for m, c in self.poly.terms(order=order.value)]

    def coefficient(self, exponents: Monomial) -> sp.Rational:
        """Coefficient of the monomial with exponent vector ``exponents``."""
        return sp.Rational(self.poly.as_dict().get(tuple(exponents), 0))

    def variables(self) -> set[sp.Symbol]:
        """Ambient variables that actually occur."""
        return {g for g in self.gens if self.poly.degree(g) > 0}

    # ── ring operations ──────────────────────────────────────────────────────
    def _coerce(self, other: Polynomial | int | sp.Rational) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.gens != self.gens or other.field is not self.field:
                raise AmbientMismatchError(
                    "operands live in different rings",
                    {"left": [str(g) for g in self.gens], "right": [str(g) for g in other.gens]},
                )
            return other
        return Polynomial.constant(other, self.gens, self.field)

    def __add__(self, other: Polynomial | int | sp.Rational) -> Polynomial:
        return Polynomial(self.poly + self._coerce(other).poly)

    def __radd__(self, other: int | sp.Rational) -> Polynomial:
        return self + other

    def __sub__(self, other: Polynomial | int | sp.Rational) -> Polynomial:
        return Polynomial(self.poly - self._coerce(other).poly)

    def __rsub__(self, other: int | sp.Rational) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other: Polynomial | int | sp.Rational) -> Polynomial:
        return Polynomial(self.poly * self._coerce(other).poly)

    def __rmul__(self, other: int | sp.Rational) -> Polynomial:
        return self * other

    def __neg__(self) -> Polynomial:
        return Polynomial(-self.poly)

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise ValueError("polynomial powers must be non-negative")
        return Polynomial(self.poly**exponent)

    def exact_divide(self, divisor: Polynomial) -> Polynomial:
        """Exact quotient ``self / divisor``.

        Raises:
            PolynomialZeroDivisionError: If ``divisor`` is zero
            NonDivisibleError: If the remainder is nonzero
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero:
            raise PolynomialZeroDivisionError("division by the zero polynomial")
        quotient, remainder = self.poly.div(divisor.poly)
        if not remainder.is_zero:
            raise NonDivisibleError(
                f"{divisor.to_text()} does not divide {self.to_text()}",
                {"remainder": Polynomial(remainder).to_text()},
            )
        return Polynomial(quotient)

    def divides(self, other: Polynomial) -> bool:
        """Whether ``self`` divides ``other`` exactly."""
        if self.is_zero:
            return other.is_zero
        other = self._coerce(other)
        return bool(other.poly.rem(self.poly).is_zero)

    # ── calculus and evaluation ──────────────────────────────────────────────
    def partial_derivative(self, var: sp.Symbol) -> Polynomial:
        """Formal partial derivative with respect to an ambient variable."""
        self._require_var(var)
        return Polynomial(self.poly.diff(var))

    def evaluate(self, point: Mapping[sp.Symbol, sp.Expr | int]) -> sp.Expr:
        """Value at a (possibly partial) point, as a sympy expression."""
        return self.expr.xreplace(dict(point))

    def restrict(self, keep: Iterable[sp.Symbol]) -> Polynomial:
        """Set every ambient variable outside ``keep`` to zero."""
        kept = set(keep)
        zeros = {g: sp.Integer(0) for g in self.gens if g not in kept}
        return Polynomial.from_expr(self.expr.xreplace(zeros), self.gens, self.field)

    def lift(self, gens: Sequence[sp.Symbol]) -> Polynomial:
        """Re-express in another ambient list containing every occurring variable."""
        return Polynomial.from_expr(self.expr, gens, self.field)

    def to_field(self, field: Field) -> Polynomial:
        """Reinterpret the coefficients in another field."""
        return Polynomial.from_expr(self.expr, self.gens, field)

    def normalized(self) -> Polynomial:
        """Scale to integral content 1 with a positive leading coefficient.

        The leading coefficient is taken in lexicographic order of the
        ambient variable list.
        """
        if self.is_zero or self.field is Field.MOD2:
            return self
        coeffs = [sp.Rational(c) for c in self.poly.coeffs()]
        lcm = reduce(sp.ilcm, (c.q for c in coeffs), 1)
        content = reduce(sp.igcd, (abs(c.p * (lcm // c.q)) for c in coeffs), 0)
        scale = sp.Rational(lcm, content)
        if self.poly.LC() < 0:
            scale = -scale
        return Polynomial(self.poly * scale)

    def factors(self) -> list[tuple[Polynomial, int]]:
        """Irreducible factors over QQ, normalized, with multiplicities.

        Constant factors are dropped; the zero polynomial has no factors.
        """
        if self.is_zero or self.is_constant:
            return []
        _, pairs = sp.factor_list(self.expr, *self.gens)
        return [(Polynomial.from_expr(f, self.gens, self.field).normalized(), m) for f, m in pairs]

    def without_factors(self, boundary: Iterable[Polynomial]) -> Polynomial:
        """Drop every irreducible factor shared with a polynomial of ``boundary``."""
        if self.is_zero:
            return self
        banned = {f for b in boundary for f, _ in b.factors()}
        kept = Polynomial.constant(1, self.gens, self.field)
        for factor, mult in self.factors():
            if factor not in banned:
                kept = kept * factor**mult
        return kept

    # ── text ─────────────────────────────────────────────────────────────────
    def to_text(self) -> str:
        """Canonical text: grevlex-descending terms, explicit ``^`` powers."""
        if self.is_zero:
            return "0"
        pieces: list[str] = []
        for index, (monom, coeff) in enumerate(self.terms()):
            factors = [
                str(var) if exp == 1 else f"{var}^{exp}"
                for var, exp in zip(self.gens, monom, strict=True)
                if exp
            ]
            body = "*".join(factors)
            magnitude = abs(coeff)
            if not body:
                text = _format_rational(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{_format_rational(magnitude)}*{body}"
            if index == 0:
                pieces.append(f"-{text}" if coeff < 0 else text)
            else:
                pieces.append(f" - {text}" if coeff < 0 else f" + {text}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def _require_var(self, var: sp.Symbol) -> None:
        if var not in self.gens:
            raise UnknownVariableError(
                f"unknown variable {var}", {"ambient": [str(g) for g in self.gens]}
            )


def _format_rational(value: sp.Rational) -> str:
    return str(value.p) if value.q == 1 else f"{value.p}/{value.q}"


def substitute(
    p: Polynomial,
    mapping: Mapping[sp.Symbol, sp.Expr],
    gens: Sequence[sp.Symbol] | None = None,
) -> tuple[Polynomial, Polynomial]:
    """Substitute rational functions for ambient variables, simultaneously.

    Variables missing from ``mapping`` stay fixed. The result is returned as
    a coprime numerator/denominator pair with a monic denominator.

    Args:
        p: Polynomial to transform
        mapping: Variable to rational function (in ``gens``)
        gens: Ambient list of the result (defaults to ``p.gens``)

    Returns:
        ``(numerator, denominator)``

    Raises:
        UnknownVariableError: If a mapped key is not an ambient variable of ``p``
        PolynomialZeroDivisionError: If a substituted value has a zero denominator
    """
    target = tuple(gens) if gens is not None else p.gens
    for var, value in mapping.items():
        if var not in p.gens:
            raise UnknownVariableError(f"cannot substitute for unknown variable {var}")
        _, den = sp.fraction(sp.together(value))
        if sp.expand(den) == 0 or value.has(sp.zoo, sp.nan):
            raise PolynomialZeroDivisionError(f"substituted value for {var} has a zero denominator")
    combined = sp.cancel(sp.together(p.expr.xreplace(dict(mapping))))
    num_expr, den_expr = sp.fraction(combined)
    num = Polynomial.from_expr(sp.expand(num_expr), target, p.field)
    den = Polynomial.from_expr(sp.expand(den_expr), target, p.field)
    if den.is_zero:
        raise PolynomialZeroDivisionError("substitution produced a zero denominator")
    lead = den.poly.LC()
    if lead != 1:
        num, den = Polynomial(num.poly * (1 / lead)), Polynomial(den.poly * (1 / lead))
    logger.debug("substitute: %s -> (%s, %s)", p.to_text(), num.to_text(), den.to_text())
    return num, den
