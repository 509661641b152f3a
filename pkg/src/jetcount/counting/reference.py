"""Choice of an admissible change of reference for infinity corrections.

A reference is admissible for a plane curve ``g = 0`` and an equation ``f``
when every solution hidden from the affine jet chart (points at infinity and
points with a vertical tangent) becomes a finite point with a finite,
non-vertical tangent in the new chart, and ``f`` has no component along the
new chart's boundary.
"""

from __future__ import annotations

import logging
from typing import Final

import sympy as sp

from jetcount.counting.models import CountOptions
from jetcount.errors import ReferenceRetriesExhaustedError
from jetcount.jets.chart import JetChart
from jetcount.jets.derivative import total_derivative_expr
from jetcount.jets.transform import PointTransformation
from jetcount.poly.ideal import Ideal, is_unit
from jetcount.poly.polynomial import Polynomial

logger: Final = logging.getLogger(__name__)


def homogeneous_part(g: Polynomial, degree: int) -> sp.Expr:
    """Sum of the terms of ``g`` of total degree ``degree``."""
    expr: sp.Expr = sp.Integer(0)
    for monom, coeff in g.terms():
        if sum(monom) == degree:
            term: sp.Expr = coeff
            for var, exp in zip(g.gens, monom, strict=True):
                term *= var**exp
            expr += term
    return expr


class ReferenceChecker:
    """Admissibility tests for one curve and one equation."""

    def __init__(self, curve: Polynomial, f: Polynomial, chart: JetChart) -> None:
        self.curve = curve
        self.f = f
        self.chart = chart
        self.x, self.y = curve.gens[0], curve.gens[1]
        self.degree = curve.total_degree()
        self.top = homogeneous_part(curve, self.degree)
        self.below = homogeneous_part(curve, self.degree - 1)
        self.gx = curve.partial_derivative(self.x)
        self.gy = curve.partial_derivative(self.y)
        self._f_factors = {p for p, _ in f.factors()}

    def admissible(self, transformation: PointTransformation) -> bool:
        checks = (
            ("point at infinity on the new line at infinity", self._misses_points_at_infinity),
            ("vertical tangent on the new line at infinity", self._misses_vertical_points),
            ("tangent at infinity through the new vertical direction", self._tangents_at_infinity),
            ("vertical tangent through the new vertical direction", self._vertical_tangents),
            ("equation vanishes on the new boundary", self._not_forbidden),
        )
        for reason, check in checks:
            if not check(transformation):
                logger.debug("rejected %s: %s", transformation.describe(), reason)
                return False
        return True

    def _misses_points_at_infinity(self, t: PointTransformation) -> bool:
        a20, a21 = t.matrix[2, 0], t.matrix[2, 1]
        if a20 == 0 and a21 == 0:
            return False
        return self.top.xreplace({self.x: a21, self.y: -a20}) != 0

    def _misses_vertical_points(self, t: PointTransformation) -> bool:
        line_expr = sp.expand(t.new_line_at_infinity(self.x, self.y))
        line = Polynomial.from_expr(line_expr, self.curve.gens)
        return is_unit(Ideal.of([self.curve, self.gy, line]))

    def _direction(self, t: PointTransformation) -> tuple[sp.Expr, sp.Expr, sp.Expr]:
        column = t.inverse_matrix.col(1)
        return column[0], column[1], column[2]

    def _tangents_at_infinity(self, t: PointTransformation) -> bool:
        q1, q2, q3 = self._direction(t)
        top_x, top_y = sp.diff(self.top, self.x), sp.diff(self.top, self.y)
        polar = sp.expand(q1 * top_x + q2 * top_y + q3 * self.below)
        common = sp.gcd(self.top, polar)
        if not common.free_symbols:
            return True
        shared = Polynomial.from_expr(common, self.curve.gens)
        partials = [top_x, top_y, self.below]
        for factor, _ in shared.factors():
            for partial in partials:
                if not factor.divides(Polynomial.from_expr(sp.expand(partial), self.curve.gens)):
                    return False
        return True

    def _vertical_tangents(self, t: PointTransformation) -> bool:
        q1, q2, q3 = self._direction(t)
        g, gx, gy = self.curve.expr, self.gx.expr, self.gy.expr
        polar = q1 * gx + q2 * gy + q3 * (self.degree * g - self.x * gx - self.y * gy)
        s = sp.Dummy("s")
        ring = (*self.curve.gens, s)
        system = [
            Polynomial.from_expr(sp.expand(e), ring) for e in (g, gy, polar, s * gx - 1)
        ]
        return is_unit(Ideal.of(system, ring))

    def _not_forbidden(self, t: PointTransformation) -> bool:
        boundary = [sp.expand(t.new_line_at_infinity(self.x, self.y))]
        if self.chart.r >= 1:
            new_x, _ = t.forward(self.x, self.y)
            dx = total_derivative_expr(new_x, 1, self.chart.extend(0))
            numerator, _ = sp.fraction(sp.together(dx))
            boundary.append(sp.expand(numerator))
        for expr in boundary:
            lifted = Polynomial.from_expr(expr, self.f.gens)
            if any(p in self._f_factors for p, _ in lifted.factors()):
                return False
        return True


def choose_reference(
    curve: Polynomial, f: Polynomial, chart: JetChart, options: CountOptions
) -> PointTransformation:
    """Draw random references until one is admissible.

    Raises:
        ReferenceRetriesExhaustedError: After ``options.reference_retries`` rejections
    """
    checker = ReferenceChecker(curve, f, chart)
    rng = options.rng(f"reference:{curve.to_text()}:{f.to_text()}")
    for attempt in range(options.reference_retries):
        candidate = PointTransformation.random(rng, options.coefficient_bound)
        if checker.admissible(candidate):
            logger.debug("attempt %d chose %s", attempt + 1, candidate.describe())
            return candidate
    logger.warning("no admissible reference after %d attempts", options.reference_retries)
    raise ReferenceRetriesExhaustedError(
        f"no admissible reference after {options.reference_retries} attempts",
        {"curve": curve.to_text(), "equation": f.to_text()},
    )
