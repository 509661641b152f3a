"""Projective changes of reference on P^2 and their prolongation to jets.

A ``PointTransformation`` is given by an invertible 3x3 matrix ``A`` acting
on homogeneous coordinates, ``(X~, Y~, Z~) = A (X, Y, Z)``. The new chart
reuses the symbols of the old one, so both directions of the map are
written as substitutions into the same chart.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Final

import sympy as sp

from jetcount.errors import (
    AmbientMismatchError,
    ChartBoundsError,
    DegenerateTransformationError,
)
from jetcount.jets.chart import JetChart
from jetcount.jets.derivative import total_derivative_expr
from jetcount.poly.polynomial import Polynomial, substitute
from jetcount.utils.sampling import SamplingUtils

logger: Final = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointTransformation:
    """A projective change of reference for plane-curve charts."""

    matrix: sp.ImmutableMatrix

    def __post_init__(self) -> None:
        if self.matrix.shape != (3, 3) or self.matrix.det() == 0:
            raise DegenerateTransformationError("reference matrix must be invertible 3x3")

    # ── constructors ─────────────────────────────────────────────────────────
    @classmethod
    def identity(cls) -> PointTransformation:
        return cls(sp.ImmutableMatrix.eye(3))

    @classmethod
    def swap(cls) -> PointTransformation:
        """Exchange x and y."""
        return cls(sp.ImmutableMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]]))

    @classmethod
    def at_infinity(cls) -> PointTransformation:
        """``x~ = x/y, y~ = 1/y``: brings (0:1:0) to the origin."""
        return cls(sp.ImmutableMatrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]]))

    @classmethod
    def from_matrix(cls, rows: list[list[int]] | sp.Matrix) -> PointTransformation:
        return cls(sp.ImmutableMatrix(rows))

    @classmethod
    def random(cls, rng: random.Random, bound: int) -> PointTransformation:
        return cls(SamplingUtils.invertible_matrix(rng, 3, bound))

    # ── maps ─────────────────────────────────────────────────────────────────
    @property
    def inverse_matrix(self) -> sp.ImmutableMatrix:
        return sp.ImmutableMatrix(self.matrix.inv())

    def inverted(self) -> PointTransformation:
        return PointTransformation(self.inverse_matrix)

    @staticmethod
    def _affine(matrix: sp.ImmutableMatrix, x: sp.Symbol, y: sp.Symbol) -> tuple[sp.Expr, sp.Expr]:
        image = matrix * sp.Matrix([x, y, 1])
        return image[0] / image[2], image[1] / image[2]

    def forward(self, x: sp.Symbol, y: sp.Symbol) -> tuple[sp.Expr, sp.Expr]:
        """New affine coordinates as functions of the old ones."""
        return self._affine(self.matrix, x, y)

    def inverse(self, x: sp.Symbol, y: sp.Symbol) -> tuple[sp.Expr, sp.Expr]:
        """Old affine coordinates as functions of the new ones."""
        return self._affine(self.inverse_matrix, x, y)

    def old_line_at_infinity(self, x: sp.Symbol, y: sp.Symbol) -> sp.Expr:
        """The old ``Z`` written in new affine coordinates."""
        row = self.inverse_matrix.row(2)
        return row[0] * x + row[1] * y + row[2]

    def new_line_at_infinity(self, x: sp.Symbol, y: sp.Symbol) -> sp.Expr:
        """The new ``Z~`` written in old affine coordinates."""
        row = self.matrix.row(2)
        return row[0] * x + row[1] * y + row[2]

    def transform_curve(self, g: Polynomial, chart: JetChart) -> Polynomial:
        """Equation of the image of the plane curve ``g = 0`` in the new chart."""
        x, y = chart.symbols[0], chart.symbols[1]
        z = sp.Dummy("z")
        homogeneous = sp.Poly(g.expr, x, y).homogenize(z).as_expr()
        image = self.inverse_matrix * sp.Matrix([x, y, 1])
        moved = homogeneous.xreplace({x: image[0], y: image[1], z: image[2]})
        return Polynomial.from_expr(sp.expand(moved), g.gens, g.field).normalized()

    def describe(self) -> str:
        return "reference " + str(self.matrix.tolist())


def jet_substitution(
    transformation: PointTransformation, chart: JetChart
) -> tuple[dict[sp.Symbol, sp.Expr], sp.Expr]:
    """Old jet coordinates as rational functions of the new ones.

    Returns:
        The substitution map and the total derivative of the old ``x``

    Raises:
        DegenerateTransformationError: If the old ``x`` has zero total derivative
    """
    x, y = chart.symbols[0], chart.symbols[1]
    x_old, y_old = transformation.inverse(x, y)
    base = chart.extend(max(chart.r - 1, 0))
    dx = sp.cancel(total_derivative_expr(x_old, 1, base))
    if dx == 0:
        raise DegenerateTransformationError("old x has zero total derivative in the new chart")
    mapping: dict[sp.Symbol, sp.Expr] = {x: x_old, y: y_old}
    current = y_old
    for order in range(1, chart.r + 1):
        current = sp.cancel(total_derivative_expr(current, 1, chart.extend(order - 1)) / dx)
        mapping[chart.y(1, (1,) * order)] = current
    return mapping, dx


def boundary_polynomials(
    transformation: PointTransformation, chart: JetChart
) -> list[Polynomial]:
    """The old chart's boundary written in the new chart.

    This is the old line at infinity, plus the numerator of the old
    ``D x`` when the chart carries jets.
    """
    x, y = chart.symbols[0], chart.symbols[1]
    ell = transformation.old_line_at_infinity(x, y)
    boundary = [Polynomial.from_expr(sp.expand(ell), chart.symbols)]
    if chart.r >= 1:
        _, dx = jet_substitution(transformation, chart)
        numerator, _ = sp.fraction(sp.together(dx))
        boundary.append(Polynomial.from_expr(sp.expand(numerator), chart.symbols))
    return boundary


def prolong_transformation(
    transformation: PointTransformation, f: Polynomial, chart: JetChart
) -> Polynomial:
    """Rewrite a plane-curve equation in the new reference.

    The old jets are substituted by their chain-rule expressions in the new
    jets; factors supported on the old chart's boundary are dropped from the
    numerator and the result is scaled to content 1 with a positive leading
    coefficient.

    Args:
        transformation: Change of reference
        f: Equation on ``chart``
        chart: A plane-curve chart (2, 1, r)

    Returns:
        The transformed equation on ``chart``

    Raises:
        ChartBoundsError: If ``chart`` is not a plane-curve chart
        DegenerateTransformationError: If the old x has zero total derivative
    """
    if not chart.is_curve:
        raise ChartBoundsError(
            "changes of reference are only supported on plane-curve charts",
            {"chart": chart.describe()},
        )
    if f.gens != chart.symbols:
        raise AmbientMismatchError(
            "equation is not written on the chart", {"chart": chart.describe()}
        )
    mapping, _ = jet_substitution(transformation, chart)
    numerator, _ = substitute(f, mapping)
    result = numerator.without_factors(boundary_polynomials(transformation, chart)).normalized()
    logger.debug("%s: %s -> %s", transformation.describe(), f.to_text(), result.to_text())
    return result
