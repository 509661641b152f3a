"""Total derivatives and prolongation of variety ideals."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Final

import sympy as sp

from jetcount.errors import AmbientMismatchError, ChartBoundsError
from jetcount.jets.chart import JetChart
from jetcount.poly.ideal import Ideal
from jetcount.poly.polynomial import Polynomial

logger: Final = logging.getLogger(__name__)


def total_derivative_expr(expr: sp.Expr, i: int, chart: JetChart) -> sp.Expr:
    """Apply ``D_i`` to an expression in the coordinates of ``chart``.

    ``D_i = d/dx_i + sum y^j_{alpha+i} d/dy^j_alpha``; the result lives on
    the chart of order ``r + 1``. Rational expressions are differentiated
    with the quotient rule and left unsimplified.
    """
    if not 1 <= i <= chart.k:
        raise ChartBoundsError(f"total derivative index {i} outside 1..{chart.k}")
    target = chart.extend(chart.r + 1)
    result = sp.diff(expr, chart.x(i))
    free = expr.free_symbols
    for index, sym in chart.jets:
        if sym in free:
            result += target.y(index.j, index.raised(i).alpha) * sp.diff(expr, sym)
    return result


def total_derivative(p: Polynomial, i: int, chart: JetChart) -> Polynomial:
    """Total derivative of a polynomial on ``chart``, returned on order ``r + 1``.

    Raises:
        AmbientMismatchError: If ``p`` is not written on ``chart``
        ChartBoundsError: If ``i`` is outside ``1..k``
    """
    if p.gens != chart.symbols:
        raise AmbientMismatchError(
            "polynomial is not written on the chart", {"chart": chart.describe()}
        )
    target = chart.extend(chart.r + 1)
    value = sp.expand(total_derivative_expr(p.expr, i, chart))
    return Polynomial.from_expr(value, target.symbols, p.field)


def prolong_ideal(generators: Sequence[Polynomial], chart: JetChart) -> Ideal:
    """Generators plus their iterated total derivatives up to ``chart.r``.

    Only non-decreasing index sequences are applied, since total
    derivatives commute.

    Args:
        generators: Variety equations in the x's and y's
        chart: Target chart; its order is the prolongation order

    Returns:
        The prolonged ideal on ``chart``
    """
    base = chart.extend(0)
    level: list[tuple[int, Polynomial]] = [(1, g.lift(base.symbols)) for g in generators]
    collected = [g.lift(chart.symbols) for _, g in level]
    for order in range(chart.r):
        source = chart.extend(order)
        following: list[tuple[int, Polynomial]] = []
        for first, g in level:
            for i in range(first, chart.k + 1):
                following.append((i, total_derivative(g, i, source)))
        level = following
        collected.extend(g.lift(chart.symbols) for _, g in level)
    logger.debug(
        "prolonged %d generators to %d on order %d", len(generators), len(collected), chart.r
    )
    field = generators[0].field if generators else None
    return Ideal.of(collected, chart.symbols, field)
