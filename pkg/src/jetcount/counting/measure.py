"""Dispatch of ``deg S(f)`` measurements to the chart, graph and section routes."""

from __future__ import annotations

import logging
from typing import Final

from jetcount.common.enums import Route
from jetcount.counting.counter import measure_on_chart
from jetcount.counting.models import CountOptions, CountReport
from jetcount.counting.sections import measure_by_graph, plane_model, variety_degree
from jetcount.errors import SliceNotSupportedError
from jetcount.invariants.models import DifferentialEquation, Variety

logger: Final = logging.getLogger(__name__)


def select_route(variety: Variety, equation: DifferentialEquation) -> Route:
    """Pick the route able to measure ``equation`` on ``variety``.

    Raises:
        SliceNotSupportedError: If no route applies
    """
    chart = equation.chart
    if variety.is_plane_curve and chart.is_curve:
        return Route.CHART
    if variety.is_hypersurface and variety.n >= 3 and (chart.n, chart.k) == (variety.n, variety.k):
        return Route.GRAPH
    if chart.is_curve and chart.r <= 1 and (variety.k >= 2 or variety.n >= 3):
        return Route.SECTION
    raise SliceNotSupportedError(
        f"cannot measure an equation on ({chart.n},{chart.k},{chart.r}) "
        f"on a variety of dimension {variety.k} in P^{variety.n}",
        {"variety": variety.label(), "equation": equation.to_text()},
    )


def measure_degree(
    variety: Variety, equation: DifferentialEquation, options: CountOptions | None = None
) -> CountReport:
    """Measure ``deg S(f)`` by counting solutions.

    Args:
        variety: The subvariety ``S``
        equation: The differential equation ``f``
        options: Seed and retry budgets

    Returns:
        The count with its bookkeeping

    Raises:
        SliceNotSupportedError: If no route applies
        PositiveDimensionalError: If ``S(f)`` is all of ``S``
    """
    options = options or CountOptions()
    route = select_route(variety, equation)
    logger.debug("measuring %s on %s by %s", equation.to_text(), variety.label(), route.value)
    if route is Route.CHART:
        return measure_on_chart(variety, equation, options)
    if route is Route.GRAPH:
        return measure_by_graph(variety, equation, options)
    model = plane_model(variety, options, variety_degree(variety, options))
    report = measure_on_chart(model, equation, options)
    return report.model_copy(update={"route": Route.SECTION})
