"""Linear sections, projective degrees and the graph restriction route."""

from __future__ import annotations

import logging
from functools import reduce
from typing import Final

import sympy as sp

from jetcount.common.enums import Marker, Route, Smoothness
from jetcount.counting.models import CountOptions, CountReport
from jetcount.errors import (
    DegenerateSliceError,
    PositiveDimensionalError,
    SliceNotSupportedError,
)
from jetcount.invariants.models import DifferentialEquation, Variety
from jetcount.jets.chart import JetChart, JetIndex, chart_variables
from jetcount.poly.ideal import (
    Ideal,
    contains,
    count_quotient_dimension,
    eliminate,
    groebner_basis,
    is_unit,
    saturate,
)
from jetcount.poly.polynomial import Polynomial
from jetcount.utils.sampling import SamplingUtils

logger: Final = logging.getLogger(__name__)


# ── projective degree ────────────────────────────────────────────────────────
def homogenized(ideal: Ideal, z: sp.Symbol) -> list[Polynomial]:
    """Generators of the projective closure, from the grevlex basis."""
    ring = (*ideal.gens, z)
    return [
        Polynomial.from_expr(sp.Poly(p.expr, *ideal.gens).homogenize(z).as_expr(), ring)
        for p in groebner_basis(ideal)
    ]


def projective_degree(ideal: Ideal, dimension: int, options: CountOptions) -> int:
    """Degree of the projective closure of the affine zero set of ``ideal``.

    The closure is cut by ``dimension`` random hyperplanes and the points
    are counted in a random affine chart. The largest count over
    ``options.slice_attempts`` draws is kept, since special draws only lose
    points.

    Args:
        ideal: Ideal of an affine variety of pure dimension ``dimension``
        dimension: Number of hyperplanes to cut with
        options: Seed and slice budget

    Returns:
        The degree; 0 for the unit ideal

    Raises:
        DegenerateSliceError: If no draw gives a finite count
    """
    if is_unit(ideal):
        return 0
    if len(ideal.generators) == 1 and dimension == len(ideal.gens) - 1:
        return ideal.generators[0].total_degree()
    z = sp.Dummy("z")
    ring = (*ideal.gens, z)
    closure = homogenized(ideal, z)
    counts: list[int] = []
    for attempt in range(options.slice_attempts):
        rng = options.rng(f"degree:{ideal.to_text()}:{attempt}")
        cuts = [
            SamplingUtils.linear_form(rng, ring, options.coefficient_bound, constant=False)
            for _ in range(dimension)
        ]
        affine_chart = (
            SamplingUtils.linear_form(rng, ring, options.coefficient_bound, constant=False) - 1
        )
        system = Ideal.of(
            [*closure, *(Polynomial.from_expr(c, ring) for c in (*cuts, affine_chart))], ring
        )
        count = count_quotient_dimension(system)
        logger.debug("slice attempt %d: %s points", attempt + 1, count)
        if count is not Marker.INFINITE:
            counts.append(int(count))
    if not counts:
        logger.warning("no finite slice after %d attempts", options.slice_attempts)
        raise DegenerateSliceError(
            f"no finite slice after {options.slice_attempts} attempts", {"ideal": ideal.to_text()}
        )
    return max(counts)


# ── graph route ──────────────────────────────────────────────────────────────
def graph_jets(g: Polynomial, chart: JetChart) -> dict[sp.Symbol, sp.Expr]:
    """Jets of the graph ``y(x)`` of ``g = 0`` as rational functions of x, y.

    Raises:
        SliceNotSupportedError: If ``g`` does not involve ``y``
    """
    y = chart.y(1)
    gy = sp.diff(g.expr, y)
    if gy == 0:
        raise SliceNotSupportedError(f"{g.to_text()} does not define y as a function of x")
    slopes = {i: -sp.diff(g.expr, chart.x(i)) / gy for i in range(1, chart.k + 1)}

    def derive(expr: sp.Expr, i: int) -> sp.Expr:
        return sp.cancel(sp.diff(expr, chart.x(i)) + slopes[i] * sp.diff(expr, y))

    values: dict[JetIndex, sp.Expr] = {JetIndex(1, ()): y}
    for order in range(1, chart.r + 1):
        for index, _ in chart.jets_of_order(order):
            parent = JetIndex(1, index.alpha[:-1])
            values[index] = derive(values[parent], index.alpha[-1])
    return {chart.y(1, idx.alpha): value for idx, value in values.items() if idx.order > 0}


def restrict_to_graph(curve: Variety, equation: DifferentialEquation) -> Polynomial:
    """Numerator of ``f`` restricted to the graph, on the order-0 chart."""
    base = curve.chart
    values = graph_jets(curve.equation, equation.chart)
    restricted = sp.cancel(sp.together(equation.f.expr.xreplace(values)))
    numerator, _ = sp.fraction(restricted)
    return Polynomial.from_expr(sp.expand(numerator), base.symbols)


def measure_by_graph(
    surface: Variety, equation: DifferentialEquation, options: CountOptions
) -> CountReport:
    """``deg S(f)`` for a hypersurface through its local graph.

    Each factor ``q`` of the restricted numerator contributes its
    multiplicity times the degree of the closure of ``S ∩ {q = 0}`` off
    the locus where the graph is not defined.

    Raises:
        PositiveDimensionalError: If ``f`` vanishes on all of ``S``
    """
    g = surface.equation
    numerator = restrict_to_graph(surface, equation)
    if numerator.is_zero or contains(Ideal.of([g]), numerator):
        raise PositiveDimensionalError(
            f"{equation.to_text()} vanishes identically on {surface.label()}",
            {"variety": surface.label(), "equation": equation.to_text()},
        )
    gy = g.partial_derivative(surface.chart.y(1))
    total = 0
    for factor, mult in numerator.factors():
        component = saturate(Ideal.of([g, factor]), gy)
        if is_unit(component):
            continue
        degree = projective_degree(component, surface.k - 1, options)
        logger.debug("factor %s: multiplicity %d, degree %d", factor.to_text(), mult, degree)
        total += mult * degree
    logger.info("deg S(%s) on %s = %d by graph", equation.to_text(), surface.label(), total)
    return CountReport.tally(total, [], options.seed, Route.GRAPH)


# ── section route ────────────────────────────────────────────────────────────
def plane_model(variety: Variety, options: CountOptions, expected_degree: int) -> Variety:
    """A plane curve birational to a generic curve section of ``variety``.

    The variety is cut by ``k - 1`` random hyperplanes and projected by two
    random linear forms. Draws whose eliminant does not have the expected
    degree are discarded.

    Raises:
        DegenerateSliceError: If no draw within the slice budget works
    """
    coords = variety.chart.symbols
    curve_chart = chart_variables(2, 1, 0)
    u, v = sp.Dummy("u"), sp.Dummy("v")
    ring = (*coords, u, v)
    bound = options.coefficient_bound
    for attempt in range(options.slice_attempts):
        rng = options.rng(f"section:{variety.label()}:{attempt}")
        cuts = [SamplingUtils.linear_form(rng, coords, bound) for _ in range(variety.k - 1)]
        projection = [
            u - SamplingUtils.linear_form(rng, coords, bound),
            v - SamplingUtils.linear_form(rng, coords, bound),
        ]
        system = Ideal.of(
            [
                *(g.lift(ring) for g in variety.generators),
                *(Polynomial.from_expr(e, ring) for e in (*cuts, *projection)),
            ],
            ring,
        )
        eliminants = [p.expr for p in eliminate(system, len(coords)).generators]
        if not eliminants:
            continue
        model_expr = reduce(sp.gcd, eliminants)
        model = Polynomial.from_expr(
            sp.expand(model_expr.xreplace(dict(zip((u, v), curve_chart.symbols, strict=True)))),
            curve_chart.symbols,
        )
        if model.total_degree() != expected_degree:
            logger.debug(
                "section attempt %d: plane model of degree %d, expected %d",
                attempt + 1,
                model.total_degree(),
                expected_degree,
            )
            continue
        name = f"plane model of {variety.label()}"
        return Variety(2, 1, (model.normalized(),), Smoothness.UNKNOWN, name=name)
    raise DegenerateSliceError(
        f"no plane model of {variety.label()} after {options.slice_attempts} attempts"
    )


def variety_degree(variety: Variety, options: CountOptions) -> int:
    """Degree of ``variety`` in P^n."""
    if variety.is_hypersurface:
        return variety.equation.total_degree()
    return projective_degree(Ideal.of(variety.generators), variety.k, options)
