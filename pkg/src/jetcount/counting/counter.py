"""Counting solutions of a differential equation on a plane curve.

The count has two parts: solutions in the affine jet chart, counted as the
dimension of a zero-dimensional quotient ring, and corrections for the
solutions the chart cannot see (points at infinity and vertical tangents),
counted as local multiplicities after an admissible change of reference.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Final

import sympy as sp

from jetcount.common.enums import Marker, Route, Smoothness
from jetcount.counting.models import CountOptions, CountReport, InfinityCorrection
from jetcount.counting.reference import choose_reference, homogeneous_part
from jetcount.errors import (
    AmbientMismatchError,
    PositiveDimensionalError,
    SliceNotSupportedError,
    UnsupportedCuspidalComponentError,
)
from jetcount.invariants.models import DifferentialEquation, Variety
from jetcount.jets.chart import JetChart, chart_variables
from jetcount.jets.derivative import prolong_ideal, total_derivative
from jetcount.jets.transform import PointTransformation, jet_substitution, prolong_transformation
from jetcount.poly.ideal import (
    Ideal,
    count_quotient_dimension,
    is_unit,
    local_multiplicity,
    saturate,
)
from jetcount.poly.polynomial import Polynomial

logger: Final = logging.getLogger(__name__)


# ── regular part ─────────────────────────────────────────────────────────────
def _saturating_direction(g: Polynomial) -> Polynomial:
    """``g_y + c*g_x`` for the first ``c >= 0`` sharing no factor with ``g``.

    Raises:
        UnsupportedCuspidalComponentError: If ``g`` has a repeated component
    """
    x, y = g.gens[0], g.gens[1]
    gx, gy = g.partial_derivative(x), g.partial_derivative(y)
    components = [p for p, _ in g.factors()]
    for c in range(2 * g.total_degree() + 2):
        candidate = gy + gx * c
        if not candidate.is_zero and not any(p.divides(candidate) for p in components):
            return candidate
    raise UnsupportedCuspidalComponentError(
        f"curve {g.to_text()} has a repeated component", {"curve": g.to_text()}
    )


def regular_prolongation(curve: Variety, r: int) -> Ideal:
    """The prolonged ideal of a plane curve, with singular fibres removed.

    Over a singular point the prolonged ideal contains whole lines of jets;
    saturating by a direction derivative of ``g`` keeps only the closure of
    the jets over regular points. The saturation runs one order at a time,
    so each step adds a single jet variable to an already saturated ideal.

    Raises:
        SliceNotSupportedError: If ``curve`` is not a plane curve
    """
    if not curve.is_plane_curve:
        raise SliceNotSupportedError(f"{curve.label()} is not a plane curve")
    return _regular_prolongation(curve.equation, curve.smoothness, r)


@lru_cache(maxsize=256)
def _regular_prolongation(g: Polynomial, smoothness: Smoothness, r: int) -> Ideal:
    chart = chart_variables(2, 1, r)
    if smoothness.is_regular or r == 0:
        return prolong_ideal([g], chart)
    x, y = g.gens[0], g.gens[1]
    if is_unit(Ideal.of([g, g.partial_derivative(x), g.partial_derivative(y)])):
        return prolong_ideal([g], chart)
    direction = _saturating_direction(g)
    logger.debug("saturating prolongation of %s by %s", g.to_text(), direction.to_text())
    derivative = g.lift(chart.extend(0).symbols)
    ideal = Ideal.of([derivative])
    for order in range(1, r + 1):
        level = chart.extend(order)
        derivative = total_derivative(derivative, 1, chart.extend(order - 1))
        ideal = ideal.lift(level.symbols) + [derivative]
        ideal = saturate(ideal, direction.lift(level.symbols))
    return ideal


# ── chart route ──────────────────────────────────────────────────────────────
def count_affine(curve: Variety, equation: DifferentialEquation) -> int:
    """Solutions over the affine chart, with multiplicity.

    Raises:
        PositiveDimensionalError: If the solution set is not finite
    """
    ideal = regular_prolongation(curve, equation.r) + [equation.f]
    count = count_quotient_dimension(ideal)
    if count is Marker.INFINITE:
        raise PositiveDimensionalError(
            f"{equation.to_text()} has infinitely many solutions on {curve.label()}",
            {"curve": curve.label(), "equation": equation.to_text()},
        )
    logger.debug("affine count %d for %s on %s", count, equation.to_text(), curve.label())
    return int(count)


def describe_point(factor: sp.Expr, x: sp.Symbol, y: sp.Symbol) -> str:
    """Name the points at infinity cut out by a factor of the top form."""
    poly = sp.Poly(factor, x, y)
    if poly.total_degree() == 1:
        a, b = poly.coeff_monomial(x), poly.coeff_monomial(y)
        return f"({-b}:{a}:0)"
    text = str(factor).replace("**", "^")
    return f"(X:Y:0) with {text.replace(str(x), 'X').replace(str(y), 'Y')} = 0"


def _multiplicity(ideal: Ideal, at: list[Polynomial], where: str) -> int:
    value = local_multiplicity(ideal, at)
    if value is Marker.INFINITE:
        raise UnsupportedCuspidalComponentError(
            f"infinitely many solutions at {where}", {"at": where}
        )
    return int(value)


def count_at_infinity(
    curve: Variety, equation: DifferentialEquation, options: CountOptions
) -> list[InfinityCorrection]:
    """Solutions hidden from the affine jet chart, grouped by location.

    Raises:
        ReferenceRetriesExhaustedError: If no admissible reference is drawn
        UnsupportedCuspidalComponentError: If a hidden group is infinite
    """
    chart: JetChart = equation.chart
    reference = choose_reference(curve.equation, equation.f, chart, options)
    return corrections_in_reference(curve, equation, reference)


def corrections_in_reference(
    curve: Variety, equation: DifferentialEquation, reference: PointTransformation
) -> list[InfinityCorrection]:
    """Hidden solutions counted in a given admissible reference."""
    chart = equation.chart
    g = curve.equation
    x, y = g.gens[0], g.gens[1]
    moved = Variety(2, 1, (reference.transform_curve(g, chart),), curve.smoothness)
    transformed = prolong_transformation(reference, equation.f, chart)
    system = regular_prolongation(moved, chart.r) + [transformed]
    ell = Polynomial.from_expr(sp.expand(reference.old_line_at_infinity(x, y)), chart.symbols)
    where = reference.describe()

    corrections: list[InfinityCorrection] = []
    inverse = reference.inverse_matrix
    image = {
        x: inverse[0, 0] * x + inverse[0, 1] * y + inverse[0, 2],
        y: inverse[1, 0] * x + inverse[1, 1] * y + inverse[1, 2],
    }
    _, factors = sp.factor_list(homogeneous_part(g, g.total_degree()), x, y)
    for factor, _ in factors:
        local = Polynomial.from_expr(sp.expand(factor.xreplace(image)), chart.symbols)
        point = describe_point(factor, x, y)
        mult = _multiplicity(system, [ell, local], point)
        if mult > 0:
            corrections.append(InfinityCorrection(point=point, chart=where, multiplicity=mult))

    if chart.r >= 1:
        _, dx = jet_substitution(reference, chart)
        numerator, _ = sp.fraction(sp.together(dx))
        t = sp.Dummy("t")
        ring = (*chart.symbols, t)
        localized = system.lift(ring) + [Polynomial.from_expr(t * ell.expr - 1, ring)]
        vertical = Polynomial.from_expr(sp.expand(numerator), ring)
        mult = _multiplicity(localized, [vertical], "vertical tangents")
        if mult > 0:
            corrections.append(
                InfinityCorrection(point="vertical tangents", chart=where, multiplicity=mult)
            )
    return corrections


def measure_on_chart(
    curve: Variety, equation: DifferentialEquation, options: CountOptions
) -> CountReport:
    """``deg S(f)`` for a plane curve: affine count plus corrections.

    Raises:
        AmbientMismatchError: If the equation is not on a plane-curve chart
    """
    if not equation.chart.is_curve:
        raise AmbientMismatchError(
            "plane curves need an equation on a (2,1,r) chart",
            {"chart": equation.chart.describe()},
        )
    affine = count_affine(curve, equation)
    corrections = count_at_infinity(curve, equation, options)
    report = CountReport.tally(affine, corrections, options.seed, Route.CHART)
    logger.info(
        "deg S(%s) on %s = %d (affine %d)",
        equation.to_text(),
        curve.label(),
        report.total,
        affine,
    )
    return report
