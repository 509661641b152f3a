"""Calibration suites and the equation-invariant pipeline."""

from __future__ import annotations

import logging
from collections.abc import Mapping
from typing import Final

from jetcount.common.enums import Field, Marker, Provenance, Smoothness
from jetcount.counting.measure import measure_degree
from jetcount.counting.models import CountOptions
from jetcount.errors import SliceNotSupportedError
from jetcount.invariants.equation import calibrate, route_invariants
from jetcount.invariants.models import (
    CalibrationTest,
    CuspidalNumbers,
    DifferentialEquation,
    EquationInvariants,
    GammaEntry,
    Value,
    Variety,
)

logger: Final = logging.getLogger(__name__)


# ── suites ───────────────────────────────────────────────────────────────────
def _curve_suite(include_cusp: bool) -> list[tuple[Variety, tuple[Value, ...]]]:
    suite: list[tuple[Variety, tuple[Value, ...]]] = [
        (Variety.parse(["x^2 + y^2 - 1"], 2, 1, Smoothness.SMOOTH, name="conic"), (2, 2)),
        (Variety.parse(["x^3 + y^2 - 1"], 2, 1, Smoothness.SMOOTH, name="smooth cubic"), (3, 6)),
    ]
    if include_cusp:
        cusp = Variety.parse(["x^3 + y^2"], 2, 1, Smoothness.SINGULAR, name="cuspidal cubic")
        suite.append((cusp, (3, 3, 1)))
    return suite


def _hypersurface_suite(n: int) -> list[tuple[Variety, tuple[Value, ...]]]:
    xs = [f"x{i}" for i in range(1, n)]
    quadric = " + ".join(f"{x}^2" for x in xs) + " + y^2 + 1"
    cubic = " + ".join(f"{x}^3" for x in xs) + " + y^2 + 1"
    return [
        (Variety.parse([quadric], n, n - 1, Smoothness.SMOOTH, name="quadric"), (2, 2)),
        (Variety.parse([cubic], n, n - 1, Smoothness.SMOOTH, name="cubic"), (3, 6)),
    ]


def _real_cylinder_suite() -> list[tuple[Variety, tuple[Value, ...]]]:
    return [
        (
            Variety.parse(["x1^3 + y^2 + 1"], 3, 2, Smoothness.SINGULAR, name="cylinder"),
            (1, 0, Marker.UNKNOWN),
        ),
        (
            Variety.parse(["x1^3 + y^2"], 3, 2, Smoothness.SINGULAR, name="cuspidal cylinder"),
            (1, 1, Marker.UNKNOWN),
        ),
    ]


def suite_for(
    equation: DifferentialEquation, field: Field, include_cusp: bool
) -> list[tuple[Variety, tuple[Value, ...]]]:
    """Test varieties and their tabulated cuspidal numbers for a chart.

    Raises:
        SliceNotSupportedError: If no suite exists for the chart
    """
    chart = equation.chart
    if chart.is_curve:
        return _curve_suite(include_cusp)
    if field is Field.MOD2 and (chart.n, chart.k) == (3, 2):
        return _real_cylinder_suite()
    if chart.n >= 3 and chart.k == chart.n - 1:
        return _hypersurface_suite(chart.n)
    raise SliceNotSupportedError(
        f"no calibration suite for charts ({chart.n},{chart.k},r)", {"chart": chart.describe()}
    )


def calibration_tests(
    equation: DifferentialEquation,
    options: CountOptions,
    field: Field = Field.RATIONALS,
    include_cusp: bool = False,
) -> list[CalibrationTest]:
    """Measure ``equation`` on every test variety of its suite."""
    tests: list[CalibrationTest] = []
    for variety, values in suite_for(equation, field, include_cusp):
        numbers = CuspidalNumbers.from_values(values, Provenance.FORMULA)
        measured = measure_degree(variety, equation, options).total
        logger.debug("calibration: deg %s(%s) = %d", variety.label(), equation.to_text(), measured)
        tests.append(CalibrationTest(variety, numbers, measured))
    return tests


# ── pipeline ─────────────────────────────────────────────────────────────────
def _needs_calibration(invariants: EquationInvariants) -> bool:
    r = len(invariants) - 1
    return any(not e.known and not 2 <= s < r for s, e in enumerate(invariants.entries))


def equation_invariants(
    equation: DifferentialEquation,
    options: CountOptions | None = None,
    known: Mapping[int, int] | None = None,
    field: Field = Field.RATIONALS,
) -> EquationInvariants:
    """All determinable invariants of ``equation``.

    Route values and user entries come first; the remaining entries are
    calibrated. Mod 2 uses the real cylinder suite on surfaces in P^3 and
    otherwise reduces the rational calibration.

    Args:
        equation: The differential equation
        options: Seed and retry budgets for the calibration measurements
        known: User-supplied entries by index
        field: Rational or mod-2 invariants

    Returns:
        The invariants, with unknown entries only at ``2 <= s < r``
    """
    options = options or CountOptions()
    invariants = route_invariants(equation, known)
    if not _needs_calibration(invariants):
        return invariants.mod2() if field is Field.MOD2 else invariants
    include_cusp = equation.r == 2 and not invariants[2].known
    chart = equation.chart
    if field is Field.MOD2 and (chart.n, chart.k) == (3, 2):
        tests = calibration_tests(equation, options, field)
        return calibrate(invariants.mod2(), tests, Field.MOD2)
    tests = calibration_tests(equation, options, Field.RATIONALS, include_cusp)
    result = calibrate(invariants, tests)
    logger.info("invariants of %s: %s", equation.to_text(), result.render())
    return result.mod2() if field is Field.MOD2 else result


def cross_check(
    equation: DifferentialEquation, options: CountOptions | None = None
) -> tuple[EquationInvariants, EquationInvariants, bool]:
    """Compare route values with a calibration that ignores them.

    The top entry is kept from the routes when the suite cannot fix it.

    Returns:
        ``(route values, calibrated values, agreement)``
    """
    options = options or CountOptions()
    routes = route_invariants(equation)
    r = equation.r
    include_cusp = equation.chart.is_curve and r == 2
    blank = GammaEntry(Marker.UNKNOWN, Provenance.UNKNOWN)
    keep_top = not include_cusp and r >= 2
    start = EquationInvariants(
        tuple(routes[s] if keep_top and s == r else blank for s in range(r + 1))
    )
    tests = calibration_tests(equation, options, Field.RATIONALS, include_cusp)
    calibrated = calibrate(start, tests)
    agree = all(
        a.value == b.value
        for a, b in zip(routes.entries, calibrated.entries, strict=True)
        if a.known and b.known
    )
    if not agree:
        logger.warning(
            "routes %s disagree with calibration %s for %s",
            routes.render(),
            calibrated.render(),
            equation.to_text(),
        )
    return routes, calibrated, agree
