"""Equation invariants ``gamma_s^f``: evaluation routes and calibration.

The entries ``gamma_0``, ``gamma_1`` and the top entry can be read off the
equation when it is distinguished in a suitable variable; the top entry
also follows from the diagonal criterion. Everything else is solved from a
linear system built from test varieties with known cuspidal numbers and
measured degrees.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Mapping, Sequence
from typing import Final

import sympy as sp

from jetcount.common.enums import Field, Marker, Provenance
from jetcount.errors import NonIntegralError, SingularSystemError
from jetcount.invariants.models import (
    CalibrationTest,
    CuspidalNumbers,
    DifferentialEquation,
    EquationInvariants,
    GammaEntry,
    Value,
)

logger: Final = logging.getLogger(__name__)


# ── evaluation routes ────────────────────────────────────────────────────────
def distinguished_value(equation: DifferentialEquation, variable: sp.Symbol) -> Value:
    """Total degree of ``f`` if ``f`` is distinguished in ``variable``.

    ``f`` is distinguished in ``v`` when it contains ``v^d`` with a nonzero
    coefficient, ``d`` being the total degree of ``f``.
    """
    f = equation.f
    restricted = f.restrict([variable])
    degree = f.total_degree()
    if not restricted.is_zero and restricted.degree(variable) == degree:
        return degree
    return Marker.NOT_APPLICABLE


def _first_distinguished(
    equation: DifferentialEquation, candidates: Iterable[sp.Symbol]
) -> Value:
    for variable in candidates:
        value = distinguished_value(equation, variable)
        if value is not Marker.NOT_APPLICABLE:
            logger.debug("%s is distinguished in %s", equation.to_text(), variable)
            return value
    return Marker.NOT_APPLICABLE


def _pure_top_jets(equation: DifferentialEquation) -> list[sp.Symbol]:
    chart = equation.chart
    if chart.r == 0:
        return [sym for _, sym in chart.jets]
    return [sym for idx, sym in chart.jets_of_order(chart.r) if len(set(idx.alpha)) == 1]


def gamma_top_distinguished(equation: DifferentialEquation) -> Value:
    """The top entry, when ``f`` is distinguished in a pure top-order jet."""
    return _first_distinguished(equation, _pure_top_jets(equation))


def gamma_top_diagonal(equation: DifferentialEquation) -> Value:
    """The top entry by the diagonal criterion.

    Keeping only the pure top-order jets ``y^j_{i..i}`` must leave a
    polynomial of full total degree.
    """
    restricted = equation.f.restrict(_pure_top_jets(equation))
    degree = equation.f.total_degree()
    if not restricted.is_zero and restricted.total_degree() == degree:
        return degree
    return Marker.NOT_APPLICABLE


def gamma_1_distinguished(equation: DifferentialEquation) -> Value:
    """``gamma_1`` when ``f`` is distinguished in a first-order jet."""
    if equation.r < 1:
        return Marker.NOT_APPLICABLE
    return _first_distinguished(equation, [sym for _, sym in equation.chart.jets_of_order(1)])


def gamma_0_distinguished(equation: DifferentialEquation) -> Value:
    """``gamma_0`` when ``f`` is distinguished in an independent coordinate."""
    return _first_distinguished(equation, equation.chart.xs)


def route_values(equation: DifferentialEquation) -> dict[int, tuple[int, Provenance]]:
    """Entries determined by evaluation routes alone."""
    r = equation.r
    found: dict[int, tuple[int, Provenance]] = {}
    top = gamma_top_distinguished(equation)
    if isinstance(top, int):
        found[r] = (top, Provenance.DISTINGUISHED)
    else:
        diagonal = gamma_top_diagonal(equation)
        if isinstance(diagonal, int):
            found[r] = (diagonal, Provenance.DIAGONAL)
    for index, route in ((0, gamma_0_distinguished), (1, gamma_1_distinguished)):
        if index in found or index > r:
            continue
        value = route(equation)
        if isinstance(value, int):
            found[index] = (value, Provenance.DISTINGUISHED)
    return found


def route_invariants(
    equation: DifferentialEquation, known: Mapping[int, int] | None = None
) -> EquationInvariants:
    """Invariants from the routes and user entries; other entries are unknown.

    User entries take precedence over route values.
    """
    values = route_values(equation)
    for index, value in (known or {}).items():
        if 0 <= index <= equation.r:
            values[index] = (value, Provenance.USER)
    unknown = GammaEntry(Marker.UNKNOWN, Provenance.UNKNOWN)
    entries = tuple(
        GammaEntry(*values[s]) if s in values else unknown for s in range(equation.r + 1)
    )
    return EquationInvariants(entries)


# ── calibration ──────────────────────────────────────────────────────────────
def _undeterminable(index: int, r: int) -> bool:
    return 2 <= index < r


def _numbers_for(test: CalibrationTest, length: int) -> CuspidalNumbers:
    if len(test.cuspidal) >= length:
        return test.cuspidal
    return test.cuspidal.padded(length, test.variety.smoothness)


def _rows(
    invariants: EquationInvariants, tests: Sequence[CalibrationTest], unknown: Sequence[int]
) -> tuple[list[list[int]], list[int]]:
    """Linear rows ``sum_u gamma^u_S x_u = measured - known contributions``.

    Tests whose own entries are unknown where they matter are skipped.
    """
    matrix: list[list[int]] = []
    rhs: list[int] = []
    for test in tests:
        numbers = _numbers_for(test, len(invariants))
        row: list[int] = []
        target = test.measured
        usable = True
        for s, entry in enumerate(invariants.entries):
            partner = numbers[s].value
            if s in unknown:
                if not isinstance(partner, int):
                    usable = False
                    break
                row.append(partner)
                continue
            if entry.value == 0 or partner == 0:
                continue
            if not isinstance(partner, int) or not isinstance(entry.value, int):
                usable = False
                break
            target -= entry.value * partner
        if usable:
            matrix.append(row)
            rhs.append(target)
        else:
            logger.debug("skipping calibration test %s", test.variety.label())
    return matrix, rhs


def _solve_rational(matrix: list[list[int]], rhs: list[int]) -> list[int]:
    system = sp.Matrix(matrix)
    column = sp.Matrix(rhs)
    try:
        solution, params = system.gauss_jordan_solve(column)
    except ValueError as exc:
        raise NonIntegralError("calibration system is inconsistent") from exc
    if params.shape[0] > 0:
        raise SingularSystemError("calibration tests do not determine every entry")
    values: list[int] = []
    for value in solution:
        if not sp.Rational(value).is_integer:
            raise NonIntegralError(f"calibration gives the non-integer value {value}")
        values.append(int(value))
    return values


def _solve_mod2(matrix: list[list[int]], rhs: list[int]) -> list[int]:
    width = len(matrix[0]) if matrix else 0
    solutions = [
        candidate
        for candidate in itertools.product((0, 1), repeat=width)
        if all(
            (sum(a * x for a, x in zip(row, candidate, strict=True)) - b) % 2 == 0
            for row, b in zip(matrix, rhs, strict=True)
        )
    ]
    if not solutions:
        raise NonIntegralError("calibration system is inconsistent mod 2")
    if len(solutions) > 1:
        raise SingularSystemError("calibration tests do not determine every entry mod 2")
    return list(solutions[0])


def calibrate(
    invariants: EquationInvariants,
    tests: Sequence[CalibrationTest],
    field: Field = Field.RATIONALS,
) -> EquationInvariants:
    """Solve the unknown entries from test varieties.

    Each test contributes ``measured = sum_s gamma_s^f * gamma^s_S``. Entries
    with index ``2 <= s < r`` that no test involves stay unknown.

    Args:
        invariants: Partially known invariants (unknown entries are solved for)
        tests: Test varieties with cuspidal numbers and measured degrees
        field: Solve over the rationals or mod 2

    Returns:
        The invariants with calibrated entries filled in

    Raises:
        SingularSystemError: If the tests leave a determinable entry free
        NonIntegralError: If the system is inconsistent or has a non-integer solution
    """
    r = len(invariants) - 1
    unknown = [s for s, entry in enumerate(invariants.entries) if not entry.known]
    if not unknown:
        return invariants
    involved = [
        s
        for s in unknown
        if any(
            not isinstance(t.cuspidal[s].value, int) or t.cuspidal[s].value != 0
            for t in tests
            if s < len(t.cuspidal)
        )
    ]
    for s in unknown:
        if s not in involved and not _undeterminable(s, r):
            raise SingularSystemError(f"no calibration test involves gamma_{s}", {"index": s})
    if not involved:
        return invariants
    matrix, rhs = _rows(invariants, tests, involved)
    if not matrix:
        raise SingularSystemError("no calibration test is usable", {"unknown": involved})
    logger.debug("calibration system %s = %s over %s", matrix, rhs, field.value)
    solution = _solve_mod2(matrix, rhs) if field is Field.MOD2 else _solve_rational(matrix, rhs)
    solved = dict(zip(involved, solution, strict=True))
    entries = tuple(
        GammaEntry(solved[s], Provenance.CALIBRATED) if s in solved else entry
        for s, entry in enumerate(invariants.entries)
    )
    result = EquationInvariants(entries)
    return result.mod2() if field is Field.MOD2 else result
