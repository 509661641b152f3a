"""Cuspidal numbers of subvarieties: degree, class and higher entries."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Final

import sympy as sp

from jetcount.common.enums import Marker, Provenance, Smoothness
from jetcount.counting.measure import measure_degree
from jetcount.counting.models import CountOptions
from jetcount.counting.sections import variety_degree
from jetcount.errors import NonIntegralError, UnknownEntryError
from jetcount.formula.theorem import surface_class
from jetcount.invariants.calibration import equation_invariants
from jetcount.invariants.models import (
    CuspidalNumbers,
    DifferentialEquation,
    EquationInvariants,
    GammaEntry,
    Variety,
)
from jetcount.poly.ideal import Ideal, count_quotient_dimension
from jetcount.poly.polynomial import Polynomial

logger: Final = logging.getLogger(__name__)

FIRST_ORDER_TEST: Final = "y'"
SECOND_ORDER_TEST: Final = "y''"


def detect_smoothness(variety: Variety) -> Smoothness:
    """Projective smoothness of a hypersurface.

    ``F`` and its partial derivatives cut out only the origin of the affine
    cone exactly when the quotient ring is finite dimensional.
    """
    if not variety.is_hypersurface:
        return Smoothness.UNKNOWN
    g = variety.equation
    z = sp.Dummy("z")
    coords = (*g.gens, z)
    homogeneous = sp.Poly(g.expr, *g.gens).homogenize(z).as_expr()
    jacobian = [homogeneous, *(sp.diff(homogeneous, c) for c in coords)]
    ideal = Ideal.of([Polynomial.from_expr(sp.expand(e), coords) for e in jacobian], coords)
    smooth = count_quotient_dimension(ideal) is not Marker.INFINITE
    logger.debug("%s is %s", variety.label(), "smooth" if smooth else "singular")
    return Smoothness.SMOOTH if smooth else Smoothness.SINGULAR


def resolve_smoothness(variety: Variety) -> Variety:
    """Fill in undeclared smoothness; declared values are kept."""
    if variety.smoothness is not Smoothness.UNKNOWN:
        return variety
    return variety.with_smoothness(detect_smoothness(variety))


def degree(variety: Variety, options: CountOptions | None = None) -> int:
    return variety_degree(variety, options or CountOptions())


def class_smooth(variety: Variety, options: CountOptions | None = None) -> int:
    """The class of a smooth or normal variety from its degree and genus.

    Raises:
        MissingGenusError: If the variety is neither a plane curve nor a
            hypersurface and no sectional genus is given
    """
    d = degree(variety, options)
    return surface_class(d, variety.genus, variety.is_hypersurface and variety.genus is None)


def class_measured(variety: Variety, options: CountOptions | None = None) -> int:
    """The class as the measured degree of the solutions of ``y' = 0``."""
    equation = DifferentialEquation.parse(FIRST_ORDER_TEST, 2, 1, 1)
    return measure_degree(variety, equation, options).total


def higher_cuspidal(
    variety: Variety,
    s: int,
    equation: DifferentialEquation,
    invariants: EquationInvariants,
    lower: Sequence[int],
    options: CountOptions | None = None,
    measured: int | None = None,
) -> int:
    """``gamma^s_S`` from a measured degree and the lower entries.

    Args:
        variety: The variety
        s: Index of the entry, with ``invariants[s]`` nonzero
        equation: An equation of order ``s``
        invariants: All invariants of ``equation``
        lower: ``gamma^0_S .. gamma^(s-1)_S``
        options: Seed and retry budgets
        measured: A known ``deg S(equation)``; measured when omitted

    Returns:
        The entry

    Raises:
        UnknownEntryError: If an invariant needed here is unknown or zero
        NonIntegralError: If the inputs give a negative or fractional entry
    """
    values = invariants.values
    if len(lower) != s or len(values) != s + 1:
        raise UnknownEntryError(f"gamma^{s} needs an order-{s} equation and {s} lower entries")
    top = values[s]
    if not isinstance(top, int) or top == 0:
        raise UnknownEntryError(f"gamma_{s} of {equation.to_text()} must be known and nonzero")
    if measured is None:
        measured = measure_degree(variety, equation, options).total
    remainder = measured
    for t, (gamma_t, lower_t) in enumerate(zip(values[:s], lower, strict=True)):
        if not isinstance(gamma_t, int):
            raise UnknownEntryError(f"gamma_{t} of {equation.to_text()} is unknown")
        remainder -= gamma_t * lower_t
    if remainder % top or remainder // top < 0:
        raise NonIntegralError(
            f"gamma^{s} = {remainder}/{top} is not a non-negative integer",
            {"measured": measured, "lower": list(lower)},
        )
    return remainder // top


def cuspidal_numbers(
    variety: Variety,
    r: int,
    options: CountOptions | None = None,
    user: Sequence[int] | None = None,
) -> CuspidalNumbers:
    """``(gamma^0_S, .., gamma^r_S)`` with provenance per entry.

    User values replace computed ones. For smooth or normal varieties the
    entries from index 2 on are zero. For singular varieties ``gamma^2`` is
    measured through ``y''`` on plane curves; other higher entries stay
    unknown.
    """
    options = options or CountOptions()
    variety = resolve_smoothness(variety)
    supplied = list(user or [])
    entries: list[GammaEntry] = []

    def take(s: int) -> GammaEntry | None:
        return GammaEntry(supplied[s], Provenance.USER) if s < len(supplied) else None

    entries.append(take(0) or GammaEntry(degree(variety, options), Provenance.DEGREE))
    if r >= 1:
        if (entry := take(1)) is None:
            if variety.smoothness.is_regular:
                entry = GammaEntry(class_smooth(variety, options), Provenance.FORMULA)
            else:
                entry = GammaEntry(class_measured(variety, options), Provenance.MEASURED)
        entries.append(entry)
    for s in range(2, r + 1):
        if (entry := take(s)) is not None:
            entries.append(entry)
        elif variety.smoothness.is_regular:
            entries.append(GammaEntry(0, Provenance.REGULAR))
        elif s == 2 and variety.is_plane_curve:
            lower = [int(e.value) for e in entries[:2] if isinstance(e.value, int)]
            equation = DifferentialEquation.parse(SECOND_ORDER_TEST, 2, 1, 2)
            invariants = equation_invariants(equation, options)
            value = higher_cuspidal(variety, 2, equation, invariants, lower, options)
            entries.append(GammaEntry(value, Provenance.MEASURED))
        else:
            entries.append(GammaEntry(Marker.UNKNOWN, Provenance.UNKNOWN))
    numbers = CuspidalNumbers(tuple(entries))
    logger.info("cuspidal numbers of %s: %s", variety.label(), numbers.render())
    return numbers

