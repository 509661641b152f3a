"""The mod-2 degree formula for real varieties and the umbilical equation."""

from __future__ import annotations

import logging
from typing import Final

from jetcount.common.enums import Field, Smoothness
from jetcount.counting.models import CountOptions
from jetcount.formula.theorem import degree_by_theorem
from jetcount.invariants.calibration import equation_invariants
from jetcount.invariants.models import CuspidalNumbers, DifferentialEquation, EquationInvariants

logger: Final = logging.getLogger(__name__)

UMBILICAL_SOURCE: Final = "(y1_11 - y1_22)^2 + 4*y1_12^2"


def degree_mod2(
    gamma_f: EquationInvariants,
    gamma_s: CuspidalNumbers,
    smoothness: Smoothness = Smoothness.UNKNOWN,
) -> int:
    """``deg S(f)`` in Z/2; both vectors are reduced entrywise first."""
    return degree_by_theorem(gamma_f.mod2(), gamma_s.mod2(), smoothness, modulus=2)


def umbilical_equation() -> DifferentialEquation:
    """Umbilical points of a surface graph ``y(x1, x2)`` in P^3."""
    return DifferentialEquation.parse(UMBILICAL_SOURCE, 3, 2, 2)


def umbilical_invariants(options: CountOptions | None = None) -> EquationInvariants:
    """Invariants of the umbilical equation mod 2, calibrated on real cylinders."""
    return equation_invariants(umbilical_equation(), options, field=Field.MOD2)


def umbilical_parity(
    gamma_s: CuspidalNumbers,
    options: CountOptions | None = None,
    invariants: EquationInvariants | None = None,
) -> int:
    """Parity of the number of umbilical points of a real surface."""
    invariants = invariants or umbilical_invariants(options)
    parity = degree_mod2(invariants, gamma_s)
    logger.info("umbilical parity for %s: %d", gamma_s.render(), parity)
    return parity


def parity_label(value: int) -> str:
    return "even" if value % 2 == 0 else "odd"
