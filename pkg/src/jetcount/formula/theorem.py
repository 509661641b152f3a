"""Degree formulas pairing equation invariants with cuspidal numbers."""

from __future__ import annotations

import logging
from typing import Final

import sympy as sp

from jetcount.common.enums import Provenance, Smoothness
from jetcount.errors import AmbientMismatchError, MissingGenusError, UnknownEntryError
from jetcount.invariants.models import CuspidalNumbers, EquationInvariants, GammaEntry, Variety

logger: Final = logging.getLogger(__name__)


def _aligned(
    gamma_f: EquationInvariants, gamma_s: CuspidalNumbers, smoothness: Smoothness
) -> CuspidalNumbers:
    """Bring ``gamma_s`` to the length of ``gamma_f``.

    Extra trailing entries of ``gamma_s`` pair with implicit zeros in
    ``gamma_f`` and are dropped.
    """
    if len(gamma_s) >= len(gamma_f):
        return CuspidalNumbers(gamma_s.entries[: len(gamma_f)])
    return gamma_s.padded(len(gamma_f), smoothness)


def degree_by_theorem(
    gamma_f: EquationInvariants,
    gamma_s: CuspidalNumbers,
    smoothness: Smoothness = Smoothness.UNKNOWN,
    *,
    modulus: int | None = None,
) -> int:
    """``deg S(f) = sum_s gamma_s^f * gamma^s_S``.

    Args:
        gamma_f: Equation invariants ``gamma_0^f .. gamma_r^f``
        gamma_s: Cuspidal numbers; padded with zeros for smooth or normal varieties
        smoothness: Smoothness used for padding
        modulus: Reduce every product modulo this number

    Returns:
        The degree

    Raises:
        UnknownEntryError: If an unknown entry meets a nonzero partner
    """
    aligned = _aligned(gamma_f, gamma_s, smoothness)
    total = 0
    for s, (a, b) in enumerate(zip(gamma_f.values, aligned.values, strict=True)):
        a_zero = isinstance(a, int) and (a % modulus == 0 if modulus else a == 0)
        b_zero = isinstance(b, int) and (b % modulus == 0 if modulus else b == 0)
        if a_zero or b_zero:
            continue
        if not isinstance(a, int) or not isinstance(b, int):
            raise UnknownEntryError(
                f"entry {s} is unknown but its partner is nonzero",
                {"gamma_f": gamma_f.render(), "gamma_s": aligned.render()},
            )
        total += a * b
    if modulus:
        total %= modulus
    logger.debug("%s . %s = %d", gamma_f.render(), aligned.render(), total)
    return total


def surface_class(degree: int, genus: int | None, hypersurface: bool) -> int:
    """``2g - 2 + 2d``, or ``d(d-1)`` for smooth hypersurfaces."""
    if hypersurface:
        return degree * (degree - 1)
    if genus is None:
        raise MissingGenusError("the class of a smooth variety needs its sectional genus")
    return 2 * genus - 2 + 2 * degree


def degree_smooth(
    gamma_f: EquationInvariants, degree: int, genus: int | None = None, hypersurface: bool = False
) -> int:
    """Degree for a smooth variety from its degree and sectional genus."""
    numbers = smooth_cuspidal_numbers(degree, len(gamma_f), genus, hypersurface)
    return degree_by_theorem(gamma_f, numbers, Smoothness.SMOOTH)


def smooth_cuspidal_numbers(
    degree: int, length: int = 2, genus: int | None = None, hypersurface: bool = False
) -> CuspidalNumbers:
    """``(d, class, 0, ..., 0)`` with ``length`` entries."""
    entries = [
        GammaEntry(degree, Provenance.DEGREE),
        GammaEntry(surface_class(degree, genus, hypersurface), Provenance.FORMULA),
    ]
    numbers = CuspidalNumbers(tuple(entries[:length]))
    return numbers.padded(length, Smoothness.SMOOTH)


def parabolic_invariants(n: int) -> EquationInvariants:
    """Invariants of the Hessian equation of a hypersurface in P^n."""
    return EquationInvariants.from_values((-(n + 1), n + 1, n - 1), Provenance.FORMULA)


def parabolic_degree(
    n: int, gamma_s: CuspidalNumbers, smoothness: Smoothness = Smoothness.UNKNOWN
) -> int:
    """Number of parabolic points, counted as a degree, for a hypersurface in P^n."""
    return degree_by_theorem(parabolic_invariants(n), gamma_s, smoothness)


def parabolic_degree_smooth(n: int, degree: int) -> int:
    """``(n+1) d (d-2)`` for a smooth hypersurface of degree ``d``."""
    return (n + 1) * degree * (degree - 2)


def hessian_bezout_degree(variety: Variety) -> int:
    """``d * deg det(d^2 F / dX_a dX_b)`` for the homogeneous equation ``F``.

    A homogeneous count of ``F = 0`` against its Hessian, independent of
    the jet machinery.

    Raises:
        AmbientMismatchError: If ``variety`` is not a hypersurface
    """
    if not variety.is_hypersurface:
        raise AmbientMismatchError(f"{variety.label()} is not a hypersurface")
    g = variety.equation
    z = sp.Dummy("z")
    coords = (*g.gens, z)
    homogeneous = sp.Poly(g.expr, *g.gens).homogenize(z).as_expr()
    hessian = sp.hessian(homogeneous, coords).det(method="berkowitz")
    hessian = sp.expand(hessian)
    if hessian == 0:
        return 0
    return g.total_degree() * sp.Poly(hessian, *coords).total_degree()

