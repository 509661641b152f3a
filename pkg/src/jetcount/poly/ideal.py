"""Polynomial ideals and the elimination toolkit built on Groebner bases."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from operator import itemgetter
from typing import Final, Literal

import sympy as sp
from sympy.polys.orderings import ProductOrder, grevlex

from jetcount.common.enums import Field, Marker, MonomialOrder
from jetcount.errors import AmbientMismatchError, PolynomialZeroDivisionError
from jetcount.poly.polynomial import Monomial, Polynomial

logger: Final = logging.getLogger(__name__)

Count = int | Marker

# Local multiplicities stabilize long before this on desk-scale input.
MAX_POWER: Final = 64

# Auxiliary variable for saturations; fixed so repeated calls share cached bases.
_T: Final = sp.Dummy("t")


@dataclass(frozen=True)
class Ideal:
    """An ideal given by nonzero generators in a fixed ambient ring."""

    generators: tuple[Polynomial, ...]
    gens: tuple[sp.Symbol, ...]
    field: Field = Field.RATIONALS

    @classmethod
    def of(
        cls,
        generators: Iterable[Polynomial],
        gens: Sequence[sp.Symbol] | None = None,
        field: Field | None = None,
    ) -> Ideal:
        """Build an ideal, dropping zero generators.

        Args:
            generators: Generating polynomials
            gens: Ambient ring variables (taken from the generators if omitted)
            field: Coefficient field (taken from the generators if omitted)

        Returns:
            The ideal

        Raises:
            AmbientMismatchError: If the generators disagree on their ring
        """
        polys = list(generators)
        if gens is None:
            if not polys:
                raise ValueError("an empty ideal needs an explicit ambient ring")
            gens = polys[0].gens
        if field is None:
            field = polys[0].field if polys else Field.RATIONALS
        ambient = tuple(gens)
        for p in polys:
            if p.gens != ambient or p.field is not field:
                raise AmbientMismatchError(
                    "generator outside the ideal's ring",
                    {"generator": p.to_text(), "ambient": [str(g) for g in ambient]},
                )
        return cls(tuple(p for p in polys if not p.is_zero), ambient, field)

    def __add__(self, other: Ideal | Iterable[Polynomial]) -> Ideal:
        extra = other.generators if isinstance(other, Ideal) else tuple(other)
        return Ideal.of((*self.generators, *extra), self.gens, self.field)

    def lift(self, gens: Sequence[sp.Symbol]) -> Ideal:
        """The extension of this ideal to a ring with more variables."""
        return Ideal.of((p.lift(gens) for p in self.generators), gens, self.field)

    def polynomial(self, expr: sp.Expr | int) -> Polynomial:
        """Build a polynomial in this ideal's ring."""
        return Polynomial.from_expr(expr, self.gens, self.field)

    def to_text(self) -> str:
        return "<" + ", ".join(p.to_text() for p in self.generators) + ">"


# ── Groebner bases ───────────────────────────────────────────────────────────
def _monomial_order(order: str, block: int) -> str | ProductOrder:
    if order != MonomialOrder.ELIMINATION.value:
        return order
    return ProductOrder(
        (grevlex, itemgetter(slice(0, block))), (grevlex, itemgetter(slice(block, None)))
    )


@lru_cache(maxsize=4096)
def _groebner(
    exprs: tuple[sp.Expr, ...],
    gens: tuple[sp.Symbol, ...],
    order: str,
    field: Field,
    block: int = 0,
) -> sp.GroebnerBasis:
    basis = sp.groebner(
        list(exprs),
        *gens,
        order=_monomial_order(order, block),
        domain=field.domain,
        method="buchberger",
    )
    logger.debug("groebner(%s): %d generators -> %d elements", order, len(exprs), len(basis.exprs))
    return basis


def _basis_object(ideal: Ideal, order: MonomialOrder, block: int = 0) -> sp.GroebnerBasis:
    exprs = tuple(p.expr for p in ideal.generators)
    return _groebner(exprs, ideal.gens, order.value, ideal.field, block)


def groebner_basis(
    ideal: Ideal, order: MonomialOrder = MonomialOrder.GREVLEX, block: int = 0
) -> list[Polynomial]:
    """Reduced Groebner basis of ``ideal``.

    The basis is canonical for a fixed order, so permuting the generators
    does not change it. The unit ideal yields ``[1]`` and the zero ideal
    an empty list. ``block`` is the number of leading variables eliminated
    by ``MonomialOrder.ELIMINATION`` and is ignored by the other orders.
    """
    if not ideal.generators:
        return []
    basis = _basis_object(ideal, order, block)
    return [Polynomial.from_expr(e, ideal.gens, ideal.field) for e in basis.exprs]


def eliminate(ideal: Ideal, block: int) -> Ideal:
    """Intersection of ``ideal`` with the ring of its trailing variables.

    The first ``block`` variables are eliminated with a block order, grevlex
    inside each block; the result lives on the remaining variables.
    """
    remaining = ideal.gens[block:]
    dropped = set(ideal.gens[:block])
    basis = groebner_basis(ideal, MonomialOrder.ELIMINATION, block)
    kept = [p for p in basis if not p.variables() & dropped]
    logger.debug("eliminated %d variables: %d of %d elements kept", block, len(kept), len(basis))
    return Ideal.of((p.lift(remaining) for p in kept), remaining, ideal.field)


def leading_monomial(p: Polynomial, order: MonomialOrder = MonomialOrder.GREVLEX) -> Monomial:
    return tuple(p.poly.monoms(order=order.value)[0])


def is_unit(ideal: Ideal) -> bool:
    basis = groebner_basis(ideal)
    return len(basis) == 1 and basis[0].is_constant


def contains(ideal: Ideal, p: Polynomial) -> bool:
    """Ideal membership by reduction modulo the grevlex basis."""
    if p.is_zero:
        return True
    if not ideal.generators:
        return False
    return bool(_basis_object(ideal, MonomialOrder.GREVLEX).contains(p.expr))


def same_ideal(a: Ideal, b: Ideal) -> bool:
    return groebner_basis(a) == groebner_basis(b)


# ── counting ─────────────────────────────────────────────────────────────────
def count_quotient_dimension(ideal: Ideal) -> Count:
    """Vector-space dimension of the quotient ring.

    Counts the standard monomials of the grevlex basis. For a
    zero-dimensional ideal this is the number of solutions counted with
    multiplicity.

    Returns:
        The dimension, or ``Marker.INFINITE`` when the staircase is unbounded
    """
    basis = groebner_basis(ideal)
    if not basis:
        return Marker.INFINITE if ideal.gens else 1
    leads = [leading_monomial(p) for p in basis]
    if any(not any(m) for m in leads):
        return 0
    nvars = len(ideal.gens)
    for i in range(nvars):
        if not any(m[i] > 0 and all(e == 0 for j, e in enumerate(m) if j != i) for m in leads):
            return Marker.INFINITE

    def standard(m: Monomial) -> bool:
        return not any(all(a >= b for a, b in zip(m, lead, strict=True)) for lead in leads)

    origin: Monomial = (0,) * nvars
    seen: set[Monomial] = {origin}
    stack = [origin]
    while stack:
        current = stack.pop()
        for i in range(nvars):
            step = current[:i] + (current[i] + 1,) + current[i + 1 :]
            if step not in seen and standard(step):
                seen.add(step)
                stack.append(step)
    logger.debug("quotient dimension %d over %d variables", len(seen), nvars)
    return len(seen)


def is_zero_dimensional(ideal: Ideal) -> bool:
    return count_quotient_dimension(ideal) is not Marker.INFINITE


def local_multiplicity(ideal: Ideal, at: Sequence[Polynomial]) -> Count:
    """Total multiplicity of ``ideal`` at the common zeros of ``at``.

    For a zero-dimensional ideal the multiplicity is read off by
    inclusion-exclusion over the products of the ``at`` generators:
    ``sum (-1)^|S| dim R/(I : prod(S)^inf)``, each term counting the
    solutions where the product does not vanish. Ideals with components of
    positive dimension elsewhere fall back to the stable value of
    ``dim R/(I + J^N)`` for ``J = <at>``.

    Args:
        ideal: An ideal, zero-dimensional near the zeros of ``at``
        at: Generators of the locus to localize at

    Returns:
        The multiplicity, or ``Marker.INFINITE`` if the ideal is not
        zero-dimensional there
    """
    total = count_quotient_dimension(ideal)
    if isinstance(total, Marker):
        return _multiplicity_by_powers(ideal, at)
    value = total
    for size in range(1, len(at) + 1):
        for subset in combinations(at, size):
            away = saturation_dimension(ideal, _product(subset, ideal))
            if isinstance(away, Marker):
                return _multiplicity_by_powers(ideal, at)
            value += (-1) ** size * away
    logger.debug("local multiplicity %d of %d", value, total)
    return value


def _multiplicity_by_powers(ideal: Ideal, at: Sequence[Polynomial]) -> Count:
    previous: Count | None = None
    for power in range(1, MAX_POWER + 1):
        products = [
            _product(combo, ideal) for combo in combinations_with_replacement(at, power)
        ]
        current = count_quotient_dimension(ideal + products)
        if current is Marker.INFINITE:
            return Marker.INFINITE
        if previous == current:
            logger.debug("local multiplicity %s stable at power %d", current, power)
            return current
        previous = current
    logger.warning("local multiplicity did not stabilize within power %d", MAX_POWER)
    return Marker.INFINITE


def _product(factors: Sequence[Polynomial], ideal: Ideal) -> Polynomial:
    result = ideal.polynomial(1)
    for f in factors:
        result = result * f
    return result


# ── saturation ───────────────────────────────────────────────────────────────
SaturationMethod = Literal["rabinowitsch", "quotient"]


def saturate(ideal: Ideal, g: Polynomial, method: SaturationMethod = "rabinowitsch") -> Ideal:
    """Compute ``I : g^inf``.

    Args:
        ideal: The ideal ``I``
        g: Nonzero polynomial in the same ring
        method: ``"rabinowitsch"`` appends ``t*g - 1`` and eliminates ``t``
            with a block order; ``"quotient"`` iterates ideal quotients
            until stable

    Returns:
        The saturated ideal, given by its grevlex basis

    Raises:
        PolynomialZeroDivisionError: If ``g`` is zero
    """
    if g.is_zero:
        raise PolynomialZeroDivisionError("cannot saturate by the zero polynomial")
    if g.is_constant or not ideal.generators:
        return ideal
    if method == "quotient":
        current = ideal
        while True:
            following = ideal_quotient(current, g)
            if same_ideal(following, current):
                return following
            current = following
    t = _auxiliary(ideal)
    ring = (t, *ideal.gens)
    extended = ideal.lift(ring) + [Polynomial.from_expr(t * g.expr - 1, ring, ideal.field)]
    result = Ideal.of(groebner_basis(eliminate(extended, 1)), ideal.gens, ideal.field)
    logger.debug("saturate %s by %s -> %s", ideal.to_text(), g.to_text(), result.to_text())
    return result


def ideal_quotient(ideal: Ideal, g: Polynomial) -> Ideal:
    """``I : g`` via the intersection ``I ∩ <g>`` divided by ``g``."""
    t = sp.Dummy("t")
    ring = (t, *ideal.gens)
    tt = Polynomial.from_expr(t, ring, ideal.field)
    mixed = [tt * p.lift(ring) for p in ideal.generators] + [(1 - tt) * g.lift(ring)]
    intersection = eliminate(Ideal.of(mixed, ring, ideal.field), 1)
    quotients = [p.exact_divide(g) for p in intersection.generators]
    return Ideal.of(quotients, ideal.gens, ideal.field)


def saturation_dimension(ideal: Ideal, g: Polynomial) -> Count:
    """``dim R/(I : g^inf)`` computed as ``dim R[t]/(I + <t*g - 1>)``."""
    t = _auxiliary(ideal)
    ring = (*ideal.gens, t)
    extended = ideal.lift(ring) + [Polynomial.from_expr(t * g.expr - 1, ring, ideal.field)]
    return count_quotient_dimension(extended)
