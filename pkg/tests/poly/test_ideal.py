from __future__ import annotations

import itertools
import math
import random

import pytest
import sympy as sp

from jetcount.common.enums import Marker, MonomialOrder
from jetcount.poly.ideal import (
    Ideal,
    contains,
    count_quotient_dimension,
    eliminate,
    groebner_basis,
    ideal_quotient,
    is_unit,
    is_zero_dimensional,
    local_multiplicity,
    same_ideal,
    saturate,
    saturation_dimension,
)
from jetcount.poly.polynomial import Polynomial
from jetcount.poly.resultant import resultant_bivariate, root_count
from jetcount.utils.sampling import SamplingUtils

x, y, t, u = sp.symbols("x y t u")


def ideal(*exprs: sp.Expr, gens: tuple[sp.Symbol, ...] = (x, y)) -> Ideal:
    return Ideal.of([Polynomial.from_expr(e, gens) for e in exprs], gens)


def _dense(rng: random.Random, d: int, gens: tuple[sp.Symbol, ...]) -> Polynomial:
    """Random polynomial of degree ``d`` with every monomial present."""
    expr = sp.Integer(0)
    for exponents in itertools.product(range(d + 1), repeat=len(gens)):
        if sum(exponents) <= d:
            term = sp.Integer(SamplingUtils.small_int(rng, 5, nonzero=True))
            for sym, e in zip(gens, exponents, strict=True):
                term *= sym**e
            expr += term
    return Polynomial.from_expr(expr, gens)


def test_basis_of_coordinate_ideal():
    assert groebner_basis(ideal(x, y), MonomialOrder.LEX) == [
        Polynomial.from_expr(x, (x, y)),
        Polynomial.from_expr(y, (x, y)),
    ]


def test_lex_elimination_of_circle_and_diagonal():
    basis = groebner_basis(ideal(x**2 + y**2 - 1, x - y), MonomialOrder.LEX)
    assert [p.normalized() for p in basis] == [
        Polynomial.from_expr(x - y, (x, y)),
        Polynomial.from_expr(2 * y**2 - 1, (x, y)),
    ]


def test_unit_ideal():
    unit = ideal(x, 1 - x)
    assert is_unit(unit)
    assert count_quotient_dimension(unit) == 0


def test_basis_ignores_generator_order():
    a = ideal(x**2 + y**2 - 1, x * y - 2)
    b = ideal(x * y - 2, x**2 + y**2 - 1)
    assert same_ideal(a, b)


def test_affine_counts_on_the_smooth_cubic():
    gens = (x, y, t)
    first = ideal(x**3 + y**2 - 1, 3 * x**2 + 2 * y * t, t, gens=gens)
    assert count_quotient_dimension(first) == 4
    gens2 = (x, y, t, u)
    second = ideal(
        x**3 + y**2 - 1, 3 * x**2 + 2 * y * t, 6 * x + 2 * t**2 + 2 * y * u, u, gens=gens2
    )
    assert count_quotient_dimension(second) == 8


def test_positive_dimensional_count():
    assert count_quotient_dimension(ideal(x)) is Marker.INFINITE
    assert not is_zero_dimensional(ideal(x))


def test_membership():
    circle = ideal(x**2 + y**2 - 1, x - y)
    assert contains(circle, Polynomial.from_expr(2 * y**2 - 1, (x, y)))
    assert not contains(circle, Polynomial.from_expr(y, (x, y)))


def test_saturation_removes_a_component():
    product = ideal(x * y)
    assert same_ideal(saturate(product, Polynomial.from_expr(x, (x, y))), ideal(y))
    assert same_ideal(
        saturate(product, Polynomial.from_expr(x, (x, y)), method="quotient"), ideal(y)
    )


def test_saturation_by_a_constant():
    base = ideal(x**2 - y)
    assert saturate(base, Polynomial.from_expr(3, (x, y))) == base


def test_cusp_prolongation_saturated_by_y():
    gens = (x, y, t)
    cusp = ideal(x**3 + y**2, 3 * x**2 + 2 * y * t, gens=gens)
    closure = saturate(cusp, Polynomial.from_expr(y, gens))
    # x = -(4/9) t^2 and y = -(8/27) t^3 parametrize the regular component
    for expr in (9 * x + 4 * t**2, 27 * y + 8 * t**3):
        assert contains(closure, Polynomial.from_expr(expr, gens))


def test_ideal_quotient():
    quotient = ideal_quotient(ideal(x**2 * y), Polynomial.from_expr(x, (x, y)))
    assert same_ideal(quotient, ideal(x * y))


def test_local_multiplicity_of_a_tangency():
    # the parabola y = x^2 meets the x-axis twice at the origin
    tangent = ideal(y - x**2, y)
    at = [Polynomial.from_expr(x, (x, y)), Polynomial.from_expr(y, (x, y))]
    assert local_multiplicity(tangent, at) == 2


def test_local_multiplicity_ignores_other_points():
    two_points = ideal(x**2 - 1, y)
    at = [Polynomial.from_expr(x - 1, (x, y)), Polynomial.from_expr(y, (x, y))]
    assert local_multiplicity(two_points, at) == 1


def test_saturation_dimension():
    # (x^2 - x) : x^inf leaves x = 1 only
    line_pair = ideal(x**2 - x, y)
    assert saturation_dimension(line_pair, Polynomial.from_expr(x, (x, y))) == 1


def test_local_multiplicity_at_a_node():
    # the line y = 2x through the node of y^2 = x^2 + x^3 meets it twice there
    nodal = ideal(y**2 - x**2 - x**3, y - 2 * x)
    at = [Polynomial.from_expr(x, (x, y)), Polynomial.from_expr(y, (x, y))]
    assert count_quotient_dimension(nodal) == 3
    assert local_multiplicity(nodal, at) == 2


def test_local_multiplicity_beside_a_positive_dimensional_component():
    # the line x = 0 is a component; the isolated point (1, 0) is simple
    mixed = ideal(x * y, x**2 - x)
    at = [Polynomial.from_expr(x - 1, (x, y)), Polynomial.from_expr(y, (x, y))]
    assert count_quotient_dimension(mixed) is Marker.INFINITE
    assert local_multiplicity(mixed, at) == 1


def test_eliminate_keeps_the_trailing_variables():
    eliminated = eliminate(ideal(x**2 + y**2 - 1, x - y), 1)
    assert eliminated.gens == (y,)
    assert same_ideal(eliminated, ideal(2 * y**2 - 1, gens=(y,)))


def test_eliminate_nothing_is_the_identity():
    circle = ideal(x**2 + y**2 - 1, x - y)
    assert same_ideal(eliminate(circle, 0), circle)


@pytest.mark.parametrize("seed", range(10))
def test_saturation_is_idempotent(seed: int):
    rng = SamplingUtils.rng(f"saturate:{seed}")
    a, b = _dense(rng, 2, (x, y)), _dense(rng, 1, (x, y))
    g = Polynomial.from_expr(SamplingUtils.linear_form(rng, (x, y), 3), (x, y))
    # g divides both generators, so its line is a component to remove
    start = Ideal.of([a * g, b * g])
    once = saturate(start, g)
    assert same_ideal(saturate(once, g), once)
    assert not contains(once, g)


def test_resultant_examples():
    p = Polynomial.from_expr(x**2 - 2, (x, y))
    q = Polynomial.from_expr(x - y, (x, y))
    assert resultant_bivariate(p, q, x) == Polynomial.from_expr(y**2 - 2, (x, y))
    assert resultant_bivariate(p, p, x).is_zero


_ORACLE_DEGREES = [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (1, 4), (3, 3), (2, 4)]


@pytest.mark.parametrize("seed", range(50))
def test_groebner_count_matches_resultant_oracle(seed: int):
    rng = SamplingUtils.rng(f"bivariate:{seed}")
    a, b = _ORACLE_DEGREES[seed % len(_ORACLE_DEGREES)]
    p, q = _dense(rng, a, (x, y)), _dense(rng, b, (x, y))
    count = count_quotient_dimension(Ideal.of([p, q]))
    eliminant = resultant_bivariate(p, q, x)
    if count is Marker.INFINITE or eliminant.is_zero:
        pytest.skip("degenerate draw")
    # x^a and x^b have constant coefficients, so every root of the eliminant
    # is the y-coordinate of an affine solution, with multiplicity
    assert count == root_count(eliminant, y)


@pytest.mark.parametrize(
    "degrees",
    [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (1, 1, 1), (1, 2, 2), (1, 1, 3), (2, 2, 2)],
)
def test_bezout_for_generic_systems(degrees: tuple[int, ...]):
    gens = (x, y, u)[: len(degrees)]
    rng = SamplingUtils.rng(f"bezout:{degrees}")
    polys = [_dense(rng, d, gens) for d in degrees]
    assert count_quotient_dimension(Ideal.of(polys, gens)) == math.prod(degrees)
