from __future__ import annotations

import pytest
import sympy as sp

from jetcount.errors import ChartBoundsError, DegenerateTransformationError
from jetcount.jets.chart import JetChart, JetIndex, chart_variables
from jetcount.jets.derivative import prolong_ideal, total_derivative
from jetcount.jets.transform import PointTransformation, prolong_transformation
from jetcount.parsing.parser import parse_expression
from jetcount.poly.ideal import Ideal, count_quotient_dimension, local_multiplicity, same_ideal
from jetcount.poly.polynomial import Polynomial
from jetcount.utils.sampling import SamplingUtils


# ── charts ───────────────────────────────────────────────────────────────────
def test_curve_chart_names():
    chart = chart_variables(2, 1, 2)
    assert [str(s) for s in chart.symbols] == ["x", "y", "y'", "y''"]


def test_surface_chart_layout():
    chart = chart_variables(3, 2, 2)
    assert [str(s) for s in chart.symbols] == [
        "x1",
        "x2",
        "y1",
        "y1_1",
        "y1_2",
        "y1_11",
        "y1_12",
        "y1_22",
    ]
    assert chart.variable_count == 8


def test_order_zero_chart():
    chart = chart_variables(4, 2, 0)
    assert [str(s) for s in chart.symbols] == ["x1", "x2", "y1", "y2"]


@pytest.mark.parametrize(("n", "k", "r"), [(2, 2, 1), (3, 0, 1), (2, 1, -1), (12, 1, 0)])
def test_chart_bounds(n: int, k: int, r: int):
    with pytest.raises(ChartBoundsError):
        chart_variables(n, k, r)


def test_symmetric_jet_indices():
    chart = chart_variables(3, 2, 2)
    assert chart.y(1, (2, 1)) == chart.y(1, (1, 2))
    assert JetIndex(1, (2, 1)).canonical_name() == "y1_12"
    with pytest.raises(ChartBoundsError):
        chart.y(1, (1, 1, 1))


# ── total derivatives ────────────────────────────────────────────────────────
def test_total_derivatives_of_the_cubic():
    chart0 = chart_variables(2, 1, 0)
    chart1 = chart_variables(2, 1, 1)
    g = parse_expression("x^3 + y^2 - 1", chart0)
    first = total_derivative(g, 1, chart0)
    assert first == parse_expression("3*x^2 + 2*y*y'", chart1)
    second = total_derivative(first, 1, chart1)
    assert second == parse_expression("6*x + 2*y'^2 + 2*y*y''", chart_variables(2, 1, 2))


def test_total_derivative_of_a_constant():
    chart = chart_variables(2, 1, 0)
    assert total_derivative(Polynomial.from_expr(5, chart.symbols), 1, chart).is_zero


def test_prolongation_of_the_cubic():
    chart = chart_variables(2, 1, 2)
    g = parse_expression("x^3 + y^2 - 1", chart_variables(2, 1, 0))
    expected = Ideal.of(
        [
            parse_expression(text, chart)
            for text in ("x^3 + y^2 - 1", "3*x^2 + 2*y*y'", "6*x + 2*y'^2 + 2*y*y''")
        ]
    )
    assert same_ideal(prolong_ideal([g], chart), expected)
    assert prolong_ideal([g], chart_variables(2, 1, 0)).generators == (g,)


def _random_surface_polynomial(seed: int) -> Polynomial:
    chart = chart_variables(3, 2, 1)
    rng = SamplingUtils.rng(f"leibniz:{seed}")
    expr = sp.Integer(0)
    for _ in range(3):
        term = sp.Integer(SamplingUtils.small_int(rng, 3, nonzero=True))
        for sym in chart.symbols:
            term *= sym ** rng.randint(0, 2)
        expr += term
    return Polynomial.from_expr(sp.expand(expr), chart.symbols)


@pytest.mark.parametrize("seed", range(200))
def test_total_derivatives_commute(seed: int):
    chart = chart_variables(3, 2, 1)
    p = _random_surface_polynomial(seed)
    one_two = total_derivative(total_derivative(p, 1, chart), 2, chart.extend(2))
    two_one = total_derivative(total_derivative(p, 2, chart), 1, chart.extend(2))
    assert one_two == two_one


@pytest.mark.parametrize("seed", range(200))
def test_leibniz_rule(seed: int):
    chart = chart_variables(3, 2, 1)
    p, q = _random_surface_polynomial(2 * seed), _random_surface_polynomial(2 * seed + 1)
    target = chart.extend(2).symbols
    lhs = total_derivative(p * q, 1, chart)
    rhs = total_derivative(p, 1, chart) * q.lift(target) + p.lift(target) * total_derivative(
        q, 1, chart
    )
    assert lhs == rhs


def _along_graph(p: Polynomial, chart: JetChart, phi: sp.Expr) -> sp.Expr:
    """Evaluate ``p`` on the jets of the graph ``y = phi(x)``."""
    values = {
        sym: sp.diff(phi, *(chart.x(i) for i in index.alpha)) if index.alpha else phi
        for index, sym in chart.jets
    }
    return sp.expand(p.expr.xreplace(values))


@pytest.mark.parametrize("seed", range(50))
def test_total_derivative_follows_the_chain_rule(seed: int):
    chart = chart_variables(3, 2, 1)
    p = _random_surface_polynomial(1000 + seed)
    rng = SamplingUtils.rng(f"graph:{seed}")
    x1, x2 = chart.x(1), chart.x(2)
    phi = sum(
        SamplingUtils.small_int(rng, 3) * x1**a * x2**b for a in range(3) for b in range(3 - a)
    )
    for i in (1, 2):
        lhs = _along_graph(total_derivative(p, i, chart), chart.extend(2), phi)
        rhs = sp.diff(_along_graph(p, chart, phi), chart.x(i))
        assert sp.expand(lhs - rhs) == 0


# ── changes of reference ─────────────────────────────────────────────────────
def test_identity_reference_keeps_the_equation():
    chart = chart_variables(2, 1, 2)
    f = parse_expression("y'' + x*y'", chart)
    assert prolong_transformation(PointTransformation.identity(), f, chart) == f.normalized()


def test_swap_inverts_the_slope():
    chart = chart_variables(2, 1, 1)
    f = parse_expression("y' - 2", chart)
    transformed = prolong_transformation(PointTransformation.swap(), f, chart)
    assert transformed == parse_expression("2*y' - 1", chart)


def test_singular_reference_is_rejected():
    with pytest.raises(DegenerateTransformationError):
        PointTransformation.from_matrix([[1, 0, 0], [1, 0, 0], [0, 0, 1]])


def test_curve_transform_to_infinity():
    chart = chart_variables(2, 1, 0)
    g = parse_expression("x^3 + y^2 - 1", chart)
    moved = PointTransformation.at_infinity().transform_curve(g, chart)
    assert moved == parse_expression("x^3 + y - y^3", chart)


def test_point_at_infinity_has_multiplicity_two_for_the_slope():
    chart = chart_variables(2, 1, 1)
    reference = PointTransformation.at_infinity()
    g = parse_expression("x^3 + y^2 - 1", chart_variables(2, 1, 0))
    moved = reference.transform_curve(g, chart_variables(2, 1, 0))
    f = prolong_transformation(reference, parse_expression("y'", chart), chart)
    system = prolong_ideal([moved], chart) + [f]
    x, y = chart.symbols[0], chart.symbols[1]
    at = [Polynomial.from_expr(x, chart.symbols), Polynomial.from_expr(y, chart.symbols)]
    assert local_multiplicity(system, at) == 2
    assert count_quotient_dimension(system) != 0


def test_references_are_only_for_plane_curves():
    chart = chart_variables(3, 2, 1)
    f = parse_expression("y1_1", chart)
    with pytest.raises(ChartBoundsError):
        prolong_transformation(PointTransformation.identity(), f, chart)


@pytest.mark.parametrize("seed", range(20))
def test_reference_and_its_inverse_restore_the_equation(seed: int):
    chart = chart_variables(2, 1, 1)
    rng = SamplingUtils.rng(f"reference:{seed}")
    reference = PointTransformation.random(rng, 3)
    x, y, slope = chart.symbols
    expr = (
        SamplingUtils.small_int(rng, 3, nonzero=True) * slope**2
        + SamplingUtils.linear_form(rng, (x, y), 3) * slope
        + SamplingUtils.linear_form(rng, (x, y), 3)
    )
    f = Polynomial.from_expr(sp.expand(expr), chart.symbols)
    moved = prolong_transformation(reference, f, chart)
    assert prolong_transformation(reference.inverted(), moved, chart) == f.normalized()
