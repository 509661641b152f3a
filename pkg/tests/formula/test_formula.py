from __future__ import annotations

import pytest

from jetcount.common.enums import Marker, Smoothness
from jetcount.counting.measure import measure_degree
from jetcount.counting.models import CountOptions
from jetcount.errors import AmbientMismatchError, MissingGenusError, UnknownEntryError
from jetcount.formula.real import (
    degree_mod2,
    parity_label,
    umbilical_invariants,
    umbilical_parity,
)
from jetcount.formula.theorem import (
    degree_by_theorem,
    degree_smooth,
    hessian_bezout_degree,
    parabolic_degree,
    parabolic_degree_smooth,
    parabolic_invariants,
    smooth_cuspidal_numbers,
    surface_class,
)
from jetcount.invariants.models import (
    CuspidalNumbers,
    DifferentialEquation,
    EquationInvariants,
    Variety,
)
from jetcount.invariants.variety import detect_smoothness
from jetcount.utils.sampling import SamplingUtils


def gamma_f(*values: int | Marker) -> EquationInvariants:
    return EquationInvariants.from_values(values)


def gamma_s(*values: int | Marker) -> CuspidalNumbers:
    return CuspidalNumbers.from_values(values)


# ── integer formula ──────────────────────────────────────────────────────────
@pytest.mark.parametrize(
    ("invariants", "numbers", "expected"),
    [
        ((0, 1), (3, 6), 6),
        ((-3, 3, 1), (3, 6, 0), 9),
        ((0, 1), (3, 3), 3),
        ((-3, 3, 1), (3, 3, 1), 1),
        ((-4, 4, 2), (3, 6, 0), 12),
    ],
)
def test_worked_degrees(
    invariants: tuple[int, ...], numbers: tuple[int, ...], expected: int
):
    assert degree_by_theorem(gamma_f(*invariants), gamma_s(*numbers)) == expected


def test_smooth_varieties_are_padded_with_zeros():
    assert degree_by_theorem(gamma_f(-3, 3, 1), gamma_s(3, 6), Smoothness.SMOOTH) == 9


def test_extra_cuspidal_entries_are_ignored():
    assert degree_by_theorem(gamma_f(0, 1), gamma_s(3, 6, 4)) == 6


def test_unknown_entry_against_zero_partner():
    assert degree_by_theorem(gamma_f(0, 1, Marker.UNKNOWN), gamma_s(3, 6, 0)) == 6


def test_unknown_entry_against_nonzero_partner():
    with pytest.raises(UnknownEntryError):
        degree_by_theorem(gamma_f(-3, 3, 1), gamma_s(3, 3), Smoothness.SINGULAR)


def test_class_formulas():
    assert surface_class(3, None, hypersurface=True) == 6
    assert surface_class(3, 1, hypersurface=False) == 6
    assert surface_class(4, 0, hypersurface=False) == 6
    with pytest.raises(MissingGenusError):
        surface_class(3, None, hypersurface=False)


def test_smooth_cuspidal_numbers():
    assert smooth_cuspidal_numbers(3, 3, hypersurface=True).values == (3, 6, 0)
    assert smooth_cuspidal_numbers(2, 1, hypersurface=True).values == (2,)
    assert degree_smooth(gamma_f(-3, 3, 1), 3, hypersurface=True) == 9


@pytest.mark.parametrize("seed", range(50))
def test_theorem_is_linear_in_both_arguments(seed: int):
    rng = SamplingUtils.rng(f"linear:{seed}")
    length = rng.randint(1, 5)

    def draw() -> list[int]:
        return [SamplingUtils.small_int(rng, 9) for _ in range(length)]

    f, g, s, t = draw(), draw(), draw(), draw()
    a, b = SamplingUtils.small_int(rng, 4), SamplingUtils.small_int(rng, 4)
    combined_s = gamma_s(*(a * u + b * v for u, v in zip(s, t, strict=True)))
    combined_f = gamma_f(*(a * u + b * v for u, v in zip(f, g, strict=True)))
    assert degree_by_theorem(gamma_f(*f), combined_s) == a * degree_by_theorem(
        gamma_f(*f), gamma_s(*s)
    ) + b * degree_by_theorem(gamma_f(*f), gamma_s(*t))
    assert degree_by_theorem(combined_f, gamma_s(*s)) == a * degree_by_theorem(
        gamma_f(*f), gamma_s(*s)
    ) + b * degree_by_theorem(gamma_f(*g), gamma_s(*s))


# ── parabolic points ─────────────────────────────────────────────────────────
@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("d", [2, 3, 4])
def test_parabolic_degree_agrees_with_the_closed_form(n: int, d: int):
    numbers = smooth_cuspidal_numbers(d, 3, hypersurface=True)
    assert parabolic_degree(n, numbers, Smoothness.SMOOTH) == parabolic_degree_smooth(n, d)


def test_parabolic_invariants():
    assert parabolic_invariants(3).values == (-4, 4, 2)
    assert parabolic_invariants(4).values == (-5, 5, 3)


@pytest.mark.parametrize(
    ("source", "d"),
    [
        ("x1^2 + x2^2 + y^2 + 1", 2),
        ("x1^3 + x2^3 + y^2 + 1", 3),
        # every parabolic component of this quartic is affine and off y = 0
        pytest.param("x1^4 + x2^4 + y^4 + y^2 + 1", 4, marks=pytest.mark.slow),
    ],
)
def test_measured_parabolic_degree(source: str, d: int, options: CountOptions):
    surface = Variety.parse([source], 3, 2, Smoothness.UNKNOWN)
    assert detect_smoothness(surface) is Smoothness.SMOOTH
    hessian = DifferentialEquation.parse("hessdet(y1)", 3, 2, 2)
    measured = measure_degree(surface.with_smoothness(Smoothness.SMOOTH), hessian, options).total
    numbers = smooth_cuspidal_numbers(d, 3, hypersurface=True)
    assert measured == parabolic_degree(3, numbers, Smoothness.SMOOTH)
    assert measured == parabolic_degree_smooth(3, d)


def test_hessian_bezout_count_of_a_cubic_surface():
    cubic = Variety.parse(["x1^3 + x2^3 + y^2 + 1"], 3, 2, Smoothness.SMOOTH)
    assert hessian_bezout_degree(cubic) == 12
    assert parabolic_degree_smooth(3, 3) == 12


def test_hessian_bezout_count_of_a_quadric():
    # the Hessian of a nondegenerate quadratic form is a nonzero constant
    quadric = Variety.parse(["x1^2 + x2^2 + y^2 + 1"], 3, 2, Smoothness.SMOOTH)
    assert hessian_bezout_degree(quadric) == 0


def test_hessian_bezout_needs_a_hypersurface():
    twisted = Variety.parse(["y1 - x1^2", "y2 - x1^3"], 3, 1)
    with pytest.raises(AmbientMismatchError):
        hessian_bezout_degree(twisted)


# ── real varieties ───────────────────────────────────────────────────────────
def test_degree_mod2():
    assert degree_mod2(gamma_f(-3, 3, 1), gamma_s(3, 3, 1)) == 1
    assert degree_mod2(gamma_f(-3, 3, 1), gamma_s(3, 6, 0)) == 1
    assert degree_mod2(gamma_f(0, 1), gamma_s(3, 6)) == 0


def test_mod2_ignores_unknown_entries_with_even_partners():
    assert degree_mod2(gamma_f(Marker.UNKNOWN, 1), gamma_s(2, 3)) == 1


def test_umbilical_invariants_are_even(options: CountOptions):
    assert umbilical_invariants(options).values == (0, 0, 0)


@pytest.mark.parametrize("numbers", [(2, 2, 0), (3, 6, 0), (1, 1, Marker.UNKNOWN)])
def test_umbilics_come_in_pairs(numbers: tuple[int | Marker, ...], options: CountOptions):
    invariants = umbilical_invariants(options)
    parity = umbilical_parity(gamma_s(*numbers), invariants=invariants)
    assert parity_label(parity) == "even"


def test_parity_labels():
    assert parity_label(0) == "even"
    assert parity_label(3) == "odd"
