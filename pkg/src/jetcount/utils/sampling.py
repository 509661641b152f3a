# src/jetcount/utils/sampling.py
"""Seeded generic choices: rational coefficients, linear forms and matrices."""

from __future__ import annotations

import random
from collections.abc import Sequence

import sympy as sp


class SamplingUtils:
    """Reproducible random choices used wherever a generic object is needed.

    Every generic choice in the package (hyperplane sections, projections,
    changes of reference) is drawn through these helpers from a
    ``random.Random`` seeded by the job, so reports are deterministic.
    """

    @staticmethod
    def rng(seed: int | str) -> random.Random:
        """Create a dedicated generator for ``seed``.

        String seeds such as ``"7:reference"`` give independent, reproducible
        streams per operation.
        """
        return random.Random(seed)

    @staticmethod
    def small_int(rng: random.Random, bound: int, *, nonzero: bool = False) -> int:
        """Draw an integer in ``[-bound, bound]``.

        Args:
            rng: Source of randomness
            bound: Absolute bound
            nonzero: Reject zero

        Returns:
            The drawn integer
        """
        while True:
            value = rng.randint(-bound, bound)
            if value or not nonzero:
                return value

    @staticmethod
    def rational(rng: random.Random, bound: int) -> sp.Rational:
        """Draw a rational p/q with ``|p| <= bound`` and ``1 <= q <= bound``."""
        return sp.Rational(rng.randint(-bound, bound), rng.randint(1, max(bound, 1)))

    @staticmethod
    def linear_form(
        rng: random.Random, symbols: Sequence[sp.Symbol], bound: int, *, constant: bool = True
    ) -> sp.Expr:
        """Random affine-linear form in ``symbols``.

        Args:
            rng: Source of randomness
            symbols: Variables of the form
            bound: Coefficient bound
            constant: Include a random constant term

        Returns:
            The form as a sympy expression
        """
        form: sp.Expr = sp.Integer(0)
        for sym in symbols:
            form += SamplingUtils.small_int(rng, bound, nonzero=True) * sym
        if constant:
            form += SamplingUtils.small_int(rng, bound)
        return form

    @staticmethod
    def invertible_matrix(rng: random.Random, size: int, bound: int) -> sp.ImmutableMatrix:
        """Random integer matrix with nonzero determinant."""
        while True:
            matrix = sp.ImmutableMatrix(
                size, size, lambda _i, _j: SamplingUtils.small_int(rng, bound)
            )
            if matrix.det() != 0:
                return matrix
