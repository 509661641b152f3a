"""Sylvester resultants, used as an independent counting oracle."""

from __future__ import annotations

import logging
from typing import Final

import sympy as sp
from sympy.polys.subresultants_qq_zz import sylvester

from jetcount.errors import DegenerateResultantError
from jetcount.poly.polynomial import Polynomial

logger: Final = logging.getLogger(__name__)


def resultant_bivariate(p: Polynomial, q: Polynomial, var: sp.Symbol) -> Polynomial:
    """Resultant of ``p`` and ``q`` with respect to ``var``.

    Computed as the determinant of the Sylvester matrix; the result lives
    in the same ring as the inputs and no longer involves ``var``.

    Raises:
        DegenerateResultantError: If either input is constant in ``var``
    """
    if p.degree(var) < 1 or q.degree(var) < 1:
        raise DegenerateResultantError(
            f"resultant in {var} needs positive degree on both sides",
            {"p": p.to_text(), "q": q.to_text()},
        )
    matrix = sylvester(p.expr, q.expr, var, 1)
    value = sp.expand(matrix.det(method="berkowitz"))
    return Polynomial.from_expr(value, p.gens, p.field)


def root_count(p: Polynomial, var: sp.Symbol) -> int:
    """Number of roots in ``var`` counted with multiplicity.

    Uses the square-free decomposition; the zero polynomial counts as 0.
    """
    if p.is_zero:
        return 0
    _, factors = sp.sqf_list(p.expr, var)
    return sum(int(sp.degree(f, var)) * mult for f, mult in factors)
