"""Jet-chart coordinates x_i, y_j and y^j_alpha of an order-r chart."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Final

import sympy as sp

from jetcount.errors import ChartBoundsError

logger: Final = logging.getLogger(__name__)

# Jet names spell indices with single digits.
MAX_INDEX: Final = 9


@dataclass(frozen=True, order=True)
class JetIndex:
    """A dependent coordinate ``y^j_alpha``; ``alpha`` is a sorted multiset.

    Order 0 (empty ``alpha``) is the plain coordinate ``y_j``.
    """

    j: int
    alpha: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(sorted(self.alpha)))

    @property
    def order(self) -> int:
        return len(self.alpha)

    def raised(self, i: int) -> JetIndex:
        """The index of ``D_i`` applied to this coordinate."""
        return JetIndex(self.j, (*self.alpha, i))

    @property
    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.order, self.j, self.alpha)

    def canonical_name(self) -> str:
        if not self.alpha:
            return f"y{self.j}"
        return f"y{self.j}_" + "".join(str(i) for i in self.alpha)


def _curve_name(index: JetIndex) -> str:
    if index.order == 0:
        return "y"
    if index.order <= 3:
        return "y" + "'" * index.order
    return index.canonical_name()


@dataclass(frozen=True)
class JetChart:
    """The ordered coordinates of the chart ``U^r`` for (n, k, r).

    Variables are ordered x's first, then dependent coordinates by jet
    order, then by ``j``, then by ``alpha``.
    """

    n: int
    k: int
    r: int
    xs: tuple[sp.Symbol, ...] = field(repr=False)
    jets: tuple[tuple[JetIndex, sp.Symbol], ...] = field(repr=False)

    @property
    def codim(self) -> int:
        return self.n - self.k

    @property
    def is_curve(self) -> bool:
        """Plane-curve charts (2, 1, r) use the ``x, y, y', y''`` spelling."""
        return self.n == 2 and self.k == 1

    @cached_property
    def symbols(self) -> tuple[sp.Symbol, ...]:
        return self.xs + tuple(sym for _, sym in self.jets)

    @cached_property
    def _by_index(self) -> dict[JetIndex, sp.Symbol]:
        return dict(self.jets)

    @cached_property
    def _by_symbol(self) -> dict[sp.Symbol, JetIndex]:
        return {sym: idx for idx, sym in self.jets}

    @cached_property
    def _names(self) -> dict[str, sp.Symbol]:
        names: dict[str, sp.Symbol] = {str(s): s for s in self.symbols}
        for i, sym in enumerate(self.xs, start=1):
            names.setdefault(f"x{i}", sym)
        if self.k == 1:
            names.setdefault("x", self.xs[0])
        for idx, sym in self.jets:
            names.setdefault(idx.canonical_name(), sym)
            if self.codim == 1:
                suffix = "_" + "".join(str(i) for i in idx.alpha) if idx.alpha else ""
                names.setdefault(f"y{suffix}", sym)
        return names

    def x(self, i: int) -> sp.Symbol:
        """The independent coordinate ``x_i`` (1-based)."""
        if not 1 <= i <= self.k:
            raise ChartBoundsError(f"x index {i} outside 1..{self.k}")
        return self.xs[i - 1]

    def y(self, j: int, alpha: tuple[int, ...] = ()) -> sp.Symbol:
        """The dependent coordinate ``y^j_alpha``."""
        index = JetIndex(j, alpha)
        if index not in self._by_index:
            raise ChartBoundsError(
                f"jet {index.canonical_name()} not on chart ({self.n},{self.k},{self.r})"
            )
        return self._by_index[index]

    def jet_index(self, sym: sp.Symbol) -> JetIndex | None:
        """Index of a dependent coordinate; None for x's and foreign symbols."""
        return self._by_symbol.get(sym)

    def lookup(self, name: str) -> sp.Symbol | None:
        """Resolve a variable name or accepted alias."""
        return self._names.get(name)

    def jets_of_order(self, order: int) -> list[tuple[JetIndex, sp.Symbol]]:
        return [(idx, sym) for idx, sym in self.jets if idx.order == order]

    def order_of(self, symbols: set[sp.Symbol]) -> int:
        """Highest jet order among ``symbols`` (0 if none is a jet)."""
        orders = [self._by_symbol[s].order for s in symbols if s in self._by_symbol]
        return max(orders, default=0)

    def extend(self, r: int) -> JetChart:
        return chart_variables(self.n, self.k, r)

    @property
    def variable_count(self) -> int:
        return self.k + self.codim * sum(comb(self.k + s - 1, s) for s in range(self.r + 1))

    def describe(self) -> str:
        return f"U^{self.r}({self.n},{self.k}): " + ", ".join(str(s) for s in self.symbols)


@lru_cache(maxsize=64)
def chart_variables(n: int, k: int, r: int) -> JetChart:
    """Build the canonical chart for (n, k, r).

    Raises:
        ChartBoundsError: If ``1 <= k <= n-1`` or ``r >= 0`` fails, or an
            index would need more than one digit
    """
    if not 1 <= k <= n - 1 or r < 0:
        raise ChartBoundsError(f"invalid chart bounds n={n}, k={k}, r={r}")
    if k > MAX_INDEX or n - k > MAX_INDEX:
        raise ChartBoundsError(f"chart ({n},{k},{r}) needs multi-digit indices")
    curve = n == 2 and k == 1
    xs = (sp.Symbol("x"),) if curve else tuple(sp.Symbol(f"x{i}") for i in range(1, k + 1))
    indices = [
        JetIndex(j, alpha)
        for s in range(r + 1)
        for j in range(1, n - k + 1)
        for alpha in combinations_with_replacement(range(1, k + 1), s)
    ]
    indices.sort(key=lambda idx: idx.sort_key)
    jets = tuple(
        (idx, sp.Symbol(_curve_name(idx) if curve else idx.canonical_name())) for idx in indices
    )
    chart = JetChart(n, k, r, xs, jets)
    logger.debug("chart (%d,%d,%d) with %d variables", n, k, r, len(chart.symbols))
    return chart
