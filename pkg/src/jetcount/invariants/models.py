"""Domain models: differential equations, varieties and gamma vectors."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Self

from jetcount.common.enums import Field, Marker, Provenance, Smoothness
from jetcount.errors import AmbientMismatchError, ConstantEquationError, LengthMismatchError
from jetcount.jets.chart import JetChart, chart_variables
from jetcount.parsing.parser import parse_expression
from jetcount.poly.polynomial import Polynomial

Value = int | Marker


# ─────────────────────────── equations and varieties ─────────────────────────


@dataclass(frozen=True)
class DifferentialEquation:
    """A nonzero polynomial on the chart of the smallest order that holds it."""

    chart: JetChart
    f: Polynomial

    def __post_init__(self) -> None:
        if self.f.gens != self.chart.symbols:
            raise AmbientMismatchError(
                "equation is not written on its chart", {"chart": self.chart.describe()}
            )
        if self.f.is_constant:
            raise ConstantEquationError(f"equation {self.f.to_text()} involves no chart variable")

    @classmethod
    def of(cls, f: Polynomial, chart: JetChart) -> DifferentialEquation:
        """Wrap ``f`` and drop unused jet orders."""
        order = chart.order_of(f.variables())
        minimal = chart.extend(order)
        return cls(minimal, Polynomial.from_expr(f.expr, minimal.symbols, f.field))

    @classmethod
    def parse(
        cls, source: str, n: int, k: int, r: int, field: Field = Field.RATIONALS
    ) -> DifferentialEquation:
        chart = chart_variables(n, k, r)
        return cls.of(parse_expression(source, chart, field), chart)

    @property
    def n(self) -> int:
        return self.chart.n

    @property
    def k(self) -> int:
        return self.chart.k

    @property
    def r(self) -> int:
        return self.chart.r

    def to_text(self) -> str:
        return self.f.to_text()


@dataclass(frozen=True)
class Variety:
    """A subvariety of P^n given by equations in the affine chart.

    Generators live on the order-0 chart of (n, k): ``x1..xk, y1..y(n-k)``.
    """

    n: int
    k: int
    generators: tuple[Polynomial, ...]
    smoothness: Smoothness = Smoothness.UNKNOWN
    genus: int | None = None
    name: str = ""

    def __post_init__(self) -> None:
        chart = chart_variables(self.n, self.k, 0)
        if not self.generators:
            raise AmbientMismatchError("a variety needs at least one equation")
        for g in self.generators:
            if g.gens != chart.symbols or g.is_zero:
                raise AmbientMismatchError(
                    f"variety equation {g.to_text()} is not a nonzero polynomial on "
                    f"{chart.describe()}"
                )

    @classmethod
    def parse(
        cls,
        sources: Sequence[str],
        n: int,
        k: int,
        smoothness: Smoothness = Smoothness.UNKNOWN,
        genus: int | None = None,
        name: str = "",
    ) -> Variety:
        chart = chart_variables(n, k, 0)
        generators = tuple(parse_expression(s, chart) for s in sources)
        return cls(n, k, generators, smoothness, genus, name)

    @property
    def chart(self) -> JetChart:
        return chart_variables(self.n, self.k, 0)

    @property
    def is_plane_curve(self) -> bool:
        return self.n == 2 and self.k == 1 and len(self.generators) == 1

    @property
    def is_hypersurface(self) -> bool:
        return self.k == self.n - 1 and len(self.generators) == 1

    @property
    def equation(self) -> Polynomial:
        """The single equation of a hypersurface."""
        if len(self.generators) != 1:
            raise AmbientMismatchError("variety is not a hypersurface")
        return self.generators[0]

    def with_smoothness(self, smoothness: Smoothness) -> Variety:
        return replace(self, smoothness=smoothness)

    def label(self) -> str:
        return self.name or ", ".join(g.to_text() for g in self.generators)


# ─────────────────────────── gamma vectors ───────────────────────────────────


@dataclass(frozen=True)
class GammaEntry:
    value: Value
    provenance: Provenance

    @property
    def known(self) -> bool:
        return isinstance(self.value, int)

    def render(self) -> str:
        return str(self.value) if isinstance(self.value, int) else self.value.value


@dataclass(frozen=True)
class GammaVector:
    """Indexed entries ``0..r`` with per-entry provenance."""

    entries: tuple[GammaEntry, ...] = field(default_factory=tuple)

    @classmethod
    def from_values(
        cls, values: Iterable[Value], provenance: Provenance = Provenance.USER
    ) -> Self:
        return cls(
            tuple(
                GammaEntry(v, provenance if isinstance(v, int) else Provenance.UNKNOWN)
                for v in values
            )
        )

    @property
    def values(self) -> tuple[Value, ...]:
        return tuple(e.value for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> GammaEntry:
        return self.entries[index]

    def mod2(self) -> Self:
        """Entrywise reduction mod 2; unknown entries stay unknown."""
        return type(self)(
            tuple(
                GammaEntry(e.value % 2, e.provenance) if isinstance(e.value, int) else e
                for e in self.entries
            )
        )

    def render(self) -> str:
        return "(" + ", ".join(e.render() for e in self.entries) + ")"


class EquationInvariants(GammaVector):
    """The vector of equation invariants ``gamma_s^f``."""


class CuspidalNumbers(GammaVector):
    """The cuspidal numbers ``gamma^s_S`` of a variety."""

    def padded(self, length: int, smoothness: Smoothness) -> CuspidalNumbers:
        """Extend to ``length`` entries.

        Smooth and normal varieties get zeros; others get unknown entries.

        Raises:
            LengthMismatchError: If the vector is longer than ``length``
        """
        if len(self) > length:
            raise LengthMismatchError(
                f"cuspidal numbers have {len(self)} entries, expected at most {length}"
            )
        filler = (
            GammaEntry(0, Provenance.REGULAR)
            if smoothness.is_regular
            else GammaEntry(Marker.UNKNOWN, Provenance.UNKNOWN)
        )
        return CuspidalNumbers(self.entries + (filler,) * (length - len(self)))


@dataclass(frozen=True)
class CalibrationTest:
    """A test variety with known cuspidal numbers and measured degree."""

    variety: Variety
    cuspidal: CuspidalNumbers
    measured: int
