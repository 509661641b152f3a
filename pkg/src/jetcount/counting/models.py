"""Typed records produced by the solution counter."""

from __future__ import annotations

import random
from dataclasses import dataclass

from pydantic import BaseModel, Field, model_validator

from jetcount.common.enums import Route
from jetcount.utils.sampling import SamplingUtils


class InfinityCorrection(BaseModel):
    """Solutions found outside the affine jet chart, grouped by location."""

    point: str = Field(..., description="Where the solutions sit, e.g. (0:1:0)")
    chart: str = Field(..., description="Reference used to see them")
    multiplicity: int = Field(..., ge=1)


class CountReport(BaseModel):
    """Bookkeeping for one measured degree ``deg S(f)``."""

    affine_count: int = Field(..., ge=0)
    infinity_corrections: list[InfinityCorrection] = Field(default_factory=list)
    total: int = Field(..., ge=0)
    seed: int
    route: Route = Route.CHART

    @model_validator(mode="after")
    def check_total(self) -> CountReport:
        expected = self.affine_count + sum(c.multiplicity for c in self.infinity_corrections)
        if self.total != expected:
            raise ValueError(f"total {self.total} differs from the bookkeeping sum {expected}")
        return self

    @classmethod
    def tally(
        cls,
        affine_count: int,
        corrections: list[InfinityCorrection],
        seed: int,
        route: Route = Route.CHART,
    ) -> CountReport:
        total = affine_count + sum(c.multiplicity for c in corrections)
        return cls(
            affine_count=affine_count,
            infinity_corrections=corrections,
            total=total,
            seed=seed,
            route=route,
        )


@dataclass(frozen=True)
class CountOptions:
    """Randomness and retry budgets for one measurement."""

    seed: int = 0
    reference_retries: int = 24
    slice_attempts: int = 3
    coefficient_bound: int = 5

    def rng(self, purpose: str) -> random.Random:
        """A reproducible generator dedicated to ``purpose``."""
        return SamplingUtils.rng(f"{self.seed}:{purpose}")
