from __future__ import annotations

from pathlib import Path

import pytest

from jetcount.common.enums import Smoothness
from jetcount.counting.models import CountOptions
from jetcount.invariants.models import DifferentialEquation, Variety
from jetcount.jets.chart import JetChart, chart_variables


@pytest.fixture
def options() -> CountOptions:
    return CountOptions(seed=0)


@pytest.fixture
def curve_chart() -> JetChart:
    return chart_variables(2, 1, 2)


@pytest.fixture
def smooth_cubic() -> Variety:
    return Variety.parse(["x^3 + y^2 - 1"], 2, 1, Smoothness.SMOOTH, name="smooth cubic")


@pytest.fixture
def cuspidal_cubic() -> Variety:
    return Variety.parse(["x^3 + y^2"], 2, 1, Smoothness.SINGULAR, name="cuspidal cubic")


@pytest.fixture
def nodal_cubic() -> Variety:
    return Variety.parse(["y^2 - x^3 - x^2"], 2, 1, Smoothness.SINGULAR, name="nodal cubic")


@pytest.fixture
def conic() -> Variety:
    return Variety.parse(["x^2 + y^2 - 1"], 2, 1, Smoothness.SMOOTH, name="conic")


@pytest.fixture
def slope() -> DifferentialEquation:
    return DifferentialEquation.parse("y'", 2, 1, 1)


@pytest.fixture
def flex() -> DifferentialEquation:
    return DifferentialEquation.parse("y''", 2, 1, 2)


@pytest.fixture
def job_file(tmp_path: Path) -> Path:
    path = tmp_path / "job.yaml"
    path.write_text(
        "command: degree\n"
        "mode: both\n"
        "n: 2\n"
        "k: 1\n"
        "r: 2\n"
        "equation: y''\n"
        "variety:\n"
        "- x^3 + y^2 - 1\n"
        "smoothness: smooth\n"
    )
    return path
