from __future__ import annotations

import json

import pytest
import yaml

from jetcount.common.enums import Marker, Provenance, ReportFormat, Route
from jetcount.counting.models import CountReport, InfinityCorrection
from jetcount.invariants.models import EquationInvariants
from jetcount.report.models import EntryRecord, Report, VerifyCase
from jetcount.report.render import ReportRenderer, render_vector


@pytest.fixture
def renderer() -> ReportRenderer:
    return ReportRenderer()


@pytest.fixture
def degree_report() -> Report:
    invariants = EquationInvariants.from_values((-3, 3, 1), Provenance.CALIBRATED)
    correction = InfinityCorrection(point="(0:1:0)", chart="random reference", multiplicity=1)
    return Report(
        command="degree",
        mode="both",
        seed=0,
        job={"equation": "y''", "variety": ["x^3 + y^2 - 1"]},
        equation_invariants=EntryRecord.from_vector(invariants),
        count=CountReport.tally(8, [correction], seed=0, route=Route.CHART),
        degree_theorem=9,
        degree_measured=9,
    )


def test_entry_records_keep_markers():
    invariants = EquationInvariants.from_values((Marker.UNKNOWN, 1))
    records = EntryRecord.from_vector(invariants)
    assert records[0].value == "unknown"
    assert records[0].provenance == "unknown"
    assert render_vector(records) == "(unknown, 1)"
    assert render_vector(None) == "-"


def test_text_report(renderer: ReportRenderer, degree_report: Report):
    text = renderer.render(degree_report)
    assert text.startswith("jetcount degree (both), seed 0")
    assert "equation invariants (-3, 3, 1)" in text
    assert "gamma_2 = 1  [calibrated]" in text
    assert "affine solutions: 8" in text
    assert "(0:1:0): 1  (random reference)" in text
    assert "degree by theorem: 9" in text
    assert "degree measured: 9" in text


def test_yaml_report(renderer: ReportRenderer, degree_report: Report):
    data = yaml.safe_load(renderer.render(degree_report, ReportFormat.YAML))
    assert data["degree_theorem"] == 9
    assert data["count"]["route"] == "chart"
    assert "parity" not in data


def test_json_report(renderer: ReportRenderer, degree_report: Report):
    data = json.loads(renderer.render(degree_report, ReportFormat.JSON))
    assert [e["value"] for e in data["equation_invariants"]] == [-3, 3, 1]
    assert data["count"]["infinity_corrections"][0]["multiplicity"] == 1


def test_verify_report(renderer: ReportRenderer):
    report = Report(
        command="verify",
        mode="both",
        seed=0,
        cases=[
            VerifyCase(name="smooth cubic", expected=9, actual=9, matched=True),
            VerifyCase(name="broken", expected=1, error="[PARSE_ERROR] 1:1: bad"),
        ],
    )
    text = renderer.render(report)
    assert "[ok] smooth cubic: expected 9, got 9" in text
    assert "[FAIL] broken: expected 1, got [PARSE_ERROR] 1:1: bad" in text
    assert "1/2 cases match" in text
    assert report.verify_matches == 1


def test_consistency_flag():
    report = Report(command="degree", mode="both", seed=0, degree_theorem=9, degree_measured=8)
    assert not report.degree_consistent
    assert Report(command="degree", mode="theorem", seed=0, degree_theorem=9).degree_consistent
