from __future__ import annotations

from pathlib import Path

import pytest

from jetcount.common.enums import Command, Field, Mode, Smoothness
from jetcount.controller import JobRunner
from jetcount.errors import ExpressionParseError, JobError
from jetcount.settings.job import Job


@pytest.fixture
def runner() -> JobRunner:
    return JobRunner()


def cubic_job(**overrides: object) -> Job:
    base: dict[str, object] = {
        "command": Command.DEGREE,
        "equation": "y''",
        "r": 2,
        "variety": ["x^3 + y^2 - 1"],
        "smoothness": Smoothness.SMOOTH,
    }
    return Job.model_validate(base | overrides)


def test_degree_by_both_routes(runner: JobRunner, job_file: Path):
    report = runner.run(Job.load(job_file))
    assert report.degree_theorem == 9
    assert report.degree_measured == 9
    assert report.degree_consistent
    assert report.count is not None
    assert report.count.affine_count == 8
    assert [e.value for e in report.cuspidal_numbers or []] == [3, 6, 0]


def test_degree_from_user_cuspidal_numbers(runner: JobRunner):
    job = Job(command=Command.DEGREE, equation="y'", gamma_variety=[3, 3])
    report = runner.run(job)
    assert report.degree_theorem == 3
    assert report.degree_measured is None


def test_degree_mod2(runner: JobRunner):
    report = runner.run(cubic_job(mode=Mode.BOTH, field=Field.MOD2))
    assert report.degree_theorem == 1
    assert report.degree_measured == 1


def test_invariants_with_cross_check(runner: JobRunner):
    job = Job(command=Command.INVARIANTS, mode=Mode.BOTH, equation="y''", r=2)
    report = runner.run(job)
    assert [e.value for e in report.equation_invariants or []] == [-3, 3, 1]
    assert report.routes_agree is True


def test_user_invariants_are_reported(runner: JobRunner):
    job = Job(command=Command.INVARIANTS, equation="y''", r=2, gamma_equation={0: -3, 1: 3})
    report = runner.run(job)
    assert [e.provenance for e in report.equation_invariants or []] == [
        "user",
        "user",
        "distinguished",
    ]


def test_cuspidal_command(runner: JobRunner):
    job = cubic_job(command=Command.CUSPIDAL, variety=["x^3 + y^2"], smoothness="singular")
    report = runner.run(job)
    assert [e.value for e in report.cuspidal_numbers or []] == [3, 3, 1]


def test_undeclared_smoothness_is_detected(runner: JobRunner):
    report = runner.run(cubic_job(command=Command.CUSPIDAL, smoothness=Smoothness.UNKNOWN))
    assert [e.provenance for e in report.cuspidal_numbers or []][1:] == ["formula", "regular"]


def test_umbilical_parity(runner: JobRunner):
    job = Job(command=Command.PARITY, n=3, k=2, r=2, field=Field.MOD2, gamma_variety=[3, 6, 0])
    report = runner.run(job)
    assert report.parity == "even"


def test_parity_of_a_given_equation(runner: JobRunner):
    report = runner.run(cubic_job(command=Command.PARITY, field=Field.MOD2))
    # nine flexes of a smooth cubic
    assert report.parity == "odd"


def test_curve_equation_on_a_surface_uses_the_curve_chart():
    job = Job(command=Command.INVARIANTS, equation="y'", n=3, k=2, r=1)
    equation = JobRunner.equation_of(job)
    assert (equation.n, equation.k, equation.r) == (2, 1, 1)


def test_bad_equation_on_the_curve_chart():
    with pytest.raises(ExpressionParseError, match="1:5"):
        Job(command=Command.INVARIANTS, equation="y' +", r=1)


def test_variety_is_required_for_measuring(runner: JobRunner):
    job = Job(command=Command.DEGREE, mode=Mode.MEASURE, equation="y'", gamma_variety=[3, 6])
    with pytest.raises(JobError):
        runner.run(job)


def test_suite_must_hold_cases(runner: JobRunner, tmp_path: Path):
    path = tmp_path / "suite.yaml"
    path.write_text("name: nothing here\n")
    with pytest.raises(JobError):
        runner.load_suite(path)
    with pytest.raises(JobError):
        runner.load_suite(tmp_path / "absent.yaml")


def test_failing_case_is_recorded(runner: JobRunner):
    case = {
        "name": "broken",
        "check": "degree_measured",
        "expect": 1,
        "job": {"command": "degree", "equation": "y' +", "variety": ["x^2 + y^2 - 1"]},
    }
    outcome = runner.run_case(case)
    assert not outcome.matched
    assert outcome.error is not None
    assert outcome.error.startswith("[PARSE_ERROR]")


@pytest.mark.slow
@pytest.mark.asyncio
async def test_verification_suite(runner: JobRunner):
    report = await runner.verify()
    assert report.cases is not None
    assert len(report.cases) == 10
    failures = [(c.name, c.actual, c.error) for c in report.cases if not c.matched]
    assert failures == []
    assert report.verify_matches == 10
