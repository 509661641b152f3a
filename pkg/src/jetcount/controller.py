"""Core controller: runs jobs and the verification suite."""

from __future__ import annotations

import asyncio
import logging
from pathlib import Path
from typing import Any, Final

import yaml
from pydantic import ValidationError

from jetcount.common.enums import Command, Field, Mode, Smoothness
from jetcount.counting.measure import measure_degree
from jetcount.counting.models import CountOptions
from jetcount.errors import JetCountError, JobError
from jetcount.formula.real import (
    degree_mod2,
    parity_label,
    umbilical_equation,
    umbilical_invariants,
    umbilical_parity,
)
from jetcount.formula.theorem import degree_by_theorem
from jetcount.invariants.calibration import cross_check, equation_invariants
from jetcount.invariants.models import CuspidalNumbers, DifferentialEquation, Variety
from jetcount.invariants.variety import cuspidal_numbers, resolve_smoothness
from jetcount.report.models import EntryRecord, Report, VerifyCase
from jetcount.settings.application import ApplicationSettings
from jetcount.settings.job import Job, default_seed

logger: Final = logging.getLogger(__name__)


class JobRunner:
    """Main controller for jetcount jobs.

    This class orchestrates one job from parsed inputs to a report:
    - Parsing the equation and the variety on their charts
    - Computing invariants and cuspidal numbers
    - Evaluating the degree formula and measuring by counting
    - Running the embedded verification suite concurrently
    """

    def __init__(self, settings: ApplicationSettings | None = None, debug: bool = False):
        """Initialize the job runner.

        Args:
            settings: Application settings (default: packaged paths and budgets)
            debug: Enable debug logging
        """
        logging.basicConfig(
            level=logging.DEBUG if debug else logging.INFO,
            format="%(asctime)s [%(levelname)s] %(message)s",
        )
        self.settings = settings or ApplicationSettings()

    # ── inputs ───────────────────────────────────────────────────────────────
    @staticmethod
    def equation_of(job: Job) -> DifferentialEquation:
        """The job's equation; parity jobs default to the umbilical equation.

        Raises:
            JobError: If the job has no equation
        """
        equation = job.equation_on_chart()
        if equation is not None:
            return equation
        if job.command is Command.PARITY:
            return umbilical_equation()
        raise JobError(f"command {job.command.value} needs an equation")

    @staticmethod
    def variety_of(job: Job) -> Variety:
        variety = job.variety_on_chart()
        if variety is None:
            raise JobError(f"command {job.command.value} needs a variety")
        return variety

    def _smoothness(self, job: Job) -> Smoothness:
        if job.smoothness is not Smoothness.UNKNOWN or not job.variety:
            return job.smoothness
        return resolve_smoothness(self.variety_of(job)).smoothness

    def _cuspidal(self, job: Job, r: int, options: CountOptions) -> CuspidalNumbers:
        """User cuspidal numbers alone, or computed ones with user overrides."""
        if not job.variety:
            return CuspidalNumbers.from_values(job.gamma_variety or [])
        return cuspidal_numbers(self.variety_of(job), r, options, job.gamma_variety)

    # ── commands ─────────────────────────────────────────────────────────────
    def run(self, job: Job) -> Report:
        """Run one job.

        Args:
            job: Validated job

        Returns:
            The report for the job's command

        Raises:
            JetCountError: On any failure, with a machine-readable code
        """
        if job.command is Command.VERIFY:
            return asyncio.run(self.verify())
        logger.info("running %s (%s) with seed %d", job.command.value, job.mode.value, job.seed)
        report = Report(
            command=job.command.value,
            mode=job.mode.value,
            seed=job.seed,
            job=job.model_dump(mode="json", exclude_none=True),
        )
        options = self.settings.count_options(job.seed)
        if job.command is Command.INVARIANTS:
            return self._invariants(job, report, options)
        if job.command is Command.CUSPIDAL:
            return self._cuspidal_numbers(job, report, options)
        if job.command is Command.DEGREE:
            return self._degree(job, report, options)
        return self._parity(job, report, options)

    def _invariants(self, job: Job, report: Report, options: CountOptions) -> Report:
        equation = self.equation_of(job)
        invariants = equation_invariants(equation, options, job.gamma_equation, job.field)
        report.equation_invariants = EntryRecord.from_vector(invariants)
        if job.mode is Mode.BOTH and job.field is Field.RATIONALS:
            _, _, agree = cross_check(equation, options)
            report.routes_agree = agree
        return report

    def _cuspidal_numbers(self, job: Job, report: Report, options: CountOptions) -> Report:
        numbers = self._cuspidal(job, job.r, options)
        if job.field is Field.MOD2:
            numbers = numbers.mod2()
        report.cuspidal_numbers = EntryRecord.from_vector(numbers)
        return report

    def _degree(self, job: Job, report: Report, options: CountOptions) -> Report:
        equation = self.equation_of(job)
        if job.mode in (Mode.THEOREM, Mode.BOTH):
            invariants = equation_invariants(equation, options, job.gamma_equation, job.field)
            numbers = self._cuspidal(job, equation.r, options)
            smoothness = self._smoothness(job)
            report.equation_invariants = EntryRecord.from_vector(invariants)
            report.cuspidal_numbers = EntryRecord.from_vector(numbers)
            if job.field is Field.MOD2:
                report.degree_theorem = degree_mod2(invariants, numbers, smoothness)
            else:
                report.degree_theorem = degree_by_theorem(invariants, numbers, smoothness)
        if job.mode in (Mode.MEASURE, Mode.BOTH):
            count = measure_degree(self.variety_of(job), equation, options)
            report.count = count
            report.degree_measured = count.total % 2 if job.field is Field.MOD2 else count.total
        if not report.degree_consistent:
            logger.warning(
                "theorem gives %s but counting gives %s",
                report.degree_theorem,
                report.degree_measured,
            )
        logger.info(
            "degree: theorem %s, measured %s", report.degree_theorem, report.degree_measured
        )
        return report

    def _parity(self, job: Job, report: Report, options: CountOptions) -> Report:
        """Parity of ``deg S(f)`` for a real variety; umbilics by default."""
        equation = self.equation_of(job)
        numbers = self._cuspidal(job, equation.r, options)
        if job.equation is None and not job.gamma_equation:
            invariants = umbilical_invariants(options)
            value = umbilical_parity(numbers, invariants=invariants)
        else:
            invariants = equation_invariants(equation, options, job.gamma_equation, Field.MOD2)
            value = degree_mod2(invariants, numbers, self._smoothness(job))
        report.equation_invariants = EntryRecord.from_vector(invariants)
        report.cuspidal_numbers = EntryRecord.from_vector(numbers.mod2())
        report.parity = parity_label(value)
        logger.info("parity of %s: %s", equation.to_text(), report.parity)
        return report

    # ── verification ─────────────────────────────────────────────────────────
    def load_suite(self, path: Path | None = None) -> list[dict[str, Any]]:
        """Cases of the verification suite.

        Raises:
            JobError: If the suite file cannot be read or has no case list
        """
        suite_file = path or self.settings.paths.verify_suite_file
        try:
            data = yaml.safe_load(suite_file.read_text())
        except (OSError, yaml.YAMLError) as exc:
            raise JobError(f"Unable to read verification suite {suite_file}: {exc}") from exc
        if not isinstance(data, dict) or not isinstance(data.get("cases"), list):
            raise JobError(f"verification suite {suite_file} has no case list")
        return list(data["cases"])

    def run_case(self, case: dict[str, Any]) -> VerifyCase:
        """Run one verification case and compare the checked field."""
        result = VerifyCase(name=case["name"], expected=case["expect"])
        try:
            report = self.run(Job.model_validate(case["job"]))
        except (JetCountError, ValidationError) as exc:
            logger.warning("case %s failed: %s", case["name"], exc)
            result.error = str(exc)
            return result
        actual: Any = getattr(report, case["check"])
        if isinstance(actual, list):
            actual = [entry.value for entry in actual]
        result.actual = actual
        result.matched = actual == case["expect"]
        if not result.matched:
            logger.warning("case %s: expected %s, got %s", case["name"], case["expect"], actual)
        return result

    async def verify(self, path: Path | None = None) -> Report:
        """Run every suite case concurrently and collect the outcomes."""
        cases = self.load_suite(path)
        logger.info("verifying %d cases", len(cases))
        outcomes = await asyncio.gather(
            *(asyncio.to_thread(self.run_case, case) for case in cases)
        )
        report = Report(
            command=Command.VERIFY.value,
            mode=Mode.BOTH.value,
            seed=default_seed(),
            cases=list(outcomes),
        )
        logger.info("%d/%d cases match", report.verify_matches, len(outcomes))
        return report
