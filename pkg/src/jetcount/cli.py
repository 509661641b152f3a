"""jetcount CLI application.

This module provides the command-line interface: job files and inline job
options, one command per computation, the embedded verification suite and
job file helpers.
"""

from __future__ import annotations

import asyncio
import logging
import sys
from pathlib import Path
from typing import Any, Final

import typer
from pydantic import ValidationError

from jetcount.common.enums import Command, Field, Mode, ReportFormat, Smoothness
from jetcount.controller import JobRunner
from jetcount.errors import JetCountError, JobError, VerifyMismatchError
from jetcount.report.models import Report
from jetcount.report.render import ReportRenderer
from jetcount.settings.job import Job

# ── CLI setup ────────────────────────────────────────────────────────────────
app = typer.Typer(
    help="Count solutions of differential equations on varieties", add_completion=False
)
job_app = typer.Typer(help="Job file helpers")
app.add_typer(job_app, name="job")

logger: Final = logging.getLogger(__name__)  # Will be "jetcount.cli"

# Options shared by the commands
JOB_OPTION = typer.Option(None, "--job", exists=True, dir_okay=False, help="Job file (YAML)")
N_OPTION = typer.Option(None, "-n", help="Dimension of the ambient projective space")
K_OPTION = typer.Option(None, "-k", help="Dimension of the variety")
R_OPTION = typer.Option(None, "-r", help="Jet order of the chart")
EQUATION_OPTION = typer.Option(None, "--equation", "-e", help="Differential equation f")
VARIETY_OPTION = typer.Option(None, "--variety", "-v", help="Equation of S (repeatable)")
SMOOTHNESS_OPTION = typer.Option(None, "--smoothness", help="Declared smoothness of S")
GENUS_OPTION = typer.Option(None, "--genus", help="Genus of a generic curve section")
GAMMA_VARIETY_OPTION = typer.Option(
    None, "--gamma-variety", help="User cuspidal number (repeatable, in order)"
)
SEED_OPTION = typer.Option(None, "--seed", help="Seed for random choices")
FIELD_OPTION = typer.Option(None, "--field", help="Rational or mod-2 arithmetic")
MODE_OPTION = typer.Option(None, "--mode", "-m", help="Theorem, measurement or both")
COMMAND_OPTION = typer.Option(None, "--command", help="Override the job's command")
FORMAT_OPTION = typer.Option(ReportFormat.TEXT, "--format", "-f", help="Report format")
DEBUG_OPTION = typer.Option(False, "--debug", help="Enable debug logging")
FILE_ARGUMENT = typer.Argument(..., exists=True, dir_okay=False, help="Job file (YAML)")


# ── helpers ──────────────────────────────────────────────────────────────────
def _fail(exc: JetCountError) -> typer.Exit:
    typer.secho(str(exc), fg=typer.colors.RED, err=True)
    return typer.Exit(code=exc.exit_code)


def build_job(
    job_file: Path | None,
    command: Command | None,
    overrides: dict[str, Any],
    use_default_file: bool = False,
) -> Job:
    """Merge a job file with inline options; inline values win.

    Args:
        job_file: Explicit job file, if any
        command: Command to force, if any
        overrides: Inline option values; ``None`` and empty lists are ignored
        use_default_file: Search the default job locations when no file is given

    Returns:
        Validated job

    Raises:
        JobError: If the merged job is invalid
    """
    data: dict[str, Any] = {}
    if job_file is not None or use_default_file:
        data = Job.load(job_file).model_dump(mode="json", exclude_none=True)
    for key, value in overrides.items():
        if isinstance(value, (list, tuple)):
            if value:
                data[key] = list(value)
        elif value is not None:
            data[key] = value
    if command is not None:
        data["command"] = command
    try:
        return Job.model_validate(data)
    except ValidationError as err:
        raise JobError(f"Invalid job:\n{err}") from err


def emit(report: Report, fmt: ReportFormat, runner: JobRunner) -> None:
    renderer = ReportRenderer(runner.settings.paths.templates_dir)
    typer.echo(renderer.render(report, fmt))


def execute(job: Job, fmt: ReportFormat, debug: bool) -> None:
    """Run a job, print its report and map failures to exit codes."""
    runner = JobRunner(debug=debug)
    try:
        report = runner.run(job)
        emit(report, fmt, runner)
        if report.cases is not None and report.verify_matches < len(report.cases):
            raise VerifyMismatchError(
                f"{len(report.cases) - report.verify_matches} verification cases do not match"
            )
    except JetCountError as exc:
        raise _fail(exc) from exc


def _run_inline(
    command: Command,
    job_file: Path | None,
    overrides: dict[str, Any],
    fmt: ReportFormat,
    debug: bool,
) -> None:
    try:
        job = build_job(job_file, command, overrides)
    except JetCountError as exc:
        raise _fail(exc) from exc
    execute(job, fmt, debug)


# ── commands ─────────────────────────────────────────────────────────────────
@app.command()
def run(
    job_file: Path | None = JOB_OPTION,
    command: Command | None = COMMAND_OPTION,
    mode: Mode | None = MODE_OPTION,
    seed: int | None = SEED_OPTION,
    field: Field | None = FIELD_OPTION,
    fmt: ReportFormat = FORMAT_OPTION,
    debug: bool = DEBUG_OPTION,
) -> None:
    """Run a job file.

    Without --job the file comes from JETCOUNT_JOB or the default locations.
    """
    overrides: dict[str, Any] = {"mode": mode, "seed": seed, "field": field}
    try:
        job = build_job(job_file, command, overrides, use_default_file=True)
    except JetCountError as exc:
        raise _fail(exc) from exc
    execute(job, fmt, debug)


@app.command()
def invariants(
    job_file: Path | None = JOB_OPTION,
    n: int | None = N_OPTION,
    k: int | None = K_OPTION,
    r: int | None = R_OPTION,
    equation: str | None = EQUATION_OPTION,
    seed: int | None = SEED_OPTION,
    field: Field | None = FIELD_OPTION,
    mode: Mode | None = MODE_OPTION,
    fmt: ReportFormat = FORMAT_OPTION,
    debug: bool = DEBUG_OPTION,
) -> None:
    """Equation invariants of f; --mode both cross-checks the routes."""
    overrides: dict[str, Any] = {
        "n": n,
        "k": k,
        "r": r,
        "equation": equation,
        "seed": seed,
        "field": field,
        "mode": mode,
    }
    _run_inline(Command.INVARIANTS, job_file, overrides, fmt, debug)


@app.command()
def cuspidal(
    job_file: Path | None = JOB_OPTION,
    n: int | None = N_OPTION,
    k: int | None = K_OPTION,
    r: int | None = R_OPTION,
    variety: list[str] | None = VARIETY_OPTION,
    smoothness: Smoothness | None = SMOOTHNESS_OPTION,
    genus: int | None = GENUS_OPTION,
    gamma_variety: list[int] | None = GAMMA_VARIETY_OPTION,
    seed: int | None = SEED_OPTION,
    field: Field | None = FIELD_OPTION,
    fmt: ReportFormat = FORMAT_OPTION,
    debug: bool = DEBUG_OPTION,
) -> None:
    """Cuspidal numbers of S up to order r."""
    overrides: dict[str, Any] = {
        "n": n,
        "k": k,
        "r": r,
        "variety": variety,
        "smoothness": smoothness,
        "genus": genus,
        "gamma_variety": gamma_variety,
        "seed": seed,
        "field": field,
    }
    _run_inline(Command.CUSPIDAL, job_file, overrides, fmt, debug)


@app.command()
def degree(
    job_file: Path | None = JOB_OPTION,
    n: int | None = N_OPTION,
    k: int | None = K_OPTION,
    r: int | None = R_OPTION,
    equation: str | None = EQUATION_OPTION,
    variety: list[str] | None = VARIETY_OPTION,
    smoothness: Smoothness | None = SMOOTHNESS_OPTION,
    genus: int | None = GENUS_OPTION,
    gamma_variety: list[int] | None = GAMMA_VARIETY_OPTION,
    seed: int | None = SEED_OPTION,
    field: Field | None = FIELD_OPTION,
    mode: Mode | None = MODE_OPTION,
    fmt: ReportFormat = FORMAT_OPTION,
    debug: bool = DEBUG_OPTION,
) -> None:
    """Degree of the solution variety S(f), by theorem, by counting or both."""
    overrides: dict[str, Any] = {
        "n": n,
        "k": k,
        "r": r,
        "equation": equation,
        "variety": variety,
        "smoothness": smoothness,
        "genus": genus,
        "gamma_variety": gamma_variety,
        "seed": seed,
        "field": field,
        "mode": mode,
    }
    _run_inline(Command.DEGREE, job_file, overrides, fmt, debug)


@app.command()
def parity(
    job_file: Path | None = JOB_OPTION,
    n: int | None = N_OPTION,
    k: int | None = K_OPTION,
    r: int | None = R_OPTION,
    equation: str | None = EQUATION_OPTION,
    variety: list[str] | None = VARIETY_OPTION,
    smoothness: Smoothness | None = SMOOTHNESS_OPTION,
    genus: int | None = GENUS_OPTION,
    gamma_variety: list[int] | None = GAMMA_VARIETY_OPTION,
    seed: int | None = SEED_OPTION,
    fmt: ReportFormat = FORMAT_OPTION,
    debug: bool = DEBUG_OPTION,
) -> None:
    """Parity of deg S(f) for a real variety; the umbilical equation by default."""
    overrides: dict[str, Any] = {
        "n": n,
        "k": k,
        "r": r,
        "equation": equation,
        "variety": variety,
        "smoothness": smoothness,
        "genus": genus,
        "gamma_variety": gamma_variety,
        "seed": seed,
        "field": Field.MOD2,
    }
    _run_inline(Command.PARITY, job_file, overrides, fmt, debug)


@app.command()
def verify(fmt: ReportFormat = FORMAT_OPTION, debug: bool = DEBUG_OPTION) -> None:
    """Reproduce the embedded suite of worked computations."""
    runner = JobRunner(debug=debug)
    try:
        report = asyncio.run(runner.verify())
        emit(report, fmt, runner)
        if report.verify_matches < len(report.cases or []):
            raise VerifyMismatchError(
                f"{report.verify_matches}/{len(report.cases or [])} verification cases match"
            )
    except JetCountError as exc:
        raise _fail(exc) from exc


# ───────────────────────── job sub-commands ──────────────────────────────────
@job_app.command("validate")
def validate_job(file: Path = FILE_ARGUMENT):
    """Validate a YAML job file against the schema."""
    try:
        Job.load(file)
        typer.echo("✅ Job valid")
    except JetCountError as exc:
        raise _fail(exc) from exc


@job_app.command("show")
def show_job(file: Path = FILE_ARGUMENT):
    """Print the canonical form of a job file."""
    try:
        typer.echo(Job.load(file).dump(), nl=False)
    except JetCountError as exc:
        raise _fail(exc) from exc


# ───────────────────────── module entrypoint ────────────────────────────────
if __name__ == "__main__":
    try:
        app()
    except KeyboardInterrupt:
        sys.exit(0)
