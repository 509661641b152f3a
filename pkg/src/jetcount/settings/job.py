"""Computation requests loaded from job.yaml."""

from __future__ import annotations

import logging
import os
import re
from pathlib import Path
from typing import ClassVar, Final

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from jetcount.common.enums import Command, Mode, Smoothness
from jetcount.common.enums import Field as CoefficientField
from jetcount.errors import ExpressionParseError, JobError
from jetcount.invariants.models import DifferentialEquation, Variety

logger: Final = logging.getLogger(__name__)

# Load environment variables from .env file(s)
load_dotenv()

SEED_ENV: str = "JETCOUNT_SEED"
JOB_ENV: str = "JETCOUNT_JOB"


def _interpolate_env(content: str) -> str:
    return re.sub(r"\$\{(\w+)\}", lambda m: os.getenv(m.group(1), ""), content)


def default_seed() -> int:
    """Seed from ``JETCOUNT_SEED``, or 0."""
    value = os.getenv(SEED_ENV, "").strip()
    try:
        return int(value) if value else 0
    except ValueError as exc:
        raise JobError(f"{SEED_ENV} must be an integer, got {value!r}") from exc


class Job(BaseModel):
    """One request: an equation, a variety and what to compute about them.

    Indices of jets are single digits, so ``n`` stays below 10.
    """

    model_config = ConfigDict(extra="forbid", use_enum_values=False)

    # Default search paths for job files
    DEFAULT_JOB_PATHS: ClassVar[list[Path]] = [
        Path("job.yaml"),
        Path("~/.config/jetcount/job.yaml").expanduser(),
        Path("/etc/jetcount/job.yaml"),
    ]

    command: Command = Command.DEGREE
    mode: Mode = Mode.THEOREM
    n: int = Field(2, ge=2, le=9, description="Dimension of the ambient projective space")
    k: int = Field(1, ge=1, le=8, description="Dimension of the variety")
    r: int = Field(1, ge=0, le=9, description="Jet order of the chart")
    equation: str | None = Field(None, description="Differential equation f")
    variety: list[str] = Field(default_factory=list, description="Equations of S")
    smoothness: Smoothness = Smoothness.UNKNOWN
    genus: int | None = Field(None, ge=0, description="Genus of a generic curve section")
    seed: int = Field(default_factory=default_seed, description="Seed for random choices")
    field: CoefficientField = CoefficientField.RATIONALS
    gamma_variety: list[int] | None = Field(None, description="User cuspidal numbers")
    gamma_equation: dict[int, int] | None = Field(None, description="User equation invariants")

    @model_validator(mode="after")
    def check_dimensions(self) -> Job:
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(f"k must satisfy 1 <= k <= n-1, got n={self.n}, k={self.k}")
        if self.n - self.k > 9:
            raise ValueError("at most 9 dependent coordinates are supported")
        if self.gamma_equation and any(not 0 <= s <= self.r for s in self.gamma_equation):
            raise ValueError(f"gamma_equation indices must lie in 0..{self.r}")
        return self

    @model_validator(mode="after")
    def check_inputs(self) -> Job:
        needs_equation = self.command in (Command.INVARIANTS, Command.DEGREE)
        needs_variety = self.command in (Command.CUSPIDAL, Command.DEGREE, Command.PARITY)
        if needs_equation and not self.equation:
            raise ValueError(f"command {self.command.value} needs an equation")
        if needs_variety and not self.variety and self.gamma_variety is None:
            raise ValueError(f"command {self.command.value} needs a variety")
        return self

    @model_validator(mode="after")
    def check_expressions(self) -> Job:
        """Equation and variety must parse on the job's charts.

        Parse failures keep their own code and position instead of becoming
        validation errors.
        """
        self.equation_on_chart()
        self.variety_on_chart()
        return self

    # ---- parsed inputs ----
    def equation_on_chart(self) -> DifferentialEquation | None:
        """The equation on the (n, k, r) chart, or None when absent.

        Curve spellings such as ``y'`` fall back to the plane-curve chart when
        they are not valid on the job's own chart; the section route measures
        such equations on a plane model of the variety.

        Raises:
            ExpressionParseError: If the equation parses on neither chart
        """
        if self.equation is None:
            return None
        try:
            return DifferentialEquation.parse(self.equation, self.n, self.k, self.r)
        except ExpressionParseError:
            if (self.n, self.k) == (2, 1):
                raise
            logger.debug("reading %r on the plane-curve chart", self.equation)
            return DifferentialEquation.parse(self.equation, 2, 1, self.r)

    def variety_on_chart(self) -> Variety | None:
        """The variety on the order-0 chart of (n, k), or None when absent."""
        if not self.variety:
            return None
        return Variety.parse(self.variety, self.n, self.k, self.smoothness, self.genus)

    # ---- serialization ----
    def dump(self) -> str:
        """Canonical YAML text of this job."""
        data = self.model_dump(mode="json", exclude_none=True)
        return yaml.safe_dump(data, sort_keys=False, allow_unicode=True)

    @classmethod
    def loads(cls, text: str) -> Job:
        """Validate a job from YAML text.

        Raises:
            JobError: If the text is not YAML or fails validation
        """
        try:
            data = yaml.safe_load(_interpolate_env(text)) or {}
        except yaml.YAMLError as exc:
            raise JobError(f"Unable to read job YAML: {exc}") from exc
        if not isinstance(data, dict):
            raise JobError("a job file must hold a mapping")
        try:
            return cls.model_validate(data)
        except ValidationError as err:
            raise JobError(f"Invalid job:\n{err}") from err

    @classmethod
    def load(cls, path: Path | None = None) -> Job:
        """Load a job from a YAML file.

        Args:
            path: Path to the job file (optional, searches default locations if None)

        Returns:
            Validated Job object

        Raises:
            JobError: If no job file is found, or it cannot be parsed or is invalid
        """
        if path is None:
            env_path = os.environ.get(JOB_ENV)
            if env_path:
                path = Path(env_path)
                if not path.exists():
                    raise JobError(f"Job file from {JOB_ENV} not found: {path}")
            else:
                for default_path in cls.DEFAULT_JOB_PATHS:
                    if default_path.exists():
                        path = default_path
                        break
                else:
                    raise JobError(f"No job file found. Create job.yaml or set {JOB_ENV}.")
        try:
            text = path.read_text()
        except OSError as exc:
            raise JobError(f"Unable to read job file {path}: {exc}") from exc
        return cls.loads(text)
