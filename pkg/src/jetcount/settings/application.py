"""Internal application settings shared by every job."""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

from jetcount.counting.models import CountOptions


@dataclass
class AppPaths:
    """Application file and directory paths.

    Centralizes the locations of packaged resources: report templates and
    the embedded verification suite.
    """

    templates_dir: Path
    data_dir: Path
    report_template: str = "report.txt.j2"
    verify_suite: str = "reference_suite.yaml"

    @classmethod
    def from_base_dir(cls, base_dir: Path) -> AppPaths:
        """Create paths from the package directory."""
        return cls(
            templates_dir=base_dir / "templates",
            data_dir=base_dir / "data",
        )

    @property
    def verify_suite_file(self) -> Path:
        return self.data_dir / self.verify_suite


class ApplicationSettings:
    """Application settings container.

    Combines resource paths with the retry budgets used by measurements.

    Examples:
        settings = ApplicationSettings()
        options = settings.count_options(seed=7)
        template_dir = settings.paths.templates_dir
    """

    def __init__(self, paths: AppPaths | None = None, budgets: CountOptions | None = None):
        """Initialize application settings with optional overrides.

        Args:
            paths: Resource locations (default: the installed package)
            budgets: Retry budgets; their seed is replaced per job
        """
        self.paths = paths or AppPaths.from_base_dir(Path(__file__).parents[1])
        self.budgets = budgets or CountOptions()

    def count_options(self, seed: int) -> CountOptions:
        """Counting options for one job."""
        return replace(self.budgets, seed=seed)
