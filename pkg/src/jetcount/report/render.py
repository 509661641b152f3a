"""Report rendering: Jinja2 text and structured YAML or JSON."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Final

import yaml
from jinja2 import Environment, FileSystemLoader, StrictUndefined

from jetcount.common.enums import ReportFormat
from jetcount.report.models import EntryRecord, Report
from jetcount.settings.application import ApplicationSettings

logger: Final = logging.getLogger(__name__)


def render_vector(entries: list[EntryRecord] | None) -> str:
    """``(v0, v1, ...)`` for a list of entry records."""
    if entries is None:
        return "-"
    return "(" + ", ".join(str(e.value) for e in entries) + ")"


class ReportRenderer:
    """Renders reports through the packaged Jinja2 template.

    The renderer uses paths from application settings by default, but can
    be configured with a custom template directory.
    """

    def __init__(self, templates_dir: Path | None = None) -> None:
        settings = ApplicationSettings()
        self.templates_dir = templates_dir or settings.paths.templates_dir
        self.env = Environment(
            loader=FileSystemLoader(self.templates_dir),
            autoescape=False,
            undefined=StrictUndefined,
            trim_blocks=True,
            lstrip_blocks=True,
        )
        self.env.filters.update({"vector": render_vector})
        self.template = self.env.get_template(settings.paths.report_template)

    def text(self, report: Report) -> str:
        return self.template.render(report=report)

    @staticmethod
    def structured(report: Report, fmt: ReportFormat) -> str:
        """Machine-readable record of ``report``."""
        data = report.model_dump(mode="json", exclude_none=True)
        if fmt is ReportFormat.JSON:
            return json.dumps(data, indent=2)
        return yaml.safe_dump(data, sort_keys=False, allow_unicode=True)

    def render(self, report: Report, fmt: ReportFormat = ReportFormat.TEXT) -> str:
        logger.debug("rendering %s report as %s", report.command, fmt.value)
        if fmt is ReportFormat.TEXT:
            return self.text(report)
        return self.structured(report, fmt)
