# Output Emitters
"""Human, JSON and CSV renderings of a CommandReport.

Machine formats print floats with 12 significant digits, write non-finite
floats as null (JSON) or an empty cell (CSV), and never depend on
the locale, so identical reports give byte-identical files.
"""
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Optional

from cli.models import CommandReport

SIGNIFICANT_DIGITS = 12


def _round(value: float) -> Optional[float]:
    if not math.isfinite(value):
        return None
    return float(f"{value:.{SIGNIFICANT_DIGITS}g}")


def normalize(value: Any) -> Any:
    """Round every float in a nested structure to the machine precision."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        return _round(value)
    if isinstance(value, dict):
        return {key: normalize(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [normalize(item) for item in value]
    return value


def _cell(value: Any) -> str:
    if value is None or (isinstance(value, float) and not math.isfinite(value)):
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    return str(value)


def render_json(report: CommandReport) -> str:
    payload = normalize(report.model_dump(mode="json"))
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_csv(report: CommandReport) -> str:
    """Rows only, header taken from the first row's keys."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if report.rows:
        header = list(report.rows[0].keys())
        writer.writerow(header)
        for row in report.rows:
            writer.writerow([_cell(row.get(key)) for key in header])
    else:
        header = list(report.summary.keys())
        writer.writerow(header)
        writer.writerow([_cell(report.summary[key]) for key in header])
    return buffer.getvalue()


def _human_cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return _cell(value)


def render_human(report: CommandReport) -> str:
    """Aligned table preceded by the summary block."""
    status = "PASS" if report.passed else "FAIL"
    lines = [f"gapbound {report.command}: {status}"]
    for key, value in report.summary.items():
        lines.append(f"  {key}: {_human_cell(value)}")
    for warning in report.warnings:
        lines.append(f"  warning: {warning}")
    if report.rows:
        header = list(report.rows[0].keys())
        table = [header] + [[_human_cell(row.get(key)) for key in header] for row in report.rows]
        widths = [max(len(line[i]) for line in table) for i in range(len(header))]
        lines.append("")
        for index, line in enumerate(table):
            lines.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())
            if index == 0:
                lines.append("  ".join("-" * width for width in widths))
    return "\n".join(lines) + "\n"


RENDERERS = {
    "human": render_human,
    "json": render_json,
    "csv": render_csv,
}


def emit(report: CommandReport, output: str = "human", output_path: Optional[str] = None) -> str:
    """Render the report and write it to output_path or stdout."""
    text = RENDERERS[output](report)
    if output_path:
        Path(output_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return text
