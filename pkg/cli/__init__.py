"""Command-line surface for gapbound."""
from cli.commands import build_parser, run
from cli.models import CommandReport, ReproduceRow, RunConfig
from cli.output import emit, render_csv, render_human, render_json

__all__ = [
    "build_parser",
    "run",
    "CommandReport",
    "ReproduceRow",
    "RunConfig",
    "emit",
    "render_csv",
    "render_human",
    "render_json",
]
